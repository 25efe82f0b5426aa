from ..imports import *
from ..patterns import QMatrix
from ..response_models import check_responses
from ..readers import *

__all__ = ["SLAMData"]


class SLAMData:
    """
    `SLAMData` objects hold binary item responses for N subjects
    on J items, together with the J×K Q-matrix saying which
    attributes each item requires.

    Screening and estimation are available as methods, and every
    action is recorded in a copy-pasteable history.
    `SimulatedSLAMData` inherits from `SLAMData`.

    Attributes
    ----------
    subjectlike : dict
        A dictionary for quantities with shape `(N,)`,
        for which there's one value for each subject.
    itemlike : dict
        A dictionary for quantities with one entry (or row)
        per item; `itemlike['q']` is the (J, K) Q-matrix.
    responselike : dict
        A dictionary for quantities with shape `(N, J)`,
        like `responselike['responses']`.
    metadata : dict
        A dictionary containing all other useful information
        that should stay connected to the data, in any format.
    """

    # all SLAMData must contain these core dictionaries
    _core_dictionaries = ["subjectlike", "itemlike", "responselike", "metadata"]

    def __init__(
        self,
        filepath=None,
        format=None,
        responses=None,
        Q=None,
        subjectlike=None,
        itemlike=None,
        responselike=None,
        metadata=None,
        name=None,
        **kw,
    ):
        """
        Initialize a `SLAMData` object.

        Parameters
        ----------
        filepath : str, optional
            A file to read (`.slam.npy`, or a `.csv` of responses,
            in which case `Q=` should point to the Q-matrix).
        format : str, optional
            The file format; guessed from the filepath if None.
        responses : array, optional
            An (N, J) array of 0s and 1s.
        Q : QMatrix, array, str, optional
            The (J, K) Q-matrix (or, when reading a CSV, its path).
        subjectlike, itemlike, responselike, metadata : dict, optional
            Core dictionaries, for example from a saved file.
        name : str, optional
            A name for this dataset.
        **kw : dict, optional
            Extra arrays (sorted into core dictionaries by shape)
            or, when reading files, keywords for the reader.

        Examples
        --------
        ```
        d1 = SLAMData(responses=np.array([[1, 0], [0, 1]]), Q=[[1, 0], [0, 1]])
        d2 = SLAMData("responses.csv", Q="q.csv")
        ```
        """
        # create a history entry for this action (before other variables are defined)
        h = self._create_history_entry("SLAMData", locals())

        # metadata are arbitrary types of information we need
        self.metadata = {"name": name}

        # subjectlike quantities are 1D arrays with N elements
        self.subjectlike = {}

        # itemlike quantities have J rows
        self.itemlike = {}

        # responselike quantities are 2D arrays with N x J elements
        self.responselike = {}

        # try to intialize from the exact dictionaries needed
        if type(responselike) == dict and type(itemlike) == dict:
            self._initialize_from_dictionaries(
                subjectlike=subjectlike or {},
                itemlike=itemlike,
                responselike=responselike,
                metadata=metadata or {},
            )
        # then try to initialize from arrays
        elif responses is not None:
            self._initialize_from_arrays(responses=responses, Q=Q, **kw)
            if metadata is not None:
                self.metadata.update(**metadata)
        # then try to initialize from a file
        elif isinstance(filepath, str):
            if Q is not None:
                kw["Q"] = Q
            self._initialize_from_file(filepath=filepath, format=format, **kw)

        # append the history entry to this object
        self._setup_history()
        self._record_history_entry(h)

    def _initialize_from_dictionaries(
        self, subjectlike={}, itemlike={}, responselike={}, metadata={}
    ):
        """
        Populate from dictionaries in the correct format.
        """
        # multiplying by 1 is a kludge to prevent accidental links
        for k in subjectlike:
            self.subjectlike[k] = subjectlike[k] * 1
        for k in itemlike:
            self.itemlike[k] = itemlike[k] * 1
        for k in responselike:
            self.responselike[k] = responselike[k] * 1

        self.metadata.update(**metadata)
        self._validate_core_dictionaries()

    def _get_core_dictionaries(self):
        """
        Get the core dictionaries of this object.

        Returns
        -------
        core : dict
            Dictionary containing the keys
            ['subjectlike', 'itemlike', 'responselike', 'metadata']
        """
        return {k: vars(self)[k] for k in self._core_dictionaries}

    def _initialize_from_arrays(self, responses=None, Q=None, **kw):
        """
        Populate from arrays.

        Parameters
        ----------
        responses : array
            An (N, J) array of 0s and 1s.
        Q : QMatrix, array
            The (J, K) Q-matrix.
        **kw : dict, optional
            Additional arrays, sorted by their shape.
        """
        if Q is None:
            raise ValueError("🧩 SLAMData needs a Q-matrix alongside the responses.")
        self.itemlike["q"] = np.array(QMatrix(Q).entries)
        self.responselike["responses"] = check_responses(responses) * 1

        for k, v in kw.items():
            self._put_array_in_right_dictionary(k, v)

        self._validate_core_dictionaries()

    def _put_array_in_right_dictionary(self, k, v):
        """
        Sort an input into the right core dictionary
        (subjectlike, itemlike, responselike) based on its shape.
        """
        if np.shape(v) == self.shape:
            self.responselike[k] = v * 1
        elif np.shape(v)[:1] == (self.N,) and self.N != self.J:
            self.subjectlike[k] = v * 1
        elif np.shape(v)[:1] == (self.J,) and self.N != self.J:
            self.itemlike[k] = v * 1
        else:
            raise ValueError(f"🧩 '{k}' doesn't fit anywhere!")

    def _initialize_from_file(self, filepath=None, format=None, **kw):
        """
        Populate from a file, through the reader registry.
        """
        # make sure we're dealing with a real filename
        assert filepath is not None

        # pick the appropriate reader
        reader = guess_reader(filepath=filepath, format=format)
        reader(self, filepath, **kw)

        self._validate_core_dictionaries()

    def _create_copy(self):
        """
        Create a copy of self, with the core dictionaries copied.
        """
        # skip __init__, so subclasses don't redo their setup
        new = type(self).__new__(type(self))
        for k in self._core_dictionaries:
            new.__dict__[k] = {}
        new._initialize_from_dictionaries(**copy.deepcopy(self._get_core_dictionaries()))
        return new

    def _validate_core_dictionaries(self):
        """
        Make sure the responses, Q-matrix, and other arrays line up.
        """
        if self.responses is None or "q" not in self.itemlike:
            return

        self.responselike["responses"] = check_responses(self.responses)
        Q = QMatrix(self.itemlike["q"])
        if Q.J != self.J:
            raise ValueError(
                f"🧩 The responses have {self.J} items, but the Q-matrix has {Q.J} rows."
            )
        for k, v in self.subjectlike.items():
            if len(v) != self.N:
                raise ValueError(f"🧩 subjectlike['{k}'] has {len(v)} entries, not N={self.N}.")
        for k, v in self.itemlike.items():
            if len(v) != self.J:
                raise ValueError(f"🧩 itemlike['{k}'] has {len(v)} entries, not J={self.J}.")
        for k, v in self.responselike.items():
            if np.shape(v) != self.shape:
                raise ValueError(f"🧩 responselike['{k}'] has shape {np.shape(v)}, not {self.shape}.")

    @property
    def name(self):
        """
        The name of this `SLAMData` object.
        """
        return self.metadata.get("name", None)

    @property
    def responses(self):
        """
        The (N, J) array of 0/1 responses.
        """
        return self.responselike.get("responses", None)

    @property
    def Q(self):
        """
        The Q-matrix, as a `QMatrix`.
        """
        if "q" not in self.itemlike:
            return None
        return QMatrix(self.itemlike["q"])

    @property
    def N(self):
        return 0 if self.responses is None else self.responses.shape[0]

    @property
    def J(self):
        return 0 if self.responses is None else self.responses.shape[1]

    @property
    def K(self):
        return 0 if "q" not in self.itemlike else np.shape(self.itemlike["q"])[1]

    @property
    def shape(self):
        return (self.N, self.J)

    def __getattr__(self, key):
        """
        If an attribute/method isn't explicitly defined,
        try to pull it from one of the core dictionaries.

        Parameters
        ----------
        key : str
            The attribute we're trying to get.
        """
        if key not in self._core_dictionaries:
            for dictionary_name in self._core_dictionaries:
                try:
                    return self.__dict__[dictionary_name][key]
                except KeyError:
                    pass
        message = f"🧩.{key} does not exist for this SLAMData"
        raise AttributeError(message)

    def __setattr__(self, key, value):
        """
        When setting a new attribute, try to sort it into the
        appropriate core dictionary based on its shape.
        """
        try:
            if key in self._core_dictionaries:
                raise ValueError("Trying to set a core dictionary.")
            elif isinstance(value, str):
                self.metadata[key] = value
            else:
                self._put_array_in_right_dictionary(key, value)
        except (AttributeError, ValueError, KeyError):
            self.__dict__[key] = value

    def __eq__(self, other):
        """
        Two `SLAMData` are equal if their responses and Q-matrices match.
        """
        if not isinstance(other, SLAMData):
            return NotImplemented
        return np.array_equal(self.responses, other.responses) and np.array_equal(
            self.itemlike.get("q"), other.itemlike.get("q")
        )

    __hash__ = None

    def __repr__(self):
        """
        How should this object be represented as a string?
        """
        n = self.__class__.__name__
        if self.name is not None:
            n += f"'{self.name}'"
        return f"<{n}({self.N}n, {self.J}j, {self.K}k)>"

    # import actions that run analyses or return new SLAMData
    from .actions import (
        _candidates,
        screen,
        fit,
        path,
        fit_equivalence_classes,
        subset,
    )

    from .helpers import (
        _setup_history,
        _record_history_entry,
        _remove_last_history_entry,
        _create_history_entry,
        history,
        save,
    )
