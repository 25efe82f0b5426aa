from ...imports import *

__all__ = ["subset"]


def subset(self, subjects=None):
    """
    Keep only some of the subjects.

    Parameters
    ----------
    subjects : array, slice, optional
        Integer indices or a boolean mask over subjects.
        None keeps everyone (a plain copy).

    Returns
    -------
    new : SLAMData
        A new object; this one is left alone.
    """
    # create a history entry for this action (before other variables are defined)
    h = self._create_history_entry("subset", locals())

    new = self._create_copy()
    if subjects is not None:
        if isinstance(subjects, slice):
            i = np.arange(self.N)[subjects]
        else:
            i = np.asarray(subjects)
            if i.dtype == bool:
                if i.shape != (self.N,):
                    raise ValueError(f"🧩 A subject mask needs {self.N} entries, not {i.shape}.")
                i = np.flatnonzero(i)
            elif np.any((i < -self.N) | (i >= self.N)):
                raise ValueError(f"🧩 Subject indices must be within 0..{self.N - 1}.")
        for k in new.subjectlike:
            new.subjectlike[k] = new.subjectlike[k][i]
        for k in new.responselike:
            new.responselike[k] = new.responselike[k][i, :]
        new._validate_core_dictionaries()

    # append the history entry to the new object
    new._record_history_entry(h)
    return new
