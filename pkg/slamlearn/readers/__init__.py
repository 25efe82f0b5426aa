from .csv import *
from .patterns import *
from .config import *
from .slam_npy import *

# construct a dictionary of available readers
available_readers = {k: globals()[k] for k in globals() if k[0:5] == "from_"}


def guess_reader(filepath, format=None):
    """
    A wrapper to guess the appropriate reader from the filename
    (and possibly an explicitly-set file format string).

    Parameters
    ----------
    filepath : str
        The path to the file.
    format : str, None
        The file format to use.
    """
    from fnmatch import fnmatch

    # if format='abcdefgh', return the `from_abcdefgh` function
    if format is not None:
        try:
            return available_readers[f"from_{format}"]
        except KeyError:
            raise ValueError(
                f"🧩 No reader for format '{format}'; try one of {list(available_readers)}."
            )
    # does it look like a .slam.npy file?
    elif fnmatch(filepath, "*.slam.npy"):
        return from_slam_npy
    # does it look like a response matrix?
    elif fnmatch(filepath.lower(), "*.csv") or fnmatch(filepath.lower(), "*.txt"):
        return from_responses_csv
    else:
        raise ValueError(
            f"""
            🧩 We're having trouble guessing the input format from the filename
            {filepath}
            Please try specifying a `format=` keyword.
            """
        )
