from .csv import *
from .patterns import *
from .json import *
from .table import *
from .dot import *
from .slam_npy import *

# construct a dictionary of available writers
available_writers = {k: globals()[k] for k in globals() if k[0:3] == "to_"}


def guess_writer(filepath, format=None):
    """
    A wrapper to guess the appropriate writer from the filename
    (and possibly an explicitly-set file format string).

    Parameters
    ----------
    filepath : str
        The path to the file to be written.
    format : str, None
        The file format to use.
    """
    from fnmatch import fnmatch

    # if format='abcdefgh', return the `to_abcdefgh` function
    if format is not None:
        try:
            return available_writers[f"to_{format}"]
        except KeyError:
            raise ValueError(
                f"🧩 No writer for format '{format}'; try one of {list(available_writers)}."
            )
    elif fnmatch(filepath, "*.slam.npy"):
        return to_slam_npy
    elif fnmatch(filepath.lower(), "*.csv") or fnmatch(filepath.lower(), "*.txt"):
        return to_responses_csv
    else:
        raise ValueError(
            f"""
            🧩 We're having trouble guessing the output format from the filename
            {filepath}
            Please try specifying a `format=` keyword to your `.save` call.
            """
        )
