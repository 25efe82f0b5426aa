"""
Readers for comma-separated 0/1 matrices.
"""

from ..imports import *
from ..patterns import QMatrix

__all__ = ["read_binary_csv", "read_qmatrix", "read_responses", "from_responses_csv"]


def read_binary_csv(filepath, what="matrix"):
    """
    Read a headerless CSV of 0s and 1s.

    Blank lines and anything after a "#" are ignored. Problems
    are reported with the 1-based line number where they occur.

    Parameters
    ----------
    filepath : str
        The path to the file.
    what : str
        What the matrix is, for error messages.

    Returns
    -------
    matrix : array
        A 2D `np.int8` array.
    """
    try:
        df = pd.read_csv(
            filepath,
            header=None,
            dtype=str,
            comment="#",
            skip_blank_lines=False,
            skipinitialspace=True,
        )
    except pd.errors.ParserError as e:
        raise ValueError(f"🧩 {filepath} isn't a rectangular {what}: {e}") from e
    except pd.errors.EmptyDataError:
        raise ValueError(f"🧩 {filepath} doesn't contain a {what}.")

    # rows that are entirely empty were blank lines or comments
    lines = np.arange(1, len(df) + 1)
    keep = ~df.isna().all(axis=1).to_numpy()
    df, lines = df[keep], lines[keep]
    if len(df) == 0:
        raise ValueError(f"🧩 {filepath} doesn't contain a {what}.")

    stripped = df.apply(lambda column: column.str.strip())
    missing = (stripped.isna() | (stripped == "")).to_numpy()
    values = stripped.to_numpy(dtype=object)
    if np.any(missing):
        row, column = np.argwhere(missing)[0]
        raise ValueError(
            f"🧩 {filepath}, line {lines[row]}: the {what} row is too short or has an empty entry (column {column + 1})."
        )
    binary = (values == "0") | (values == "1")
    if not np.all(binary):
        row, column = np.argwhere(~binary)[0]
        raise ValueError(
            f"🧩 {filepath}, line {lines[row]}: '{values[row, column]}' isn't 0 or 1 (column {column + 1} of the {what})."
        )
    return (values == "1").astype(np.int8)


def read_qmatrix(filepath):
    return QMatrix(read_binary_csv(filepath, what="Q-matrix"))


def read_responses(filepath):
    return read_binary_csv(filepath, what="response matrix")


def from_responses_csv(data, filepath, Q=None):
    """
    Populate a `SLAMData` from a CSV of responses.

    Parameters
    ----------
    data : SLAMData
        The object to be populated.
    filepath : str
        The responses, one subject per line.
    Q : QMatrix, str
        The Q-matrix, or the path to a CSV containing it.
    """
    if Q is None:
        raise ValueError(f"🧩 Reading responses from {filepath} also needs a Q-matrix.")
    if isinstance(Q, str):
        Q = read_qmatrix(Q)
    data._initialize_from_arrays(responses=read_responses(filepath), Q=Q)
