from ..imports import *

__all__ = ["write_binary_csv", "to_responses_csv"]


def write_binary_csv(filepath, matrix):
    """
    Write a 0/1 matrix as a headerless CSV, one row per line.
    """
    matrix = np.asarray(matrix)
    if matrix.ndim != 2:
        raise ValueError(f"🧩 Can only write 2D matrices, not shape {matrix.shape}.")
    np.savetxt(filepath, matrix.astype(int), fmt="%d", delimiter=",")


def to_responses_csv(self, filepath, Q=None):
    """
    Write a `SLAMData`'s responses (and optionally its Q-matrix) as CSV.

    Parameters
    ----------
    self : SLAMData
        The object to be saved.
    filepath : str
        Where the responses go.
    Q : str, optional
        Where the Q-matrix goes, if it should be written too.
    """
    write_binary_csv(filepath, self.responses)
    if Q is not None:
        write_binary_csv(Q, self.Q.entries)
