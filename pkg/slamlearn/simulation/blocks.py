from ..imports import *
from ..patterns import *

__all__ = ["build_q_blocks"]


def build_q_blocks(K):
    """
    The 3K×K block Q-matrix used by the simulation designs.

    The three K×K blocks are the identity, the identity plus the
    superdiagonal, and the tridiagonal matrix of ones. For K=3:

        100    110    110
        010    011    111
        001    001    011

    Parameters
    ----------
    K : int
        The number of attributes (at least 3).

    Returns
    -------
    Q : QMatrix
    """
    if int(K) < 3:
        raise ValueError(f"🧩 The block design needs K >= 3 (got K={K}).")
    K = check_K(K)
    identity = np.eye(K, dtype=int)
    upper = np.eye(K, k=1, dtype=int)
    lower = np.eye(K, k=-1, dtype=int)
    return QMatrix.stack([identity, identity + upper, identity + upper + lower])
