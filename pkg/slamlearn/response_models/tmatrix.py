"""
The T-matrix, a numerical check of the full-column-rank
arguments behind the identifiability conditions.
"""

from ..imports import *
from .params import *
from .theta import *

__all__ = ["t_matrix", "t_rank_probe"]


def t_matrix(G, Theta):
    """
    The 2^J × L matrix T with T[r, α] = ∏_{j: r_j = 1} θ_{j,α}.

    Row r is the response pattern whose item j is the j-th
    least significant bit of r, so for two items the rows
    are ordered 00, 10, 01, 11 (writing r_1 r_2).

    Parameters
    ----------
    G : GammaMatrix
        The constraint matrix (defines J and the column labels).
    Theta : ThetaMatrix
        Probabilities over the same columns.

    Returns
    -------
    T : array
    """
    if G.J > MAXIMUM_ENUMERATION:
        raise ValueError(
            f"🧩 A T-matrix for J={G.J} items would have 2^{G.J} rows; the limit is J <= {MAXIMUM_ENUMERATION}."
        )
    if Theta.J != G.J or not Theta.patterns == G.patterns:
        raise ValueError("🧩 Θ and Γ must cover the same items and patterns.")
    T = np.ones((1, G.L))
    for j in range(G.J):
        T = np.concatenate([T, T * Theta.values[j][np.newaxis, :]], axis=0)
    return T


def t_rank_probe(G, trials=5, seed=0, tolerance=1e-8):
    """
    Does a random valid two-parameter Θ respecting Γ give a
    T-matrix with full column rank, in every trial?

    Parameters
    ----------
    G : GammaMatrix
        The constraint matrix.
    trials : int
        How many random Θ to try.
    seed : int
        The random seed.
    tolerance : float
        Singular values below `tolerance` times the largest
        one count as zero.

    Returns
    -------
    full_rank : bool
    """
    if G.L > 2**G.J:
        return False
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        params = TwoParamItemParams(
            theta_plus=rng.uniform(0.55, 0.95, G.J),
            theta_minus=rng.uniform(0.05, 0.45, G.J),
        )
        T = t_matrix(G, theta_two_param(G, params))
        s = np.linalg.svd(T, compute_uv=False)
        if np.sum(s > tolerance * s[0]) < G.L:
            return False
    return True
