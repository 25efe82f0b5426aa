"""
The observed-data likelihood of a structured latent attribute model.
"""

from ..imports import *
from .theta import *

__all__ = [
    "check_responses",
    "loglik_matrix",
    "log_proportions",
    "log_likelihood",
    "response_pmf",
]


def check_responses(R, J=None):
    """
    Make sure a response matrix is a 2D array of 0s and 1s.

    Parameters
    ----------
    R : array
        The (N, J) binary responses.
    J : int, optional
        The number of items it must have.

    Returns
    -------
    R : array
        The responses as an `np.int8` array.
    """
    R = np.asarray(R)
    if R.ndim == 1:
        R = R[np.newaxis, :]
    if R.ndim != 2:
        raise ValueError(f"🧩 Responses must be a 2D (N, J) array, not shape {R.shape}.")
    if not np.all((R == 0) | (R == 1)):
        raise ValueError("🧩 Responses may only contain 0s and 1s (missing values aren't supported).")
    if J is not None and R.shape[1] != J:
        raise ValueError(f"🧩 Responses have {R.shape[1]} items, but J={J} was expected.")
    return R.astype(np.int8)


def loglik_matrix(theta, R):
    """
    Per-subject, per-pattern log-likelihoods
    Σ_j R_ij log θ_jl + (1 - R_ij) log(1 - θ_jl).

    Parameters
    ----------
    theta : array
        A (J, L) array of probabilities strictly inside (0, 1).
    R : array
        The (N, J) binary responses.

    Returns
    -------
    loglik : array
        An (N, L) array.
    """
    R = np.asarray(R, dtype=float)
    return R @ np.log(theta) + (1 - R) @ np.log1p(-theta)


def log_proportions(p):
    """
    log p, with log 0 = -inf and no warnings about it.
    """
    p = np.asarray(p, dtype=float)
    with np.errstate(divide="ignore"):
        return np.log(p)


def _check_aligned(Theta, p):
    if not Theta.patterns == p.patterns:
        raise ValueError("🧩 Θ columns and proportions must be labeled by the same patterns, in order.")
    if np.any(Theta.values <= 0) or np.any(Theta.values >= 1):
        raise ValueError(
            "🧩 The likelihood needs every θ strictly between 0 and 1 (some are exactly 0 or 1)."
        )


def log_likelihood(Theta, p, R):
    """
    The marginal log-likelihood

        Σ_i log Σ_α p_α ∏_j θ_jα^R_ij (1 - θ_jα)^(1 - R_ij)

    evaluated with a log-sum-exp over patterns for each subject.

    Parameters
    ----------
    Theta : ThetaMatrix
        Item response probabilities.
    p : ProportionVector
        Mixture proportions over the same patterns.
    R : array
        The (N, J) binary responses.

    Returns
    -------
    loglik : float
    """
    _check_aligned(Theta, p)
    R = check_responses(R, J=Theta.J)
    terms = loglik_matrix(Theta.values, R) + log_proportions(p.values)[np.newaxis, :]
    return float(np.sum(logsumexp(terms, axis=1)))


def response_pmf(Theta, p, responses):
    """
    The probability of one or more full response vectors.

    Returns
    -------
    probability : array
        One probability per row of `responses`.
    """
    _check_aligned(Theta, p)
    R = check_responses(responses, J=Theta.J)
    terms = loglik_matrix(Theta.values, R) + log_proportions(p.values)[np.newaxis, :]
    return np.exp(logsumexp(terms, axis=1))
