"""
Objectives and selection criteria.
"""

from ..imports import *
from ..response_models import *

__all__ = ["digamma", "log_rho", "penalized_objective", "ebic"]


def digamma(x):
    """
    The digamma function Ψ(x) = d log Γ(x) / dx, for x > 0.
    """
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise ValueError("🧩 digamma is only used here for positive arguments.")
    y = scipy_digamma(x)
    return float(y) if y.ndim == 0 else y


def log_rho(p, rho):
    """
    The truncated logarithm: log p above ρ, log ρ at or below it.
    """
    p = np.asarray(p, dtype=float)
    return np.log(np.maximum(p, rho))


def penalized_objective(Theta, p, R, lam, rho):
    """
    ℓ(Θ, p) + λ Σ_α log_ρ(p_α).
    """
    if not (0 < rho < 1):
        raise ValueError(f"🧩 ρ must be in (0, 1) (got {rho}).")
    return log_likelihood(Theta, p, R) + lam * float(np.sum(log_rho(p.values, rho)))


def ebic(loglik, k, N, L, gamma=1.0):
    """
    The extended Bayesian information criterion

        -2ℓ + k log N + 2γ log C(L, k)

    for a model with k selected patterns out of L candidates.
    """
    if not (0 <= gamma <= 1):
        raise ValueError(f"🧩 EBIC γ must be in [0, 1] (got {gamma}).")
    if not (0 <= k <= L):
        raise ValueError(f"🧩 Can't select k={k} patterns out of L={L}.")
    if N < 1:
        raise ValueError(f"🧩 EBIC needs N ≥ 1 (got {N}).")
    log_binomial = gammaln(L + 1) - gammaln(k + 1) - gammaln(L - k + 1)
    return float(-2 * loglik + k * np.log(N) + 2 * gamma * log_binomial)
