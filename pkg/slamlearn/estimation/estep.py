"""
The shared E-step: posterior pattern memberships for every subject.
"""

from ..imports import *
from ..response_models import *

__all__ = ["e_step"]


def _posterior(theta, log_weights, R, power=1.0):
    """
    Membership probabilities and the per-subject log normalizers.

    φ_il ∝ exp(log_weights_l + power * Σ_j log P(R_ij | θ_jl))
    """
    terms = power * loglik_matrix(theta, R) + log_weights[np.newaxis, :]
    norm = logsumexp(terms, axis=1)
    if not np.all(np.isfinite(norm)):
        bad = np.flatnonzero(~np.isfinite(norm))
        raise RuntimeError(
            f"""
            🧩 The posterior couldn't be normalized for {len(bad)} subject(s)
            (first: row {bad[0]}); every candidate pattern has zero weight
            or an infinite log-likelihood for them.
            """
        )
    phi = np.exp(terms - norm[:, np.newaxis])
    return phi, norm


def e_step(Theta, weights, R, power=1.0, log_weights=False):
    """
    Compute posterior pattern memberships φ.

    Parameters
    ----------
    Theta : ThetaMatrix, array
        The (J, L) item response probabilities, strictly inside (0, 1).
    weights : array
        Either unnormalized weights Δ or proportions p over the L
        patterns (the normalization cancels). With `log_weights=True`
        these are already on the log scale, as for the digamma
        weights of FP-VEM.
    R : array
        The (N, J) binary responses.
    power : float
        A fractional power applied to the likelihood.

    Returns
    -------
    phi : array
        An (N, L) array whose rows sum to 1.
    """
    theta = Theta.values if isinstance(Theta, ThetaMatrix) else np.asarray(Theta, dtype=float)
    R = check_responses(R, J=theta.shape[0])
    weights = np.asarray(weights, dtype=float).reshape(-1)
    if len(weights) != theta.shape[1]:
        raise ValueError(
            f"🧩 Got {len(weights)} weights for {theta.shape[1]} patterns."
        )
    if np.any(theta <= 0) or np.any(theta >= 1):
        raise ValueError("🧩 The E-step needs every θ strictly between 0 and 1.")
    if not log_weights:
        if np.any(weights < 0):
            raise ValueError("🧩 Pattern weights can't be negative.")
        weights = log_proportions(weights)
    phi, _ = _posterior(theta, weights, R, power=power)
    return phi
