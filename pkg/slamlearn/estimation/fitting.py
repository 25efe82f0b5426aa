"""
Penalized EM, fractional-power variational EM, and plain EM
for structured latent attribute models.
"""

from ..imports import *
from ..patterns import *
from ..response_models import *
from .config import *
from .results import *
from .estep import _posterior
from .msteps import cell_rates, initial_cell_theta, pool_monotone
from .criteria import *

__all__ = ["pem_fit", "fpvem_fit", "em_fit", "fit", "refit_proportions"]


def _cells_to_theta(cell_theta, cells):
    return np.take_along_axis(cell_theta, cells, axis=1)


def _item_params(cell_theta, n_cells, model):
    if model == "two-param":
        return TwoParamItemParams(cell_theta[:, 1], cell_theta[:, 0], strict=False)
    return [cell_theta[j, :n].copy() for j, n in enumerate(n_cells)]


def _starting_state(init, A, cells, n_cells, Q, config, N):
    """
    Initial (cell_theta, Δ), either default or warm-started from a previous fit.
    """
    L = len(A)
    if config.algorithm == "fpvem":
        floor = config.beta
        default_delta = np.full(L, config.beta)
    else:
        floor = config.c
        default_delta = np.full(L, max(N / L, config.c))

    if init is None:
        return initial_cell_theta(Q, config.model, n_cells), default_delta

    if not isinstance(init, FitResult):
        raise TypeError(f"🧩 init must be a FitResult (or None), not {type(init)}.")
    if init.config.model != config.model or init.cell_theta.shape[0] != Q.J:
        raise ValueError("🧩 A warm start must come from a fit of the same model and items.")
    cell_theta = init.cell_theta.copy()
    if cell_theta.shape[1] < int(n_cells.max()):
        raise ValueError("🧩 The warm start's item cells don't match this Q-matrix.")

    i = init.patterns.indices(A)
    delta = np.where(i >= 0, init.delta[np.maximum(i, 0)], floor)
    delta = np.maximum(delta, floor if config.algorithm != "em" else 0.0)
    if not np.any(delta > 0):
        delta = default_delta
    return cell_theta, delta


def _restricted_loglik(theta, p, selected_mask, R):
    if not np.any(selected_mask):
        return -np.inf
    q = p[selected_mask] / p[selected_mask].sum()
    terms = loglik_matrix(theta[:, selected_mask], R) + log_proportions(q)[np.newaxis, :]
    return float(np.sum(logsumexp(terms, axis=1)))


def fit(R, Q, A, config=None, init=None):
    """
    Fit a structured latent attribute model over candidate patterns.

    Which estimator runs is set by `config.algorithm`:

    - "pem" updates Δ_l = max(c, λ + Σ_i φ_il), so that patterns
      with too little posterior mass are pushed down to the floor c.
    - "fpvem" computes memberships with weights exp(Ψ(Δ)) and the
      likelihood raised to the power Υ, then sets Δ = β + Υ Σ_i φ.
    - "em" is the unpenalized EM (Δ = Σ_i φ).

    In every case the selected patterns are those whose final
    proportion Δ / ΣΔ exceeds ρ, and EBIC is computed for the model
    restricted to them.

    Parameters
    ----------
    R : array
        The (N, J) binary responses.
    Q : QMatrix, array
        The (J, K) Q-matrix.
    A : PatternSet
        The L candidate patterns.
    config : FitConfig, optional
    init : FitResult, optional
        A previous fit to warm-start from.

    Returns
    -------
    fit : FitResult
    """
    config = config or FitConfig()
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    A = A if isinstance(A, PatternSet) else PatternSet(A)
    if len(A) == 0:
        raise ValueError("🧩 There must be at least one candidate pattern.")
    if A.K != Q.K:
        raise ValueError(f"🧩 Patterns have K={A.K}, but the Q-matrix has K={Q.K}.")
    R = check_responses(R, J=Q.J)
    N, L = R.shape[0], len(A)
    config = config.resolve(N, L)

    cells, n_cells = cell_index(Q, A, config.model)
    cell_theta, delta = _starting_state(init, A, cells, n_cells, Q, config, N)
    cell_theta, clamp_events = clamp_theta(cell_theta)
    fallback_events, floor_events, pool_events = 0, 0, 0
    pooled = np.array([], dtype=np.int64)
    penalty = {"pem": config.lam, "fpvem": (config.beta - 1) / config.upsilon, "em": 0.0}[
        config.algorithm
    ]

    trace = dict(loglik=[], objective=[], floored=[], crossed=[])
    converged = False
    iteration = 0
    for iteration in range(1, int(config.max_iter) + 1):
        theta = _cells_to_theta(cell_theta, cells)
        p_old = delta / delta.sum()

        if config.algorithm == "fpvem":
            phi, _ = _posterior(theta, digamma(delta), R, power=config.upsilon)
            loglik = float(
                np.sum(logsumexp(loglik_matrix(theta, R) + log_proportions(p_old), axis=1))
            )
        else:
            phi, norm = _posterior(theta, log_proportions(delta), R)
            loglik = float(norm.sum() - N * np.log(delta.sum()))
        mass = phi.sum(axis=0)

        if config.algorithm == "pem":
            raw = config.lam + mass
            delta_new = np.maximum(config.c, raw)
            floored = raw < config.c
        elif config.algorithm == "fpvem":
            delta_new = config.beta + config.upsilon * mass
            floored = np.zeros(L, dtype=bool)
        else:
            delta_new = mass
            floored = np.zeros(L, dtype=bool)
        floor_events += int(np.sum(floored))

        rates, fallbacks, cell_mass = cell_rates(phi, R, cells, cell_theta, return_mass=True)
        rates, pooled = pool_monotone(rates, cell_mass, n_cells)
        rates, clamped = clamp_theta(rates)
        pool_events += len(pooled)
        fallback_events += fallbacks
        clamp_events += clamped

        objective = loglik + penalty * float(np.sum(log_rho(p_old, config.rho)))
        if not (np.isfinite(loglik) and np.isfinite(objective)):
            raise RuntimeError(
                f"🧩 The objective became non-finite at iteration {iteration} of this fit."
            )
        p_new = delta_new / delta_new.sum()
        trace["loglik"].append(loglik)
        trace["objective"].append(objective)
        trace["floored"].append(bool(np.any(floored)))
        trace["crossed"].append(bool(np.any((p_old > config.rho) != (p_new > config.rho))))

        change = max(
            float(np.max(np.abs(p_new - p_old))),
            float(np.nanmax(np.abs(rates - cell_theta))),
        )
        delta, cell_theta = delta_new, rates
        if change < config.tol:
            converged = True
            break

    if not converged:
        cheerfully_suggest(
            f"""
            The {config.algorithm} fit didn't converge within
            {config.max_iter} iterations (tol={config.tol}).
            """
        )
    if len(pooled):
        cheerfully_suggest(
            f"""
            Item(s) {list(map(int, pooled))} still needed their
            capable and incapable response probabilities pooled at the
            last {config.algorithm} iteration, so they don't separate
            the candidate patterns there.
            """
        )

    theta = _cells_to_theta(cell_theta, cells)
    Theta = ThetaMatrix(theta, A)
    p = ProportionVector.from_weights(delta, A)
    loglik = log_likelihood(Theta, p, R)
    objective = loglik + penalty * float(np.sum(log_rho(p.values, config.rho)))
    mask = p.values > config.rho
    selected = A[np.flatnonzero(mask)]
    selected_loglik = _restricted_loglik(theta, p.values, mask, R)
    k = int(np.sum(mask))
    criterion = ebic(selected_loglik, k, N, L, config.gamma) if k > 0 else np.inf

    logger.info(
        f"{config.algorithm} fit: {iteration} iterations, "
        f"{k} of {L} patterns selected, EBIC={criterion:.3f}"
    )
    return FitResult(
        config=config,
        patterns=A,
        theta=Theta,
        item_params=_item_params(cell_theta, n_cells, config.model),
        cell_theta=cell_theta,
        p=p,
        delta=delta,
        selected=selected,
        loglik=loglik,
        selected_loglik=selected_loglik,
        objective=objective,
        ebic=criterion,
        iterations=iteration,
        converged=converged,
        clamp_events=clamp_events,
        fallback_events=fallback_events,
        floor_events=floor_events,
        pool_events=pool_events,
        trace=trace,
    )


def pem_fit(R, Q, A, config=None, init=None, **kw):
    """
    Penalized EM with a truncated log penalty on the proportions.

    Keyword arguments (like `lam=-1.0`) override fields of `config`.
    """
    config = (config or FitConfig()).replace(algorithm="pem", **kw)
    return fit(R, Q, A, config=config, init=init)


def fpvem_fit(R, Q, A, config=None, init=None, **kw):
    """
    Fractional-power variational EM with a sparse Dirichlet prior.
    With `upsilon=1` this is ordinary variational EM.
    """
    config = (config or FitConfig()).replace(algorithm="fpvem", **kw)
    return fit(R, Q, A, config=config, init=init)


def em_fit(R, Q, A, config=None, init=None, **kw):
    """
    Unpenalized EM, followed by thresholding at ρ.
    """
    config = (config or FitConfig()).replace(algorithm="em", **kw)
    return fit(R, Q, A, config=config, init=init)


def refit_proportions(R, Q, result, config=None):
    """
    Re-estimate an unpenalized model over only the patterns a
    previous fit selected, warm-started from that fit.
    """
    if result.support_size == 0:
        raise ValueError("🧩 The fit selected no patterns, so there's nothing to refit.")
    config = (config or result.config).replace(algorithm="em", rho=result.config.rho)
    return fit(R, Q, result.selected, config=config, init=result)
