"""
Stochastic-approximation Gibbs screening of candidate patterns.

When 2^K is far larger than N, fitting over every pattern is out
of reach. Screening instead runs a stochastic EM for the
two-parameter model in which each outer iteration draws every
subject's attributes by Gibbs sampling, blends the draws into
running averages, and refreshes θ⁺/θ⁻ from those averages. The
candidates are the distinct rows of the thresholded averages.
"""

from ..imports import *
from ..patterns import *
from ..response_models import *
from ..simulation.streams import named_rng
from .config import *
from .results import *

__all__ = ["gibbs_conditional_prob", "gibbs_screen"]


def _check_theta(theta_plus, theta_minus):
    theta_plus = np.asarray(theta_plus, dtype=float)
    theta_minus = np.asarray(theta_minus, dtype=float)
    for t in [theta_plus, theta_minus]:
        if np.any(t <= 0) or np.any(t >= 1):
            raise ValueError("🧩 Screening needs every θ strictly between 0 and 1.")
    return theta_plus, theta_minus


def _evidence(theta_plus, theta_minus, R):
    """
    Per-(subject, item) log-likelihood ratios of being capable.
    """
    correct = np.log(theta_plus / theta_minus)
    wrong = np.log((1 - theta_plus) / (1 - theta_minus))
    return np.where(R == 1, correct[np.newaxis, :], wrong[np.newaxis, :])


def gibbs_conditional_prob(R_i, Q, theta, A_i, k):
    """
    The probability that subject i has attribute k, given the
    subject's responses and every other attribute.

    It is the logistic function of

        Σ_j q_jk ∏_{m≠k} A_im^q_jm [R_ij log(θ⁺_j/θ⁻_j)
                                    + (1 - R_ij) log((1-θ⁺_j)/(1-θ⁻_j))]

    Parameters
    ----------
    R_i : array
        The subject's J binary responses.
    Q : QMatrix
    theta : TwoParamItemParams
    A_i : AttributePattern, str, array
        The subject's current attributes (entry k is ignored).
    k : int
        The 0-based attribute to update.

    Returns
    -------
    probability : float
    """
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    if not (0 <= int(k) < Q.K):
        raise IndexError(f"🧩 Attribute {k} is out of range for K={Q.K}.")
    R_i = check_responses(R_i, J=Q.J)[0]
    tp, tm = _check_theta(theta.theta_plus, theta.theta_minus)
    others = np.array(AttributePattern.coerce(A_i, K=Q.K).bits)
    others[int(k)] = 1
    capable = np.all(others[np.newaxis, :] >= Q.entries, axis=1)
    w = _evidence(tp, tm, R_i[np.newaxis, :])[0]
    return float(expit(np.sum(Q.entries[:, int(k)] * capable * w)))


class _GibbsState:
    """
    Every subject's current attributes, stored as pattern codes.
    """

    method = "gibbs"

    def __init__(self, bits, Q, rng):
        self.K = Q.K
        self.codes = bits_to_codes(bits)
        self.q = Q.codes[np.newaxis, :]
        self.requires = Q.entries.T.astype(bool)
        self.rng = rng

    def sweep(self, W):
        for k in range(self.K):
            mask = np.uint64(1) << np.uint64(self.K - 1 - k)
            have = (self.codes | mask)[:, np.newaxis]
            capable = (have & self.q) == self.q
            logit = np.sum(np.where(capable & self.requires[k][np.newaxis, :], W, 0.0), axis=1)
            draw = self.rng.random(len(self.codes)) < expit(logit)
            self.codes = np.where(draw, self.codes | mask, self.codes & ~mask)

    def attributes(self):
        return codes_to_bits(self.codes, self.K)

    def ideal(self):
        return ((self.codes[:, np.newaxis] & self.q) == self.q).astype(float)


def _screen(R, Q, config, theta, make_state):
    """
    The outer stochastic-approximation loop shared by both screens.
    """
    config = config or ScreenConfig()
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    R = check_responses(R, J=Q.J)
    N, J = R.shape
    K = Q.K

    if theta is None:
        tp, tm = np.full(J, config.theta_plus), np.full(J, config.theta_minus)
    else:
        if theta.J != J:
            raise ValueError(f"🧩 Starting θ covers {theta.J} items, but Q has {J}.")
        tp, tm = _check_theta(theta.theta_plus.copy(), theta.theta_minus.copy())

    rng = named_rng(config.seed, "screening")
    state = make_state(rng.integers(0, 2, size=(N, K)), Q, rng)

    a_ave = np.zeros((N, K))
    i_ave = np.zeros((N, J))
    snapshots = []
    fallback_events = 0
    converged = False
    t = 0
    outer = range(1, config.max_outer + 1)
    for t in tqdm(outer, leave=False) if config.progress else outer:
        W = _evidence(tp, tm, R)
        a_sum, i_sum = np.zeros((N, K)), np.zeros((N, J))
        for r in range(config.m_max):
            state.sweep(W)
            if r >= config.m_max - config.m_eff:
                a_sum += state.attributes()
                i_sum += state.ideal()

        blended = (1 - 1 / t) * a_ave + (1 / t) * a_sum / config.m_eff
        i_ave = (1 - 1 / t) * i_ave + (1 / t) * i_sum / config.m_eff
        change = float(np.max(np.abs(blended - a_ave)))
        a_ave = blended

        if config.update_theta:
            capable, incapable = i_ave.sum(axis=0), (1 - i_ave).sum(axis=0)
            empty = (capable <= 0) | (incapable <= 0)
            fallback_events += int(np.sum(empty))
            with np.errstate(divide="ignore", invalid="ignore"):
                tp = np.where(capable > 0, (R * i_ave).sum(axis=0) / capable, tp)
                tm = np.where(incapable > 0, (R * (1 - i_ave)).sum(axis=0) / incapable, tm)
            tp, _ = clamp_theta(tp)
            tm, _ = clamp_theta(tm)

        if config.enhance_period is not None and t % config.enhance_period == 0:
            snapshots.append(binarize(a_ave, K))

        logger.debug(f"screening iteration {t}: largest change {change:.2e}")
        if t >= 2 and change < config.tol:
            converged = True
            break

    final = binarize(a_ave, K)
    a_screen = enhance_union(snapshots, final) if snapshots else final
    gap = tp - tm
    gap_violations = int(np.sum(gap < config.delta_gap)) if config.delta_gap > 0 else 0
    if np.any(gap <= 0) or gap_violations:
        bad = np.flatnonzero((gap <= 0) | (gap < config.delta_gap))
        cheerfully_suggest(
            f"""
            After screening, items {list(bad)} have θ⁺ - θ⁻ below the
            required gap ({config.delta_gap}); their responses barely
            inform the attributes.
            """
        )
    logger.info(
        f"{state.method} screening kept {len(a_screen)} candidate patterns "
        f"after {t} iterations"
    )
    return ScreenResult(
        a_screen=a_screen,
        a_ave=a_ave,
        theta=TwoParamItemParams(tp, tm, strict=False),
        snapshots_used=len(snapshots),
        iterations=t,
        converged=converged,
        fallback_events=fallback_events,
        gap_violations=gap_violations,
        method=state.method,
    )


def gibbs_screen(R, Q, config=None, theta=None):
    """
    Screen candidate patterns with Gibbs-sampling stochastic EM.

    Parameters
    ----------
    R : array
        The (N, J) binary responses.
    Q : QMatrix
    config : ScreenConfig, optional
    theta : TwoParamItemParams, optional
        Starting item parameters (otherwise from `config`).

    Returns
    -------
    result : ScreenResult
    """
    return _screen(R, Q, config, theta, _GibbsState)
