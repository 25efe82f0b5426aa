"""
Drawing true patterns and responses.
"""

from ..imports import *
from ..patterns import *
from ..response_models import *
from .streams import named_rng
from .blocks import build_q_blocks
from .design import SimDesign
from dataclasses import dataclass

__all__ = ["gen_true_patterns", "gen_responses", "SimulationTruth", "simulate"]


def gen_true_patterns(K, m, seed=0):
    """
    Draw `m` distinct patterns uniformly from {0,1}^K.

    Returns
    -------
    patterns : PatternSet
        In canonical order.
    """
    K = check_K(K)
    if K < 64 and m > 2**K:
        raise ValueError(f"🧩 Can't draw {m} distinct patterns from 2^{K}.")
    if m < 0:
        raise ValueError(f"🧩 m must be nonnegative (got {m}).")
    rng = named_rng(seed, "patterns", K)
    if K <= MAXIMUM_ENUMERATION:
        codes = rng.choice(2**K, size=m, replace=False)
    else:
        codes = np.zeros(0, dtype=np.uint64)
        while len(codes) < m:
            more = bits_to_codes(rng.integers(0, 2, size=(m, K)))
            codes = PatternSet.from_codes(np.concatenate([codes, more]), K, unique=True).codes
        codes = codes[:m]
    return PatternSet.from_codes(np.sort(np.asarray(codes, dtype=np.uint64)), K)


def gen_responses(Theta, p, N, seed=0):
    """
    Draw each subject's pattern from p, then independent Bernoulli responses.

    Parameters
    ----------
    Theta : ThetaMatrix
        Response probabilities (exact 0s and 1s are fine here).
    p : ProportionVector
        Proportions over the same patterns.
    N : int
        The number of subjects.
    seed : int

    Returns
    -------
    R : array
        (N, J) responses as `np.int8`.
    assignments : array
        The index (into `p.patterns`) of each subject's pattern.
    """
    if not Theta.patterns == p.patterns:
        raise ValueError("🧩 Θ columns and proportions must be labeled by the same patterns.")
    assignments = named_rng(seed, "assignments").choice(len(p), size=int(N), p=p.values)
    probabilities = Theta.values[:, assignments].T
    R = named_rng(seed, "responses").random(probabilities.shape) < probabilities
    return R.astype(np.int8), assignments


@dataclass
class SimulationTruth:
    """
    The planted truth behind a simulated dataset.
    """

    design: SimDesign
    Q: QMatrix
    patterns: PatternSet
    proportions: ProportionVector
    item_params: object
    theta: ThetaMatrix
    assignments: np.ndarray

    def to_dict(self):
        return dict(
            design=self.design.to_dict(),
            patterns=self.patterns.strings(),
            proportions=self.proportions.values.tolist(),
            item_params=self.item_params.to_dict(),
            assignments=self.assignments.tolist(),
        )


def simulate(design):
    """
    Generate one dataset from a `SimDesign`.

    Returns
    -------
    R : array
        (N, 3K) binary responses.
    truth : SimulationTruth
    """
    Q = build_q_blocks(design.K)
    A0 = gen_true_patterns(design.K, design.n_true, design.seed)
    p = ProportionVector.uniform(A0)
    if design.model == "two-param":
        params = TwoParamItemParams.from_noise(Q.J, design.noise)
        Theta = theta_two_param(build_gamma(Q, A0), params)
    else:
        params = AllEffectItemParams.equal_effects(Q, design.base, design.top)
        Theta = theta_all_effect(Q, params, A0)
    R, assignments = gen_responses(Theta, p, design.N, design.seed)
    logger.debug(f"simulated {design.label} with {len(A0)} true patterns")
    return R, SimulationTruth(design, Q, A0, p, params, Theta, assignments)
