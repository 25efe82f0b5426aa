"""
Item response probability matrices and mixture proportions.
"""

from ..imports import *
from ..patterns import *
from .params import *

__all__ = [
    "MODELS",
    "THETA_FLOOR",
    "ThetaMatrix",
    "ProportionVector",
    "check_model",
    "cell_index",
    "clamp_theta",
    "theta_two_param",
    "theta_all_effect",
]

MODELS = ["two-param", "all-effect"]

# estimation keeps every θ inside [THETA_FLOOR, 1 - THETA_FLOOR]
THETA_FLOOR = 1e-6


def check_model(model):
    if model not in MODELS:
        raise ValueError(f"🧩 model must be one of {MODELS}, not '{model}'.")
    return model


class ThetaMatrix:
    """
    A J×L matrix of item response probabilities θ_{j,α},
    with columns labeled by a `PatternSet`.
    """

    def __init__(self, values, patterns, allow_endpoints=False):
        """
        Initialize a `ThetaMatrix`.

        Parameters
        ----------
        values : array
            The (J, L) probabilities.
        patterns : PatternSet
            The L column labels.
        allow_endpoints : bool
            Simulation may use probabilities of exactly 0 or 1,
            but anything that takes logs needs the open interval.
        """
        values = np.array(values, dtype=float)
        if values.ndim != 2:
            raise ValueError(f"🧩 Θ must be 2D, not shape {values.shape}.")
        patterns = patterns if isinstance(patterns, PatternSet) else PatternSet(patterns)
        if values.shape[1] != len(patterns):
            raise ValueError(
                f"🧩 Θ has {values.shape[1]} columns but {len(patterns)} patterns."
            )
        if allow_endpoints:
            ok = (values >= 0) & (values <= 1)
        else:
            ok = (values > 0) & (values < 1)
        if not np.all(ok):
            raise ValueError(
                f"""
                🧩 Θ entries must lie in {'[0, 1]' if allow_endpoints else '(0, 1)'};
                {np.sum(~ok)} entries don't.
                """
            )
        values.setflags(write=False)
        self.values = values
        self.patterns = patterns

    @property
    def J(self):
        return self.values.shape[0]

    @property
    def L(self):
        return self.values.shape[1]

    def column(self, pattern):
        return self.values[:, self.patterns.index(pattern)]

    def select(self, patterns):
        """
        A new `ThetaMatrix` with only some of the columns.
        """
        patterns = PatternSet(patterns, K=self.patterns.K)
        i = self.patterns.indices(patterns)
        if np.any(i < 0):
            raise ValueError("🧩 Some requested patterns aren't columns of this Θ.")
        return ThetaMatrix(self.values[:, i], patterns)

    def satisfies_constraints(self, Q, atol=0.0):
        """
        Do all patterns in each item's constraint set share one value?
        """
        G = build_gamma(Q, self.patterns)
        for j in range(self.J):
            top = self.values[j, G.entries[j] == 1]
            if len(top) > 1 and np.ptp(top) > atol:
                return False
        return True

    def __repr__(self):
        return f"<ThetaMatrix J={self.J} L={self.L}>"


class ProportionVector:
    """
    Nonnegative mixture proportions p_α summing to one,
    labeled by a `PatternSet`.
    """

    def __init__(self, values, patterns, atol=1e-10):
        values = np.array(values, dtype=float).reshape(-1)
        patterns = patterns if isinstance(patterns, PatternSet) else PatternSet(patterns)
        if len(values) != len(patterns):
            raise ValueError(
                f"🧩 Got {len(values)} proportions for {len(patterns)} patterns."
            )
        if np.any(values < 0):
            raise ValueError("🧩 Proportions can't be negative.")
        if abs(values.sum() - 1) > atol:
            raise ValueError(f"🧩 Proportions must sum to 1 (they sum to {values.sum()}).")
        values.setflags(write=False)
        self.values = values
        self.patterns = patterns

    @classmethod
    def uniform(cls, patterns):
        patterns = patterns if isinstance(patterns, PatternSet) else PatternSet(patterns)
        return cls(np.full(len(patterns), 1 / len(patterns)), patterns)

    @classmethod
    def from_weights(cls, weights, patterns):
        """
        Normalize positive weights (for example Δ) into proportions.
        """
        weights = np.asarray(weights, dtype=float)
        return cls(weights / weights.sum(), patterns)

    def select(self, patterns, renormalize=True):
        """
        Proportions of a subset of the patterns.
        """
        patterns = PatternSet(patterns, K=self.patterns.K)
        i = self.patterns.indices(patterns)
        if np.any(i < 0):
            raise ValueError("🧩 Some requested patterns aren't labels of these proportions.")
        values = self.values[i]
        if renormalize:
            if values.sum() <= 0:
                raise ValueError("🧩 Can't renormalize proportions that are all zero.")
            values = values / values.sum()
            return ProportionVector(values, patterns)
        return values

    def as_dict(self):
        return dict(zip(self.patterns.strings(), self.values.tolist()))

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return f"<ProportionVector L={len(self)}>"


def cell_index(Q, A, model="two-param"):
    """
    Which distinct item parameter each (item, pattern) pair uses.

    For the two-parameter model the cell is Γ[j, α] (0 = θ⁻, 1 = θ⁺).
    For the all-effect model the cell is the integer code of α
    restricted to 𝒦_j, so the last cell (all ones) is the capable one.

    Returns
    -------
    cells : array
        A (J, L) integer array.
    n_cells : array
        The number of cells for each item.
    """
    check_model(model)
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    A = A if isinstance(A, PatternSet) else PatternSet(A)
    if model == "two-param":
        return build_gamma(Q, A).entries.astype(np.int64), np.full(Q.J, 2)

    bits = A.bits
    cells = np.zeros((Q.J, len(A)), dtype=np.int64)
    n_cells = np.ones(Q.J, dtype=np.int64)
    for j in range(Q.J):
        required = Q.required(j)
        if len(required) > 0 and len(A) > 0:
            cells[j] = bits_to_codes(bits[:, required]).astype(np.int64)
        n_cells[j] = 2 ** len(required)
    return cells, n_cells


def clamp_theta(values, floor=THETA_FLOOR):
    """
    Clamp probabilities into [floor, 1 - floor].

    Returns
    -------
    clamped : array
    events : int
        How many entries had to be moved.
    """
    values = np.asarray(values, dtype=float)
    clamped = np.clip(values, floor, 1 - floor)
    return clamped, int(np.sum(clamped != values))


def theta_two_param(G, params):
    """
    The Θ-matrix of the two-parameter model: θ⁺ where Γ = 1, θ⁻ elsewhere.
    """
    if params.J != G.J:
        raise ValueError(f"🧩 Γ has {G.J} items, but the parameters cover {params.J}.")
    if not np.all(params.is_monotone()):
        raise ValueError("🧩 Two-parameter items need θ⁺ > θ⁻.")
    values = np.where(
        G.entries == 1,
        params.theta_plus[:, np.newaxis],
        params.theta_minus[:, np.newaxis],
    )
    return ThetaMatrix(values, G.patterns)


def theta_all_effect(Q, params, A):
    """
    The Θ-matrix of the identity-link all-effect model.
    """
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    A = A if isinstance(A, PatternSet) else PatternSet(A)
    if not np.array_equal(Q.entries, params.Q.entries):
        raise ValueError(
            "🧩 These all-effect parameters were defined for a different Q-matrix."
        )
    cells, _ = cell_index(Q, A, "all-effect")
    values = np.vstack([params.cell_thetas(j)[cells[j]] for j in range(Q.J)])
    return ThetaMatrix(values.reshape(Q.J, -1), A)
