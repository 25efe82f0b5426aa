"""
Item parameters for the two-parameter and the all-effect response models.
"""

from ..imports import *
from ..patterns import *

__all__ = ["TwoParamItemParams", "AllEffectItemParams"]


class TwoParamItemParams:
    """
    Two response probabilities per item: θ⁺ for patterns that have
    every required attribute and θ⁻ for everyone else. In the
    cognitive-diagnosis vocabulary, 1-θ⁺ is the slipping and θ⁻
    the guessing probability.
    """

    def __init__(self, theta_plus, theta_minus, strict=True):
        """
        Initialize a set of two-parameter item parameters.

        Parameters
        ----------
        theta_plus : array
            Length-J probabilities for capable patterns.
        theta_minus : array
            Length-J probabilities for incapable patterns.
        strict : bool
            If True, insist on 0 < θ⁻ < θ⁺ < 1 for every item.
            Estimators pass False, because intermediate
            iterates are allowed to wander.
        """
        theta_plus = np.atleast_1d(np.asarray(theta_plus, dtype=float)).copy()
        theta_minus = np.atleast_1d(np.asarray(theta_minus, dtype=float)).copy()
        if theta_plus.ndim != 1 or theta_plus.shape != theta_minus.shape:
            raise ValueError(
                f"""
                🧩 θ⁺ and θ⁻ must be 1D arrays of the same length
                (got shapes {theta_plus.shape} and {theta_minus.shape}).
                """
            )
        if strict:
            bad = np.flatnonzero(
                ~((0 < theta_minus) & (theta_minus < theta_plus) & (theta_plus < 1))
            )
            if len(bad) > 0:
                raise ValueError(
                    f"""
                    🧩 Two-parameter items need 0 < θ⁻ < θ⁺ < 1, which
                    fails for items {list(bad)}.
                    """
                )
        self.theta_plus = theta_plus
        self.theta_minus = theta_minus

    @classmethod
    def from_noise(cls, J, noise):
        """
        Every item gets θ⁺ = 1 - noise and θ⁻ = noise.
        """
        return cls(np.full(J, 1.0 - noise), np.full(J, float(noise)))

    @property
    def J(self):
        return len(self.theta_plus)

    def is_monotone(self):
        return self.theta_plus > self.theta_minus

    def to_dict(self):
        return dict(
            theta_plus=self.theta_plus.tolist(), theta_minus=self.theta_minus.tolist()
        )

    def __repr__(self):
        return f"<TwoParamItemParams J={self.J}>"


def _subset_mask(subset, required):
    """
    Convert a subset of attributes into a bit mask over the
    required-attribute sub-profile (first required attribute = MSB).
    """
    m = len(required)
    position = {int(k): m - 1 - t for t, k in enumerate(required)}
    mask = 0
    for k in subset:
        if int(k) not in position:
            raise ValueError(
                f"""
                🧩 Effect {tuple(subset)} involves attribute {k}, which
                this item doesn't require (required: {list(required)}).
                """
            )
        mask |= 1 << position[int(k)]
    return mask


class AllEffectItemParams:
    """
    Identity-link all-effect item parameters: for item j,

        θ_{j,α} = Σ_{S ⊆ 𝒦_j} β_{j,S} ∏_{k ∈ S} α_k

    where 𝒦_j are the attributes item j requires. Only the
    sub-profile of α on 𝒦_j matters, so each item has 2^|𝒦_j|
    distinct response probabilities ("cells"), and the cell
    with every required attribute must be strictly the largest.
    """

    def __init__(self, Q, coefficients):
        """
        Initialize all-effect item parameters.

        Parameters
        ----------
        Q : QMatrix
            The design matrix defining 𝒦_j for each item.
        coefficients : list of dict
            One dictionary per item, mapping a tuple of 0-based
            attribute indices (a subset of 𝒦_j, `()` for the
            intercept) to its effect β. Missing subsets are zero.
        """
        self.Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
        if len(coefficients) != self.Q.J:
            raise ValueError(
                f"🧩 Got coefficients for {len(coefficients)} items, but Q has {self.Q.J}."
            )
        self.coefficients = [
            {tuple(sorted(int(k) for k in S)): float(b) for S, b in c.items()}
            for c in coefficients
        ]

        self._cells = []
        for j in range(self.Q.J):
            required = self.Q.required(j)
            m = len(required)
            if m > MAXIMUM_ENUMERATION:
                raise ValueError(f"🧩 Item {j} requires {m} attributes; too many cells.")
            codes = np.arange(2**m)
            cells = np.zeros(2**m)
            for S, beta in self.coefficients[j].items():
                mask = _subset_mask(S, required)
                cells += beta * ((codes & mask) == mask)
            self._cells.append(cells)

        self._validate()

    def _validate(self):
        for j, cells in enumerate(self._cells):
            if np.any(cells <= 0) or np.any(cells >= 1):
                raise ValueError(
                    f"""
                    🧩 Item {j} implies response probabilities {cells.round(6).tolist()},
                    but all of them must lie strictly between 0 and 1.
                    """
                )
            if len(cells) > 1 and not np.all(cells[-1] > cells[:-1]):
                raise ValueError(
                    f"""
                    🧩 Item {j} breaks monotonicity: patterns with every
                    required attribute must have the strictly largest
                    response probability ({cells.round(6).tolist()}).
                    """
                )

    @classmethod
    def equal_effects(cls, Q, base, top):
        """
        Parameters where the intercept is `base` and all main and
        interaction effects of an item are equal, summing to `top - base`.

        Items requiring no attributes get `top` for everyone.
        """
        Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
        coefficients = []
        for j in range(Q.J):
            required = Q.required(j)
            m = len(required)
            if m == 0:
                coefficients.append({(): float(top)})
                continue
            effect = (top - base) / (2**m - 1)
            c = {(): float(base)}
            for size in range(1, m + 1):
                for S in itertools.combinations(required, size):
                    c[tuple(S)] = effect
            coefficients.append(c)
        return cls(Q, coefficients)

    @property
    def J(self):
        return self.Q.J

    def cell_thetas(self, j):
        """
        Item j's response probabilities, indexed by sub-profile code.
        """
        return self._cells[j].copy()

    def to_dict(self):
        return dict(
            coefficients=[
                {",".join(map(str, S)) or "intercept": b for S, b in c.items()}
                for c in self.coefficients
            ]
        )

    def __repr__(self):
        return f"<AllEffectItemParams J={self.J}>"
