"""
Simulation scenarios.
"""

from ..imports import *
from ..response_models import MODELS, check_model
from .streams import replicate_seeds
import dataclasses
from dataclasses import dataclass

__all__ = ["SimDesign"]

# (noise) for the two-parameter model, (base, top) for the all-effect model
SIGNALS = {
    "two-param": dict(strong=dict(noise=0.1), weak=dict(noise=0.2)),
    "all-effect": dict(strong=dict(base=0.1, top=0.9), weak=dict(base=0.2, top=0.8)),
}


@dataclass(frozen=True)
class SimDesign:
    """
    One simulation scenario.

    Attributes
    ----------
    K : int
        The number of attributes; the block Q-matrix has J = 3K items.
    N : int
        The number of subjects.
    model : str
        "two-param" or "all-effect".
    noise : float
        For the two-parameter model, 1 - θ⁺ = θ⁻ = noise.
    base, top : float
        For the all-effect model, the response probability of
        patterns with none and with all of an item's required
        attributes (main and interaction effects are equal).
    n_true : int
        The number of true patterns |𝒜_0|, which get equal proportions.
    seed : int
    """

    K: int = 10
    N: int = 1000
    model: str = "two-param"
    noise: float = 0.1
    base: float = 0.1
    top: float = 0.9
    n_true: int = 10
    seed: int = 0

    def __post_init__(self):
        check_model(self.model)
        if self.K < 3:
            raise ValueError(f"🧩 Designs need K >= 3 (got K={self.K}).")
        if self.N < 1:
            raise ValueError(f"🧩 Designs need N >= 1 (got N={self.N}).")
        if not (0 < self.noise < 0.5):
            raise ValueError(f"🧩 noise must be in (0, 0.5) (got {self.noise}).")
        if not (0 < self.base < self.top < 1):
            raise ValueError(
                f"🧩 Need 0 < base < top < 1 (got base={self.base}, top={self.top})."
            )
        if not (1 <= self.n_true) or (self.K < 64 and self.n_true > 2**self.K):
            raise ValueError(
                f"🧩 Can't plant {self.n_true} distinct patterns with K={self.K}."
            )

    @property
    def J(self):
        return 3 * self.K

    @classmethod
    def two_param_study(cls, K=10, N=1000, signal="strong", **kw):
        """
        The two-parameter accuracy design (strong: θ⁺=0.9/θ⁻=0.1, weak: 0.8/0.2).
        """
        return cls(K=K, N=N, model="two-param", **SIGNALS["two-param"][signal], **kw)

    @classmethod
    def all_effect_study(cls, K=10, N=1000, signal="strong", **kw):
        """
        The all-effect accuracy design (strong: 0.1 → 0.9, weak: 0.2 → 0.8).
        """
        return cls(K=K, N=N, model="all-effect", **SIGNALS["all-effect"][signal], **kw)

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def replicate_seeds(self, n):
        """
        Seeds for `n` independent replicates of this design.
        """
        return replicate_seeds(self.seed, n)

    def replicates(self, n):
        """
        `n` copies of this design, each with its own seed.
        """
        return [self.replace(seed=s) for s in self.replicate_seeds(n)]

    def to_dict(self):
        d = dataclasses.asdict(self)
        d["J"] = self.J
        return d

    @property
    def label(self):
        if self.model == "two-param":
            signal = f"noise={self.noise:g}"
        else:
            signal = f"base={self.base:g},top={self.top:g}"
        return f"{self.model},K={self.K},N={self.N},{signal}"
