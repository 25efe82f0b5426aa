"""
Configuration for the shrinkage estimators.
"""

from ..imports import *
from ..response_models import MODELS, check_model
import dataclasses
from dataclasses import dataclass

__all__ = ["ALGORITHMS", "FitConfig", "default_grid"]

ALGORITHMS = ["pem", "fpvem", "em"]


def default_grid(algorithm):
    """
    The tuning grid used when none is given.

    PEM walks λ = -0.2, -0.4, ..., -4.0; FP-VEM walks
    Υ = 1.0, 0.9, ..., 0.3; plain EM has nothing to tune.
    """
    if algorithm == "pem":
        return [round(-0.2 * i, 10) for i in range(1, 21)]
    elif algorithm == "fpvem":
        return [round(0.1 * i, 10) for i in range(10, 2, -1)]
    elif algorithm == "em":
        return [0.0]
    raise ValueError(f"🧩 algorithm must be one of {ALGORITHMS}, not '{algorithm}'.")


@dataclass(frozen=True)
class FitConfig:
    """
    Settings for one penalized (or variational) EM fit.

    Attributes
    ----------
    model : str
        "two-param" or "all-effect".
    algorithm : str
        "pem" (penalized EM), "fpvem" (fractional power
        variational EM), or "em" (plain EM with thresholding).
    lam : float
        The log-penalty strength λ < 0 (PEM only).
    upsilon : float
        The fractional power Υ in (0, 1] (FP-VEM only).
    beta : float
        The Dirichlet hyperparameter β in (0, 1) (FP-VEM only).
    c : float
        The floor for Δ in PEM, in (0, 0.1].
    rho : float, None
        The selection threshold ρ; None means 1/(2N).
    gamma : float
        The EBIC parameter γ in [0, 1].
    max_iter : int
        The most EM iterations.
    tol : float
        Stop once the largest absolute change in (p, Θ) is below this.
    seed : int
        Recorded for provenance (the fits themselves are deterministic).
    """

    model: str = "two-param"
    algorithm: str = "pem"
    lam: float = -1.0
    upsilon: float = 1.0
    beta: float = 0.01
    c: float = 0.01
    rho: float = None
    gamma: float = 1.0
    max_iter: int = 1000
    tol: float = 1e-6
    seed: int = 0

    def __post_init__(self):
        check_model(self.model)
        if self.algorithm not in ALGORITHMS:
            raise ValueError(
                f"🧩 algorithm must be one of {ALGORITHMS}, not '{self.algorithm}'."
            )
        if self.algorithm == "pem" and not self.lam < 0:
            raise ValueError(f"🧩 PEM needs λ < 0 (got lam={self.lam}).")
        if not (0 < self.upsilon <= 1):
            raise ValueError(f"🧩 Υ must be in (0, 1] (got upsilon={self.upsilon}).")
        if not (0 < self.beta < 1):
            raise ValueError(f"🧩 β must be in (0, 1) (got beta={self.beta}).")
        if not (0 < self.c <= 0.1):
            raise ValueError(f"🧩 The clamp constant c must be in (0, 0.1] (got c={self.c}).")
        if self.rho is not None and not (0 < self.rho < 1):
            raise ValueError(f"🧩 ρ must be in (0, 1) (got rho={self.rho}).")
        if not (0 <= self.gamma <= 1):
            raise ValueError(f"🧩 EBIC γ must be in [0, 1] (got gamma={self.gamma}).")
        if int(self.max_iter) < 1:
            raise ValueError(f"🧩 max_iter must be at least 1 (got {self.max_iter}).")
        if not self.tol > 0:
            raise ValueError(f"🧩 tol must be positive (got {self.tol}).")

    @property
    def tuning_name(self):
        return {"pem": "lam", "fpvem": "upsilon", "em": "lam"}[self.algorithm]

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def with_tuning(self, value):
        """
        A copy with the tuning parameter (λ or Υ) set to `value`.
        """
        if self.algorithm == "em":
            return self
        return self.replace(**{self.tuning_name: value})

    def resolve(self, N, L=None, warn=True):
        """
        Materialize defaults that depend on the data.

        Parameters
        ----------
        N : int
            The number of subjects (ρ defaults to 1/(2N)).
        L : int, optional
            The number of candidate patterns. A threshold of ten or
            more times the uniform proportion 1/L is warned about.
        """
        new = self if self.rho is not None else self.replace(rho=1 / (2 * N))
        if warn and L is not None and new.rho * L >= 10:
            cheerfully_suggest(
                f"""
                The threshold ρ={new.rho:.3g} is at least ten times the
                uniform proportion 1/{L}; with this many candidate patterns,
                selection may drop real ones.
                """
            )
        return new

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, d):
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise ValueError(f"🧩 Unknown fit settings: {sorted(unknown)}")
        return cls(**d)
