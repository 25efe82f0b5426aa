from ..imports import *
import dataclasses
from dataclasses import dataclass

__all__ = ["ScreenConfig"]


@dataclass(frozen=True)
class ScreenConfig:
    """
    Settings for stochastic-approximation screening.

    Attributes
    ----------
    m_max : int
        Gibbs sweeps over all (subject, attribute) pairs per outer iteration.
    m_eff : int
        How many of the last sweeps are averaged (m_eff <= m_max).
    max_outer : int
        The most outer iterations.
    tol : float
        Stop once no entry of the running attribute average moves more than this.
    enhance_period : int, None
        If set, keep the current candidate patterns every this many
        outer iterations, and add them all to the final set.
    delta_gap : float
        Report items whose θ⁺ - θ⁻ falls below this.
    theta_plus, theta_minus : float
        Starting item parameters.
    update_theta : bool
        If False, the item parameters stay at their starting values.
    seed : int
    progress : bool
        Show a progress bar over outer iterations.
    """

    m_max: int = 20
    m_eff: int = 10
    max_outer: int = 100
    tol: float = 1e-3
    enhance_period: int = None
    delta_gap: float = 0.0
    theta_plus: float = 0.8
    theta_minus: float = 0.2
    update_theta: bool = True
    seed: int = 0
    progress: bool = False

    def __post_init__(self):
        if not (1 <= self.m_eff <= self.m_max):
            raise ValueError(
                f"🧩 Need 1 <= m_eff <= m_max (got m_eff={self.m_eff}, m_max={self.m_max})."
            )
        if self.max_outer < 1:
            raise ValueError(f"🧩 max_outer must be at least 1 (got {self.max_outer}).")
        if not self.tol > 0:
            raise ValueError(f"🧩 tol must be positive (got {self.tol}).")
        if self.enhance_period is not None and self.enhance_period < 1:
            raise ValueError(
                f"🧩 enhance_period must be at least 1 when given (got {self.enhance_period})."
            )
        if not (0 <= self.delta_gap < 1):
            raise ValueError(f"🧩 delta_gap must be in [0, 1) (got {self.delta_gap}).")
        if not (0 < self.theta_minus < self.theta_plus < 1):
            raise ValueError(
                f"🧩 Starting values need 0 < θ⁻ < θ⁺ < 1 (got {self.theta_minus}, {self.theta_plus})."
            )

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def to_dict(self):
        return dataclasses.asdict(self)
