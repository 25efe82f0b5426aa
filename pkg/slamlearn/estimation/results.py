"""
Containers for the output of one fit and of a whole tuning path.
"""

from ..imports import *
from ..patterns import *
from ..response_models import *
from .config import *
from dataclasses import dataclass, field

__all__ = ["FitResult", "SolutionPath"]


@dataclass
class FitResult:
    """
    Everything one estimation run produced.

    Attributes
    ----------
    config : FitConfig
        The resolved settings (ρ filled in).
    patterns : PatternSet
        The L candidate patterns the fit ran over.
    theta : ThetaMatrix
        The fitted (J, L) response probabilities.
    item_params : TwoParamItemParams or list
        θ⁺/θ⁻ per item, or each item's per-cell probabilities.
    cell_theta : array
        The (J, C) cell values behind `theta`.
    p : ProportionVector
        The fitted proportions Δ / ΣΔ.
    delta : array
        The final pseudo-counts Δ.
    selected : PatternSet
        Patterns with p above ρ.
    loglik : float
        ℓ at the fitted parameters over all candidates.
    selected_loglik : float
        ℓ restricted to the selected patterns (p renormalized).
    objective : float
        The penalized objective at the fitted parameters.
    ebic : float
        EBIC of the selected model.
    iterations : int
    converged : bool
    clamp_events : int
        θ entries moved by clamping, summed over iterations.
    fallback_events : int
        Item cells that kept their previous value for lack of weight.
    floor_events : int
        Δ entries raised to the floor c, summed over iterations (PEM).
    pool_events : int
        Items whose top cell had to be pooled with lower cells to stay
        the largest, summed over iterations.
    trace : dict
        Per-iteration "loglik", "objective", "floored" and "crossed".
    classes : EquivalenceClasses, None
        Set when the candidates are equivalence class representatives.
    """

    config: FitConfig
    patterns: PatternSet
    theta: ThetaMatrix
    item_params: object
    cell_theta: np.ndarray
    p: ProportionVector
    delta: np.ndarray
    selected: PatternSet
    loglik: float
    selected_loglik: float
    objective: float
    ebic: float
    iterations: int
    converged: bool
    clamp_events: int = 0
    fallback_events: int = 0
    floor_events: int = 0
    pool_events: int = 0
    trace: dict = field(default_factory=dict)
    classes: object = None

    @property
    def support_size(self):
        return len(self.selected)

    def proportions_of(self, patterns):
        """
        Fitted proportions for some patterns (0 for non-candidates).
        """
        patterns = PatternSet(patterns, K=self.patterns.K)
        i = self.patterns.indices(patterns)
        return np.where(i >= 0, self.p.values[np.maximum(i, 0)], 0.0)

    def to_dict(self):
        """
        A JSON-friendly summary (no per-iteration traces).
        """
        if isinstance(self.item_params, TwoParamItemParams):
            items = self.item_params.to_dict()
        else:
            items = {"cell_thetas": [list(map(float, c)) for c in self.item_params]}
        return dict(
            config=self.config.to_dict(),
            n_candidates=len(self.patterns),
            selected=self.selected.strings(),
            proportions={
                s: float(v)
                for s, v in zip(self.selected.strings(), self.proportions_of(self.selected))
            },
            item_params=items,
            loglik=self.loglik,
            selected_loglik=self.selected_loglik,
            objective=self.objective,
            ebic=self.ebic,
            iterations=self.iterations,
            converged=self.converged,
            clamp_events=self.clamp_events,
            fallback_events=self.fallback_events,
            floor_events=self.floor_events,
            pool_events=self.pool_events,
        )

    def __repr__(self):
        return (
            f"<FitResult {self.config.algorithm} |Â|={self.support_size} "
            f"of {len(self.patterns)}, EBIC={self.ebic:.3f}>"
        )


@dataclass
class SolutionPath:
    """
    Fits along a descending tuning grid, and the one EBIC picked.

    Attributes
    ----------
    parameter : str
        "lam" or "upsilon".
    grid : list
        The tuning values, in the order they were fit.
    fits : list of FitResult
    chosen : int
        Position of the selected fit.
    """

    parameter: str
    grid: list
    fits: list
    chosen: int

    @property
    def best(self):
        return self.fits[self.chosen]

    @property
    def chosen_value(self):
        return self.grid[self.chosen]

    @property
    def support_sizes(self):
        return [f.support_size for f in self.fits]

    @property
    def ebics(self):
        return [f.ebic for f in self.fits]

    def to_table(self):
        """
        One row per grid value, as an astropy `Table`.
        """
        return Table(
            {
                self.parameter: np.array(self.grid, dtype=float),
                "support_size": np.array(self.support_sizes, dtype=int),
                "loglik": np.array([f.loglik for f in self.fits]),
                "ebic": np.array(self.ebics),
                "iterations": np.array([f.iterations for f in self.fits], dtype=int),
                "converged": np.array([f.converged for f in self.fits]),
                "chosen": np.arange(len(self.fits)) == self.chosen,
            }
        )

    def to_dict(self):
        return dict(
            parameter=self.parameter,
            grid=list(map(float, self.grid)),
            support_sizes=self.support_sizes,
            ebics=self.ebics,
            chosen=self.chosen,
            chosen_value=float(self.chosen_value),
            best=self.best.to_dict(),
        )

    def __len__(self):
        return len(self.fits)
