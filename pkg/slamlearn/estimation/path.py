"""
Fitting along a grid of tuning values and choosing one by EBIC.
"""

from ..imports import *
from ..patterns import *
from .config import *
from .results import *
from .fitting import fit

__all__ = ["solution_path", "choose_by_ebic"]


def choose_by_ebic(fits):
    """
    The position of the fit with the smallest EBIC.

    Ties go to the smaller selected set, then to the earlier grid position.
    """
    if len(fits) == 0:
        raise ValueError("🧩 There are no fits to choose from.")
    keys = [(f.ebic, f.support_size, i) for i, f in enumerate(fits)]
    return min(keys)[2]


def solution_path(R, Q, A, grid=None, config=None, progress=False):
    """
    Fit once per tuning value, warm-starting each fit from the last.

    Parameters
    ----------
    R : array
        The (N, J) binary responses.
    Q : QMatrix
    A : PatternSet
        The candidate patterns.
    grid : list, optional
        Strictly decreasing tuning values: λ for PEM (from weak to
        strong penalty), Υ for FP-VEM. Defaults to `default_grid`.
    config : FitConfig, optional
        Everything else about the fits.
    progress : bool
        Show a progress bar over the grid.

    Returns
    -------
    path : SolutionPath
    """
    config = config or FitConfig()
    grid = default_grid(config.algorithm) if grid is None else [float(g) for g in grid]
    if len(grid) == 0:
        raise ValueError("🧩 The tuning grid is empty.")
    if np.any(np.diff(grid) >= 0):
        raise ValueError(f"🧩 The tuning grid must be strictly decreasing, not {grid}.")

    fits, previous = [], None
    iterator = tqdm(grid, leave=False) if progress else grid
    for position, value in enumerate(iterator):
        try:
            this = fit(R, Q, A, config=config.with_tuning(value), init=previous)
        except (ValueError, RuntimeError) as e:
            raise RuntimeError(
                f"🧩 The fit at grid position {position} ({config.tuning_name}={value}) failed: {e}"
            ) from e
        fits.append(this)
        previous = this

    return SolutionPath(
        parameter=config.tuning_name, grid=grid, fits=fits, chosen=choose_by_ebic(fits)
    )
