"""
Closed-form M-steps for the item parameters.

Both response models reduce to the same update: every item has a
handful of cells (θ⁻/θ⁺ for the two-parameter model, one per
sub-profile of the required attributes for the all-effect model),
and each cell's probability is the weighted fraction of correct
responses among the subjects whose pattern falls in that cell.
"""

from ..imports import *
from ..patterns import *
from ..response_models import *

__all__ = ["m_step_two_param", "m_step_all_effect", "initial_cell_theta", "pool_monotone"]


def cell_rates(phi, R, cells, previous, return_mass=False):
    """
    Weighted correct-response rates for every (item, cell).

    Parameters
    ----------
    phi : array
        (N, L) posterior memberships.
    R : array
        (N, J) binary responses.
    cells : array
        (J, L) cell index of each (item, pattern).
    previous : array
        (J, C) previous cell values, used wherever a cell has
        member patterns but no posterior weight at all.

    Returns
    -------
    rates : array
        (J, C) updated cell values (NaN where an item has no such cell).
    fallbacks : int
        How many cells fell back to their previous value.
    mass : array
        (J, C) posterior weight in each cell, only with `return_mass`.
    """
    J, C = previous.shape
    mass = phi.sum(axis=0)
    correct = np.asarray(R, dtype=float).T @ phi
    flat = (np.arange(J)[:, np.newaxis] * C + cells).ravel()
    numerator = np.bincount(flat, weights=correct.ravel(), minlength=J * C).reshape(J, C)
    denominator = np.bincount(flat, weights=np.tile(mass, J), minlength=J * C).reshape(J, C)
    occupied = np.bincount(flat, minlength=J * C).reshape(J, C) > 0

    empty = occupied & (denominator <= 0)
    with np.errstate(divide="ignore", invalid="ignore"):
        rates = np.where(denominator > 0, numerator / denominator, previous)
    rates = np.where(occupied, rates, previous)
    if return_mass:
        return rates, int(np.sum(empty)), np.where(occupied, denominator, 0.0)
    return rates, int(np.sum(empty))


def pool_monotone(rates, mass, n_cells):
    """
    Keep every item's top cell (all required attributes mastered)
    at least as large as each of its other cells.

    Offending cells are pooled with the top cell, largest first,
    into their mass-weighted mean. That is the maximizer of the
    weighted binomial likelihood under this ordering, so an EM
    iteration using it still never lowers the objective.
    Cells with no posterior weight are left alone.

    Parameters
    ----------
    rates : array
        (J, C) unconstrained cell values.
    mass : array
        (J, C) posterior weight behind each value.
    n_cells : array
        (J,) number of cells per item; the last one is the top cell.

    Returns
    -------
    rates : array
        (J, C) constrained cell values.
    pooled : array
        Indices of the items that needed pooling.
    """
    rates = np.array(rates, dtype=float)
    mass = np.asarray(mass, dtype=float)
    J, C = rates.shape
    top = np.asarray(n_cells, dtype=np.int64) - 1
    rows = np.arange(J)
    lower = np.arange(C)[np.newaxis, :] < top[:, np.newaxis]
    with np.errstate(invalid="ignore"):
        above = lower & (mass > 0) & (rates > rates[rows, top][:, np.newaxis])
    pooled = np.flatnonzero(above.any(axis=1) & (mass[rows, top] > 0))
    for j in pooled:
        weight = mass[j, top[j]]
        total = rates[j, top[j]] * weight
        members = [top[j]]
        candidates = np.flatnonzero(above[j])
        for c in candidates[np.argsort(-rates[j, candidates], kind="stable")]:
            if rates[j, c] <= total / weight:
                break
            weight += mass[j, c]
            total += rates[j, c] * mass[j, c]
            members.append(c)
        rates[j, members] = total / weight
    return rates, pooled


def initial_cell_theta(Q, model, n_cells, low=0.25, high=0.75):
    """
    Starting cell values: θ⁻ = `low` and θ⁺ = `high` for the
    two-parameter model, and equal main and interaction effects
    climbing from `low` to `high` for the all-effect model.
    """
    C = int(np.max(n_cells))
    values = np.full((len(n_cells), C), np.nan)
    if model == "two-param":
        values[:, 0], values[:, 1] = low, high
        return values
    for j, n in enumerate(n_cells):
        m = int(np.log2(n))
        if m == 0:
            values[j, 0] = high
            continue
        # a sub-profile with h of the m required attributes has 2^h - 1 active effects
        present = codes_to_bits(np.arange(n), m).sum(axis=1)
        values[j, :n] = low + (high - low) * (2.0**present - 1) / (2.0**m - 1)
    return values


def m_step_two_param(phi, G, R, previous=None):
    """
    Update θ⁺ and θ⁻ for every item from posterior memberships.

    θ⁺_j is the φ-weighted fraction of correct answers among
    patterns with Γ[j, α] = 1, and θ⁻_j the same among the rest.
    No clamping is applied here.

    Parameters
    ----------
    phi : array
        (N, L) posterior memberships.
    G : GammaMatrix
        The Γ-matrix for the L candidate patterns.
    R : array
        (N, J) binary responses.
    previous : TwoParamItemParams, optional
        Values to keep for a side with no posterior weight
        (0.5 when not given).

    Returns
    -------
    params : TwoParamItemParams
        Not required to be monotone.
    """
    R = check_responses(R, J=G.J)
    if previous is None:
        last = np.full((G.J, 2), 0.5)
    else:
        last = np.vstack([previous.theta_minus, previous.theta_plus]).T
    rates, fallbacks = cell_rates(np.asarray(phi, dtype=float), R, G.entries.astype(np.int64), last)
    if fallbacks:
        logger.debug(f"{fallbacks} two-parameter cell(s) kept their previous value")
    return TwoParamItemParams(rates[:, 1], rates[:, 0], strict=False)


def m_step_all_effect(phi, Q, R, A, previous=None):
    """
    Update the all-effect model's per-cell response probabilities.

    For each item j the patterns are grouped by their restriction to
    the required attributes 𝒦_j, and each group's probability is its
    φ-weighted correct-response fraction.

    Returns
    -------
    cell_thetas : list of arrays
        For each item, 2^|𝒦_j| probabilities indexed by the
        sub-profile code (first required attribute most significant).
    """
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    R = check_responses(R, J=Q.J)
    cells, n_cells = cell_index(Q, A, "all-effect")
    if previous is None:
        last = np.full((Q.J, int(n_cells.max())), 0.5)
    else:
        last = np.full((Q.J, int(n_cells.max())), np.nan)
        for j, values in enumerate(previous):
            last[j, : len(values)] = values
    rates, _ = cell_rates(np.asarray(phi, dtype=float), R, cells, last)
    return [rates[j, :n].copy() for j, n in enumerate(n_cells)]
