"""
How well a selected set of patterns recovers the truth.
"""

from ..imports import *
from ..patterns import *
from ..response_models import ProportionVector
import dataclasses
from dataclasses import dataclass

__all__ = ["AccuracyRecord", "selection_metrics", "coverage", "rmse_proportions"]


@dataclass
class AccuracyRecord:
    """
    Pattern-selection accuracy for one fit.

    Attributes
    ----------
    tpr : float
        |A0 ∩ Â| / |A0|, the true positive rate.
    one_minus_fdr : float
        |A0 ∩ Â| / |Â|, one minus the false discovery rate.
    coverage : float
        |A0 ∩ A_screen| / |A0| for the candidate set (equal to
        `tpr` when no separate candidate set was given).
    support_size : int
        |Â|.
    rmse : list, None
        Per-pattern RMSE of the proportions, when computed.
    """

    tpr: float
    one_minus_fdr: float
    coverage: float
    support_size: int
    rmse: list = None

    def __post_init__(self):
        for name in ["tpr", "one_minus_fdr", "coverage"]:
            value = getattr(self, name)
            if not (0 <= value <= 1):
                raise ValueError(f"🧩 {name} must be a fraction in [0, 1] (got {value}).")

    def to_dict(self):
        return dataclasses.asdict(self)


def _overlap(A0, A_hat):
    return int(np.sum(A_hat.contains_codes(A0.codes)))


def coverage(A0, A_screen):
    """
    The fraction of true patterns that are among the candidates.
    """
    A0 = A0 if isinstance(A0, PatternSet) else PatternSet(A0)
    A_screen = PatternSet(A_screen, K=A0.K)
    if len(A0) == 0:
        return 1.0
    return _overlap(A0, A_screen) / len(A0)


def selection_metrics(A0, A_hat, A_screen=None):
    """
    True positive rate and 1 - false discovery rate of a selection.

    An empty selection has 1 - FDR = 1 if there were no true
    patterns, and 0 otherwise. With no true patterns, TPR is 1.

    Parameters
    ----------
    A0 : PatternSet
        The true patterns.
    A_hat : PatternSet
        The selected patterns.
    A_screen : PatternSet, optional
        The candidates the selection started from.

    Returns
    -------
    record : AccuracyRecord
    """
    A0 = A0 if isinstance(A0, PatternSet) else PatternSet(A0)
    A_hat = PatternSet(A_hat, K=A0.K)
    both = _overlap(A0, A_hat)
    tpr = both / len(A0) if len(A0) else 1.0
    if len(A_hat):
        precision = both / len(A_hat)
    else:
        precision = 1.0 if len(A0) == 0 else 0.0
    return AccuracyRecord(
        tpr=tpr,
        one_minus_fdr=precision,
        coverage=tpr if A_screen is None else coverage(A0, A_screen),
        support_size=len(A_hat),
    )


def _aligned(estimate, A0):
    """
    An estimate's proportions for the patterns of A0 (0 where absent).
    """
    if hasattr(estimate, "proportions_of"):
        return estimate.proportions_of(A0)
    if isinstance(estimate, ProportionVector):
        i = estimate.patterns.indices(A0)
        return np.where(i >= 0, estimate.values[np.maximum(i, 0)], 0.0)
    if isinstance(estimate, dict):
        return np.array([float(estimate.get(s, 0.0)) for s in A0.strings()])
    values = np.asarray(estimate, dtype=float)
    if values.shape != (len(A0),):
        raise ValueError(f"🧩 Expected {len(A0)} aligned proportions, got shape {values.shape}.")
    return values


def rmse_proportions(truth, estimates):
    """
    Per-pattern root mean square error of estimated proportions.

    Parameters
    ----------
    truth : ProportionVector
        The true proportions over A0.
    estimates : list
        One estimate per replicate: a `FitResult`, a `ProportionVector`,
        a dictionary from pattern strings to proportions, or an array
        aligned with the truth. Patterns an estimate lacks count as 0.

    Returns
    -------
    rmse : array
        One value per pattern of the truth, in its order.
    """
    if len(estimates) == 0:
        raise ValueError("🧩 RMSE needs at least one replicate.")
    A0 = truth.patterns
    errors = np.vstack([_aligned(e, A0) - truth.values for e in estimates])
    return np.sqrt(np.mean(errors**2, axis=0))
