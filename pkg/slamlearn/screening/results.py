from ..imports import *
from ..patterns import *
from dataclasses import dataclass

__all__ = ["ScreenResult", "binarize", "enhance_union"]


def binarize(a_ave, K):
    """
    The unique rows of I(a_ave > 1/2), in canonical order.
    """
    codes = bits_to_codes((np.asarray(a_ave) > 0.5).astype(np.int8))
    return PatternSet.from_codes(np.unique(codes), K)


def enhance_union(snapshots, final):
    """
    Combine the final candidate set with snapshots saved along the way.

    Returns
    -------
    patterns : PatternSet
        The union, without duplicates, in canonical order.
    """
    final = final if isinstance(final, PatternSet) else PatternSet(final)
    return final.union(*snapshots).sorted()


@dataclass
class ScreenResult:
    """
    The candidate patterns from screening, and how they were found.

    Attributes
    ----------
    a_screen : PatternSet
        The candidate patterns, in canonical order.
    a_ave : array
        The (N, K) running average of each subject's attributes.
    theta : TwoParamItemParams
        The final item parameter estimates.
    snapshots_used : int
        How many saved candidate sets were added (0 without enhancement).
    iterations : int
        Outer iterations run.
    converged : bool
    fallback_events : int
        Item parameter updates skipped for lack of weight.
    gap_violations : int
        Items that ended with θ⁺ - θ⁻ below the configured gap.
    method : str
        "gibbs" or "variational".
    """

    a_screen: PatternSet
    a_ave: np.ndarray
    theta: object
    snapshots_used: int = 0
    iterations: int = 0
    converged: bool = False
    fallback_events: int = 0
    gap_violations: int = 0
    method: str = "gibbs"

    def coverage(self, A0):
        """
        The fraction of the patterns in A0 that made it into the candidates.
        """
        A0 = A0 if isinstance(A0, PatternSet) else PatternSet(A0)
        if len(A0) == 0:
            return 1.0
        return float(np.mean(self.a_screen.contains_codes(A0.codes)))

    def to_dict(self):
        return dict(
            method=self.method,
            n_candidates=len(self.a_screen),
            candidates=self.a_screen.strings(),
            theta=self.theta.to_dict(),
            snapshots_used=self.snapshots_used,
            iterations=self.iterations,
            converged=self.converged,
            fallback_events=self.fallback_events,
            gap_violations=self.gap_violations,
        )

    def __len__(self):
        return len(self.a_screen)

    def __repr__(self):
        return f"<ScreenResult {self.method} |A_screen|={len(self)} after {self.iterations} iterations>"
