"""
Identifiability reports that combine the individual conditions.
"""

from ..imports import *
from ..patterns import *
from .conditions import *
from .generic import *
from .equivalence import *
from dataclasses import dataclass, field

__all__ = ["VERDICTS", "IdentifiabilityReport", "check_strict", "check_partial"]

VERDICTS = ["strict", "generic", "partial-only", "unknown", "fails-necessary"]


@dataclass
class IdentifiabilityReport:
    """
    What we learned about whether a set of patterns is learnable.

    Attributes
    ----------
    condition_a : tuple or None
        A witness (S1, S2) of 0-based item indices, if found.
    condition_b : bool
        Whether Condition B holds for that witness.
    condition_c : bool
        Whether Condition C holds.
    verdict : str
        One of "strict", "generic", "partial-only", "unknown",
        or "fails-necessary".
    notes : list of str
        Anything worth knowing about how the verdict was reached.
    exhaustive : bool
        Whether the Condition A search covered every subset pair.
    """

    condition_a: tuple = None
    condition_b: bool = False
    condition_c: bool = False
    verdict: str = "unknown"
    notes: list = field(default_factory=list)
    exhaustive: bool = False

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"🧩 verdict must be one of {VERDICTS}, not '{self.verdict}'.")
        if self.verdict == "strict" and not (
            self.condition_a is not None and self.condition_b and self.condition_c
        ):
            raise ValueError("🧩 A strict verdict needs Conditions A, B, and C with a witness.")

    @property
    def passed(self):
        return self.verdict in ["strict", "generic", "partial-only"]

    def to_dict(self):
        return dict(
            condition_a=None
            if self.condition_a is None
            else [list(self.condition_a[0]), list(self.condition_a[1])],
            condition_b=bool(self.condition_b),
            condition_c=bool(self.condition_c),
            verdict=self.verdict,
            exhaustive=bool(self.exhaustive),
            notes=list(self.notes),
        )

    def __str__(self):
        lines = [f"verdict: {self.verdict}"]
        if self.condition_a is not None:
            lines.append(f"condition A witness: S1={self.condition_a[0]}, S2={self.condition_a[1]}")
        else:
            lines.append("condition A witness: none found")
        lines.append(f"condition B: {self.condition_b}")
        lines.append(f"condition C: {self.condition_c}")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)


def _search_A_and_B(G, max_subset_size, budget):
    """
    The first Condition A witness that also passes Condition B
    (or else the first witness at all).
    """
    search = ConditionASearch(G, max_subset_size=max_subset_size, budget=budget)
    first = None
    for S1, S2 in search:
        if first is None:
            first = (S1, S2)
        if check_condition_B(G, S1, S2):
            return (S1, S2), True, search
    return first, False, search


def check_strict(
    Q,
    A0,
    max_subset_size=None,
    budget=DEFAULT_SUBSET_BUDGET,
    flip_budget=2,
    try_generic=True,
):
    """
    Check the sufficient conditions for strict learnability of
    A0 (Conditions A, B, C), falling back to the generic
    conditions when A or B can't be established.

    Parameters
    ----------
    Q : QMatrix
        The design matrix.
    A0 : PatternSet
        The (hypothesized) true patterns.
    max_subset_size : int, optional
        The largest item subset in the Condition A search.
    budget : int
        The most subsets to examine.
    flip_budget : int
        The most 0→1 flips per column for the generic check.
    try_generic : bool
        Whether to try the generic conditions if A or B fail.

    Returns
    -------
    report : IdentifiabilityReport
    """
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    A0 = A0 if isinstance(A0, PatternSet) else PatternSet(A0)
    G = build_gamma(Q, A0)
    notes = []

    witness, b, search = _search_A_and_B(G, max_subset_size, budget)
    c = check_condition_C(Q, A0)
    if not c:
        notes.append("Condition C fails: some true pattern shares its Γ column with a false one.")

    if G.L == 1:
        notes.append("With a single pattern, distinct columns and Condition B hold vacuously.")
    if witness is None:
        if search.exhaustive:
            notes.append("No Condition A witness exists (exhaustive search).")
        else:
            notes.append(f"No Condition A witness among the {search.examined} subsets examined.")
    elif not b:
        notes.append("Condition A witnesses were found, but none also satisfies Condition B.")

    if not c:
        verdict = "fails-necessary"
    elif witness is not None and b:
        verdict = "strict"
    elif try_generic and check_generic_gamma(
        G, flip_budget=flip_budget, max_subset_size=max_subset_size
    ):
        verdict = "generic"
        notes.append("Conditions A* and B* hold after flipping some Γ entries from 0 to 1.")
    else:
        verdict = "unknown"

    return IdentifiabilityReport(
        condition_a=witness,
        condition_b=b,
        condition_c=c,
        verdict=verdict,
        notes=notes,
        exhaustive=search.exhaustive,
    )


def check_partial(Q, A_rep, max_subset_size=None, budget=DEFAULT_SUBSET_BUDGET):
    """
    Check whether a set of equivalence-class representatives is
    learnable under the two-parameter model.

    Condition C is automatic here: distinct representatives
    always have distinct Γ columns over all patterns.

    Parameters
    ----------
    Q : QMatrix
        The design matrix.
    A_rep : PatternSet
        Members of 𝒜_Q.

    Returns
    -------
    report : IdentifiabilityReport
        With verdict "partial-only" if A and B hold, else "unknown".
    """
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    A_rep = A_rep if isinstance(A_rep, PatternSet) else PatternSet(A_rep)
    classes = EquivalenceClasses(Q)
    reps = classes.labels(A_rep)
    wrong = [str(a) for a, r in zip(A_rep, reps) if a.code != int(r)]
    if wrong:
        raise ValueError(
            f"""
            🧩 These patterns aren't equivalence-class representatives
            for this Q-matrix: {wrong}
            """
        )

    G = build_gamma(Q, A_rep)
    witness, b, search = _search_A_and_B(G, max_subset_size, budget)
    notes = ["Condition C holds automatically for class representatives."]
    verdict = "partial-only" if (witness is not None and b) else "unknown"
    return IdentifiabilityReport(
        condition_a=witness,
        condition_b=b,
        condition_c=True,
        verdict=verdict,
        notes=notes,
        exhaustive=search.exhaustive,
    )
