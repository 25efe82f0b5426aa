"""
Checkers for the three conditions that make a set of true
attribute patterns strictly learnable from a Γ-matrix.
"""

from ..imports import *
from ..patterns import *

__all__ = [
    "DEFAULT_SUBSET_BUDGET",
    "default_max_subset_size",
    "ConditionASearch",
    "check_condition_A",
    "check_condition_B",
    "check_condition_C",
]

# how many item subsets a Condition A search may examine
DEFAULT_SUBSET_BUDGET = 100_000


def default_max_subset_size(J):
    return max(1, min(J // 2, 8))


class ConditionASearch:
    """
    Enumerate witnesses (S1, S2) of Condition A in a fixed order.

    Subsets are visited by size (ascending) and lexicographically
    within a size. Each subset whose Γ rows have distinct columns
    is keyed by the partial order it induces; a witness is reported
    whenever a subset matches an earlier, disjoint subset with the
    same order. The first witness is therefore always the same,
    however the search is run.

    After iterating, `.exhaustive` says whether every pair of
    disjoint subsets was considered, so that finding nothing
    proves Condition A fails.
    """

    def __init__(self, G, max_subset_size=None, budget=DEFAULT_SUBSET_BUDGET):
        self.G = G
        if max_subset_size is None:
            max_subset_size = default_max_subset_size(G.J)
        self.max_subset_size = int(max_subset_size)
        self.min_subset_size = max(1, int(np.ceil(np.log2(max(G.L, 1)))))
        self.budget = int(budget)
        self.examined = 0
        self.exhausted_budget = False
        self.exhaustive = False

    def __iter__(self):
        G = self.G
        signatures = {}
        self.examined = 0
        self.exhausted_budget = False
        top = min(self.max_subset_size, G.J)
        for size in range(self.min_subset_size, top + 1):
            for S in itertools.combinations(range(G.J), size):
                if self.examined >= self.budget:
                    self.exhausted_budget = True
                    self.exhaustive = False
                    return
                self.examined += 1
                packed = G.packed(S)
                if not has_distinct_rows(packed):
                    continue
                signature = np.packbits(dominance_matrix(packed)).tobytes()
                earlier = signatures.setdefault(signature, [])
                for T in earlier:
                    if set(T).isdisjoint(S):
                        yield T, S
                earlier.append(S)
        self.exhaustive = top >= G.J - 1

    def first(self):
        for witness in self:
            return witness
        return None


def check_condition_A(G, max_subset_size=None, budget=DEFAULT_SUBSET_BUDGET):
    """
    Find two disjoint item sets S1, S2 whose Γ rows each have
    distinct columns and which induce the same partial order.

    Parameters
    ----------
    G : GammaMatrix
        The constraint matrix over the true patterns.
    max_subset_size : int, optional
        The largest subset to try (default min(J//2, 8)).
    budget : int
        The most subsets to examine.

    Returns
    -------
    witness : tuple or None
        `(S1, S2)` as tuples of 0-based item indices, or None
        if no witness turned up within the search limits.
    """
    return ConditionASearch(G, max_subset_size=max_subset_size, budget=budget).first()


def _check_disjoint(G, S1, S2):
    S1, S2 = check_items(S1, G.J), check_items(S2, G.J)
    if not set(S1).isdisjoint(S2):
        raise ValueError(f"🧩 Item sets {S1} and {S2} must be disjoint.")
    return S1, S2


def _required_pairs(G, S1, S2):
    """
    Ordered pairs of distinct columns comparable under ⪰_S1 or ⪰_S2.
    """
    required = G.order_relation(S1) | G.order_relation(S2)
    np.fill_diagonal(required, False)
    return required


def _differ_outside(G, S1, S2):
    """
    Which pairs of columns differ somewhere outside S1 ∪ S2.
    """
    rest = sorted(set(range(G.J)) - set(S1) - set(S2))
    packed = G.packed(rest)
    return np.any(packed[:, np.newaxis, :] != packed[np.newaxis, :, :], axis=2)


def check_condition_B(G, S1, S2):
    """
    Can the items outside S1 ∪ S2 tell apart every pair of
    patterns that S1 or S2 puts in order?

    Returns
    -------
    holds : bool
    """
    S1, S2 = _check_disjoint(G, S1, S2)
    required = _required_pairs(G, S1, S2)
    return not bool(np.any(required & ~_differ_outside(G, S1, S2)))


def _gamma_columns(qcodes, codes):
    q = qcodes[:, np.newaxis]
    return ((codes[np.newaxis, :] & q) == q).astype(np.int8)


def check_condition_C(Q, A0, chunk_size=2**16):
    """
    Is every Γ column of a true pattern different from the
    Γ column of every pattern outside the true set?

    The complement of A0 is enumerated lazily, in chunks.

    Returns
    -------
    holds : bool
    """
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    A0 = A0 if isinstance(A0, PatternSet) else PatternSet(A0)
    if A0.K != Q.K:
        raise ValueError(f"🧩 Q has K={Q.K}, but the true patterns have K={A0.K}.")
    if Q.K > MAXIMUM_ENUMERATION:
        raise ValueError(
            f"🧩 Condition C enumerates all 2^K patterns; K={Q.K} is over the limit of {MAXIMUM_ENUMERATION}."
        )
    if len(A0) == 0:
        return True

    true_columns = pack_columns(_gamma_columns(Q.codes, A0.codes))
    single_word = true_columns.shape[1] == 1
    if single_word:
        true_keys = true_columns[:, 0]
    else:
        true_keys = {row.tobytes() for row in true_columns}

    for start in range(0, 2**Q.K, chunk_size):
        codes = np.arange(start, min(start + chunk_size, 2**Q.K), dtype=np.uint64)
        codes = codes[~np.isin(codes, A0.codes)]
        if len(codes) == 0:
            continue
        columns = pack_columns(_gamma_columns(Q.codes, codes))
        if single_word:
            if np.any(np.isin(columns[:, 0], true_keys)):
                return False
        elif any(row.tobytes() in true_keys for row in columns):
            return False
    return True
