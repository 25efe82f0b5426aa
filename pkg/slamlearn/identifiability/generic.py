"""
Generic learnability: conditions that hold for almost every
parameter value, checked on Γ (by flipping entries) or on Q
(by bipartite matchings).
"""

from ..imports import *
from ..patterns import *
from .conditions import *
from .conditions import _required_pairs, _differ_outside
from dataclasses import dataclass
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

__all__ = [
    "DEFAULT_FLIP_BUDGET",
    "GenericGammaSearch",
    "search_generic_gamma",
    "check_generic_gamma",
    "check_generic_Q",
]

# how many search nodes (pairs + flip assignments) a generic search may visit
DEFAULT_FLIP_BUDGET = 200_000


class _OutOfBudget(Exception):
    pass


@dataclass
class GenericGammaSearch:
    """
    The outcome of looking for 0→1 flips that make Condition A hold.
    """

    found: bool
    S1: tuple = None
    S2: tuple = None
    flipped: np.ndarray = None
    flips: int = 0
    exhaustive: bool = False
    nodes: int = 0


def _column_options(block, n1, flip_budget):
    """
    Every way to flip up to `flip_budget` zeros to ones in each
    column of a block, as (code over S1 rows, code over S2 rows).
    Options with fewer flips come first.
    """
    n = block.shape[0]
    weights1 = [1 << (n1 - 1 - r) for r in range(n1)]
    weights2 = [1 << (n - n1 - 1 - r) for r in range(n - n1)]
    options = []
    for column in block.T:
        zeros = np.flatnonzero(column == 0)
        these = []
        for nflips in range(0, min(flip_budget, len(zeros)) + 1):
            for chosen in itertools.combinations(zeros, nflips):
                c = column.copy()
                c[list(chosen)] = 1
                code1 = sum(w for w, b in zip(weights1, c[:n1]) if b)
                code2 = sum(w for w, b in zip(weights2, c[n1:]) if b)
                these.append((code1, code2, tuple(chosen)))
        options.append(these)
    return options


def _assign_flips(options, counter, budget):
    """
    Depth-first search for one option per column such that both
    blocks have distinct columns and induce the same order.
    """
    L = len(options)
    chosen = []

    def agrees(c1, c2):
        for d1, d2, _ in chosen:
            if c1 == d1 or c2 == d2:
                return False
            if ((c1 & d1) == d1) != ((c2 & d2) == d2):
                return False
            if ((c1 & d1) == c1) != ((c2 & d2) == c2):
                return False
        return True

    def extend(column):
        if column == L:
            return True
        for option in options[column]:
            counter[0] += 1
            if counter[0] > budget:
                raise _OutOfBudget
            if agrees(option[0], option[1]):
                chosen.append(option)
                if extend(column + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return [c[2] for c in chosen]
    return None


def search_generic_gamma(
    G=None,
    Q=None,
    A0=None,
    flip_budget=2,
    max_subset_size=None,
    budget=DEFAULT_FLIP_BUDGET,
):
    """
    Look for disjoint item sets S1, S2 and 0→1 flips inside the
    rows S1 ∪ S2 that make Condition A hold, while the items
    outside S1 ∪ S2 (left untouched) separate every pair of
    patterns ordered by ⪰_S1 or ⪰_S2 under the original Γ.

    Parameters
    ----------
    G : GammaMatrix, optional
        The constraint matrix (built from Q and A0 if not given).
    Q : QMatrix, optional
    A0 : PatternSet, optional
    flip_budget : int
        The most flips allowed in any one column.
    max_subset_size : int, optional
        The largest item set to try (default min(J//2, 8)).
    budget : int
        The most search nodes to visit before giving up.

    Returns
    -------
    search : GenericGammaSearch
    """
    if G is None:
        G = build_gamma(Q, A0)
    J, L = G.J, G.L
    if max_subset_size is None:
        max_subset_size = default_max_subset_size(J)
    if L > 256:
        raise ValueError(f"🧩 The generic Γ search is limited to 256 patterns (got {L}).")

    # zero flips first: plain Conditions A and B
    strict = ConditionASearch(G, max_subset_size=max_subset_size, budget=budget)
    for S1, S2 in strict:
        if check_condition_B(G, S1, S2):
            return GenericGammaSearch(
                True, S1, S2, G.entries.copy(), 0, True, strict.examined
            )

    counter = [strict.examined]
    subsets = []
    try:
        for size in range(1, min(max_subset_size, J) + 1):
            for S2 in itertools.combinations(range(J), size):
                for S1 in subsets:
                    if not set(S1).isdisjoint(S2):
                        continue
                    counter[0] += 1
                    if counter[0] > budget:
                        raise _OutOfBudget
                    # B* uses the original orders and the untouched rows
                    required = _required_pairs(G, S1, S2)
                    if np.any(required & ~_differ_outside(G, S1, S2)):
                        continue
                    rows = list(S1) + list(S2)
                    block = np.array(G.entries[rows])
                    options = _column_options(block, len(S1), flip_budget)
                    flips = _assign_flips(options, counter, budget)
                    if flips is not None:
                        flipped = np.array(G.entries)
                        for column, chosen in enumerate(flips):
                            for r in chosen:
                                flipped[rows[r], column] = 1
                        return GenericGammaSearch(
                            True,
                            tuple(S1),
                            tuple(S2),
                            flipped,
                            int(sum(len(c) for c in flips)),
                            True,
                            counter[0],
                        )
                subsets.append(S2)
    except _OutOfBudget:
        return GenericGammaSearch(False, exhaustive=False, nodes=counter[0])

    exhaustive = max_subset_size >= J - 1
    return GenericGammaSearch(False, exhaustive=exhaustive, nodes=counter[0])


def check_generic_gamma(
    G=None,
    Q=None,
    A0=None,
    flip_budget=2,
    max_subset_size=None,
    budget=DEFAULT_FLIP_BUDGET,
):
    """
    Do some 0→1 flips of Γ inside two disjoint item sets give
    a matrix satisfying Condition A, with the original orders
    still separated by the remaining items?

    Returns
    -------
    holds : bool
        True if flips were found. When nothing is found but the
        search was cut short, a warning says so.
    """
    search = search_generic_gamma(
        G=G,
        Q=Q,
        A0=A0,
        flip_budget=flip_budget,
        max_subset_size=max_subset_size,
        budget=budget,
    )
    if not search.found and not search.exhaustive:
        cheerfully_suggest(
            f"""
            The generic Γ search stopped after {search.nodes} nodes
            without an answer; False here means "not found", not "fails".
            """
        )
    return search.found


def _two_matchings(Q, items):
    """
    Split `items` into two disjoint sets, each matching every
    attribute to its own item with q = 1, if possible.
    """
    K = Q.K
    if len(items) < 2 * K:
        return None
    rows = Q.entries[list(items)]
    graph = csr_matrix(np.hstack([rows, rows]).astype(np.int8))
    match = maximum_bipartite_matching(graph, perm_type="column")
    if np.sum(match >= 0) < 2 * K:
        return None
    items = np.asarray(items)
    S1 = tuple(sorted(items[(match >= 0) & (match < K)].tolist()))
    S2 = tuple(sorted(items[match >= K].tolist()))
    return S1, S2


def check_generic_Q(Q, budget=DEFAULT_FLIP_BUDGET):
    """
    Does Q contain two K×K submatrices with unit diagonals (after
    reordering rows), on disjoint items, such that the remaining
    items still require every attribute at least once?

    The two submatrices are two disjoint perfect matchings in
    the item-attribute graph, found together as one maximum
    matching where each attribute can take two items.

    Returns
    -------
    holds : bool
    """
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    J, K = Q.shape
    if J < 2 * K + 1:
        return False
    everything = list(range(J))

    def covers(items):
        return len(items) > 0 and bool(np.all(Q.entries[list(items)].sum(axis=0) >= 1))

    counter = [0]

    def search(reserved):
        counter[0] += 1
        if counter[0] > budget:
            raise _OutOfBudget
        if reserved:
            covered = Q.entries[list(reserved)].sum(axis=0) >= 1
        else:
            covered = np.zeros(K, dtype=bool)
        missing = np.flatnonzero(~covered)
        if len(missing) == 0:
            rest = [j for j in everything if j not in reserved]
            return _two_matchings(Q, rest) is not None
        k = missing[0]
        for j in np.flatnonzero(Q.entries[:, k] == 1):
            if j not in reserved and search(reserved | {int(j)}):
                return True
        return False

    # usually the first pair of matchings already leaves a cover
    matched = _two_matchings(Q, everything)
    if matched is None:
        return False
    leftover = sorted(set(everything) - set(matched[0]) - set(matched[1]))
    if covers(leftover):
        return True

    try:
        return search(frozenset())
    except _OutOfBudget:
        cheerfully_suggest(
            f"The Q-level generic check gave up after {budget} search nodes."
        )
        return False
