"""
Γ-matrices (ideal responses) and the partial orders they define.
"""

from ..imports import *
from .bits import *
from .patternset import *
from .qmatrix import *

__all__ = [
    "GammaMatrix",
    "check_items",
    "dominates",
    "build_gamma",
    "constraint_set",
    "partial_order_holds",
    "orders_equal",
]


def check_items(S, J):
    """
    Validate a subset of item indices and return it as a sorted tuple.
    """
    S = [int(s) for s in S]
    if len(set(S)) != len(S):
        raise ValueError(f"🧩 Item subset {S} contains repeated items.")
    for s in S:
        if not (0 <= s < J):
            raise IndexError(f"🧩 Item {s} is out of range for J={J} items.")
    return tuple(sorted(S))


class GammaMatrix:
    """
    A J×L binary matrix with Γ[j, α] = I(α ⪰ q_j), whose
    columns are labeled by a `PatternSet`.
    """

    def __init__(self, entries, patterns):
        entries = np.array(entries)
        if entries.ndim != 2:
            raise ValueError(f"🧩 A Γ-matrix must be 2D, not shape {entries.shape}.")
        if not isinstance(patterns, PatternSet):
            patterns = PatternSet(patterns)
        if entries.shape[1] != len(patterns):
            raise ValueError(
                f"""
                🧩 The Γ-matrix has {entries.shape[1]} columns but
                {len(patterns)} pattern labels were given.
                """
            )
        if not np.all((entries == 0) | (entries == 1)):
            raise ValueError("🧩 Γ-matrix entries may only be 0 or 1.")
        self.entries = entries.astype(np.int8)
        self.entries.setflags(write=False)
        self.patterns = patterns

    @property
    def J(self):
        return self.entries.shape[0]

    @property
    def L(self):
        return self.entries.shape[1]

    def column(self, pattern):
        return self.entries[:, self.patterns.index(pattern)]

    def restrict(self, items):
        """
        Γ^(S, ·): a new `GammaMatrix` with only the rows in `items`.
        """
        S = check_items(items, self.J)
        return GammaMatrix(self.entries[list(S)].reshape(len(S), self.L), self.patterns)

    def packed(self, items=None):
        """
        The columns (restricted to some items) packed into 64-bit words.
        """
        if items is None:
            return pack_columns(self.entries)
        S = check_items(items, self.J)
        return pack_columns(self.entries[list(S)].reshape(len(S), self.L))

    def order_relation(self, items):
        """
        The L×L boolean relation α ⪰_S α' over the column patterns.
        """
        return dominance_matrix(self.packed(items))

    def has_distinct_columns(self, items=None):
        return has_distinct_rows(self.packed(items))

    def __eq__(self, other):
        if not isinstance(other, GammaMatrix):
            return NotImplemented
        return self.patterns == other.patterns and np.array_equal(
            self.entries, other.entries
        )

    __hash__ = None

    def __repr__(self):
        return f"<GammaMatrix J={self.J} L={self.L}>"


def _as_bits(x):
    if isinstance(x, AttributePattern):
        return x.bits
    if isinstance(x, str):
        return AttributePattern.from_string(x).bits
    return np.asarray(x)


def dominates(alpha, q):
    """
    Is α ⪰ q, meaning α_k ≥ q_k for every attribute k?

    Parameters
    ----------
    alpha : AttributePattern, str, sequence
        The attribute pattern.
    q : sequence, str
        A row of a Q-matrix.

    Returns
    -------
    dominates : bool
    """
    a, b = _as_bits(alpha), _as_bits(q)
    if a.shape != b.shape:
        raise ValueError(
            f"🧩 Can't compare a pattern of length {a.size} to a Q row of length {b.size}."
        )
    return bool(np.all(a >= b))


def build_gamma(Q, A):
    """
    Build the Γ-matrix of a Q-matrix over a set of patterns.

    Parameters
    ----------
    Q : QMatrix
        The J×K design matrix.
    A : PatternSet
        The L patterns labeling the columns (order is kept).

    Returns
    -------
    G : GammaMatrix
        The J×L matrix with G[j, l] = I(A[l] ⪰ q_j).
    """
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    A = A if isinstance(A, PatternSet) else PatternSet(A)
    if Q.K != A.K:
        raise ValueError(
            f"🧩 The Q-matrix has K={Q.K} attributes, but the patterns have K={A.K}."
        )
    q = Q.codes[:, np.newaxis]
    entries = (A.codes[np.newaxis, :] & q) == q
    return GammaMatrix(entries.astype(np.int8), A)


def constraint_set(Q, j, A):
    """
    The constraint set C_j = {α ∈ A : α ⪰ q_j} of item j.
    """
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    A = A if isinstance(A, PatternSet) else PatternSet(A)
    if not (0 <= int(j) < Q.J):
        raise IndexError(f"🧩 Item {j} is out of range for J={Q.J} items.")
    if Q.K != A.K:
        raise ValueError(f"🧩 Q has K={Q.K}, but the patterns have K={A.K}.")
    q = Q.codes[int(j)]
    return PatternSet.from_codes(A.codes[(A.codes & q) == q], A.K)


def partial_order_holds(G, S, a1, a2):
    """
    Is a1 ⪰_S a2, meaning Γ[j, a1] ≥ Γ[j, a2] for every j in S?
    """
    S = check_items(S, G.J)
    i1, i2 = G.patterns.index(a1), G.patterns.index(a2)
    rows = list(S)
    return bool(np.all(G.entries[rows, i1] >= G.entries[rows, i2]))


def orders_equal(G, S1, S2):
    """
    Do the item subsets S1 and S2 induce the same partial order
    on the columns of G?
    """
    return bool(np.array_equal(G.order_relation(S1), G.order_relation(S2)))
