"""
Equivalence classes of attribute patterns under the two-parameter
model: patterns with identical Γ columns across all items.
"""

from ..imports import *
from ..patterns import *

__all__ = ["EquivalenceClasses", "equivalence_classes"]


class EquivalenceClasses:
    """
    The Q-induced partition of {0,1}^K.

    Its representatives 𝒜_Q are the joins (entrywise OR) of
    subsets of Q rows, with 0_K as the empty join. Each pattern
    α belongs to the class of the join of every q_j it dominates.
    """

    def __init__(self, Q, max_classes=2**MAXIMUM_ENUMERATION):
        self.Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
        rows = sorted(set(int(c) for c in self.Q.codes))

        # close {0} under joins with the Q rows
        closure = {0}
        frontier = {0}
        while frontier:
            new = set()
            for a in frontier:
                for q in rows:
                    b = a | q
                    if b not in closure:
                        new.add(b)
            closure |= new
            frontier = new
            if len(closure) > max_classes:
                raise RuntimeError(
                    f"🧩 More than {max_classes} equivalence classes; giving up."
                )

        self.representatives = PatternSet.from_codes(sorted(closure), self.Q.K)

    @property
    def K(self):
        return self.Q.K

    def representative_codes(self, codes):
        """
        The representative of each pattern code, vectorized.
        """
        codes = np.asarray(codes, dtype=np.uint64).reshape(-1)
        q = self.Q.codes[np.newaxis, :]
        dominated = (codes[:, np.newaxis] & q) == q
        joined = np.where(dominated, q, np.uint64(0))
        return np.bitwise_or.reduce(joined, axis=1).astype(np.uint64)

    def representative(self, pattern):
        """
        The representative of one pattern's class.
        """
        p = AttributePattern.coerce(pattern, K=self.K)
        return AttributePattern(self.K, int(self.representative_codes([p.code])[0]))

    __getitem__ = representative

    def is_representative(self, pattern):
        p = AttributePattern.coerce(pattern, K=self.K)
        return self.representative(p) == p

    def labels(self, A):
        """
        The representative of every member of a `PatternSet`.
        """
        A = A if isinstance(A, PatternSet) else PatternSet(A)
        return self.representative_codes(A.codes)

    def members(self, pattern):
        """
        Every pattern in the class of `pattern` (enumerates {0,1}^K).
        """
        rep = self.representative(pattern)
        everything = all_codes(self.K)
        return PatternSet.from_codes(
            everything[self.representative_codes(everything) == rep.code], self.K
        )

    def mapping(self):
        """
        A dictionary from every pattern string to its representative.
        """
        everything = all_codes(self.K)
        reps = self.representative_codes(everything)
        return {
            code_to_string(a, self.K): code_to_string(r, self.K)
            for a, r in zip(everything, reps)
        }

    def __len__(self):
        return len(self.representatives)

    def __repr__(self):
        return f"<EquivalenceClasses K={self.K} classes={len(self)}>"


def equivalence_classes(Q):
    """
    The representatives 𝒜_Q of the Q-induced equivalence classes.

    Parameters
    ----------
    Q : QMatrix
        The design matrix.

    Returns
    -------
    representatives : PatternSet
        𝒜_Q, in canonical order.
    classes : EquivalenceClasses
        Maps any pattern to its representative (`classes[α]`).
    """
    classes = EquivalenceClasses(Q)
    return classes.representatives, classes
