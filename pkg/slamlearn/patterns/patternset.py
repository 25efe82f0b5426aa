"""
Attribute patterns and ordered, duplicate-free sets of them.
"""

from ..imports import *
from .bits import *
from dataclasses import dataclass

__all__ = ["AttributePattern", "PatternSet"]


@dataclass(frozen=True, order=True)
class AttributePattern:
    """
    One binary attribute pattern α = (α_1, ..., α_K).

    Patterns compare (and sort) by their integer code, which
    is the same as comparing their bit strings lexicographically.

    Attributes
    ----------
    K : int
        The number of attributes.
    code : int
        The pattern as an integer, with α_1 as the most significant bit.
    """

    K: int
    code: int

    def __post_init__(self):
        check_K(self.K)
        if not (0 <= int(self.code) < 2 ** int(self.K)):
            raise ValueError(f"🧩 code={self.code} does not fit into K={self.K} bits.")
        object.__setattr__(self, "K", int(self.K))
        object.__setattr__(self, "code", int(self.code))

    @classmethod
    def from_bits(cls, bits):
        bits = np.asarray(bits)
        if bits.ndim != 1:
            raise ValueError(f"🧩 A pattern needs a 1D sequence of bits, got shape {bits.shape}.")
        return cls(K=len(bits), code=int(bits_to_codes(bits)[0]))

    @classmethod
    def from_string(cls, string):
        code, K = string_to_code(string)
        return cls(K=K, code=code)

    @classmethod
    def coerce(cls, x, K=None):
        """
        Turn a pattern, a binary string, or a sequence of bits into a pattern.
        """
        if isinstance(x, AttributePattern):
            pattern = x
        elif isinstance(x, str):
            pattern = cls.from_string(x)
        else:
            pattern = cls.from_bits(x)
        if K is not None and pattern.K != K:
            raise ValueError(
                f"🧩 Pattern {pattern} has K={pattern.K}, but K={K} was expected."
            )
        return pattern

    @property
    def bits(self):
        return codes_to_bits([self.code], self.K)[0]

    def dominates(self, other):
        """
        Does this pattern have every attribute `other` has?
        """
        other = AttributePattern.coerce(other, K=self.K)
        return (self.code & other.code) == other.code

    def __or__(self, other):
        other = AttributePattern.coerce(other, K=self.K)
        return AttributePattern(self.K, self.code | other.code)

    def __len__(self):
        return self.K

    def __str__(self):
        return code_to_string(self.code, self.K)

    def __repr__(self):
        return f"<AttributePattern {self}>"


def _coerce_members(members, K=None):
    """
    Convert any reasonable collection of patterns into (codes, K).
    """
    if isinstance(members, PatternSet):
        if K is not None and members.K != K:
            raise ValueError(f"🧩 PatternSet has K={members.K}, but K={K} was expected.")
        return members.codes.copy(), members.K

    if isinstance(members, np.ndarray) and members.ndim == 2:
        if members.shape[0] == 0:
            if K is None:
                raise ValueError("🧩 An empty PatternSet needs an explicit K.")
            return np.zeros(0, dtype=np.uint64), check_K(K)
        if K is not None and members.shape[1] != K:
            raise ValueError(
                f"🧩 Patterns have {members.shape[1]} attributes, but K={K} was expected."
            )
        return bits_to_codes(members), members.shape[1]

    patterns = [AttributePattern.coerce(m, K=K) for m in members]
    if len(patterns) == 0:
        if K is None:
            raise ValueError("🧩 An empty PatternSet needs an explicit K.")
        return np.zeros(0, dtype=np.uint64), check_K(K)
    K = patterns[0].K
    for p in patterns:
        if p.K != K:
            raise ValueError(
                f"🧩 All patterns in a set must share K; found both K={K} and K={p.K}."
            )
    return np.array([p.code for p in patterns], dtype=np.uint64), K


class PatternSet:
    """
    An ordered, duplicate-free collection of attribute patterns
    that all share the same number of attributes K.

    The order of the members is kept exactly as given, because
    it labels the columns of Γ-matrices, Θ-matrices, and
    proportion vectors. Use `.sorted()` for the canonical order.
    """

    def __init__(self, members=(), K=None):
        """
        Initialize a `PatternSet`.

        Parameters
        ----------
        members : iterable, array, PatternSet
            The patterns, as `AttributePattern` objects, binary
            strings like "0110", sequences of bits, or a 2D
            array with one pattern per row.
        K : int, optional
            The number of attributes. Required for empty sets.
        """
        codes, K = _coerce_members(members, K)
        if len(np.unique(codes)) != len(codes):
            values, counts = np.unique(codes, return_counts=True)
            repeated = [code_to_string(v, K) for v in values[counts > 1]]
            raise ValueError(
                f"""
                🧩 A PatternSet can't contain duplicates, but these
                patterns appear more than once: {repeated}
                """
            )
        codes.setflags(write=False)
        self._codes = codes
        self.K = K
        self._lookup = None

    @classmethod
    def from_codes(cls, codes, K, unique=False):
        """
        Create a set directly from integer codes.

        Parameters
        ----------
        codes : array
            Integer codes (α_1 as most significant bit).
        K : int
            The number of attributes.
        unique : bool
            If True, drop repeated codes (keeping first appearances)
            instead of complaining about them.
        """
        codes = np.asarray(codes, dtype=np.uint64).reshape(-1)
        if unique:
            _, first = np.unique(codes, return_index=True)
            codes = codes[np.sort(first)]
        if len(codes) and int(codes.max()) >= 2**K:
            raise ValueError(f"🧩 Some codes don't fit into K={K} bits.")
        new = cls.__new__(cls)
        if len(np.unique(codes)) != len(codes):
            raise ValueError("🧩 A PatternSet can't contain duplicate codes.")
        codes = codes.copy()
        codes.setflags(write=False)
        new._codes = codes
        new.K = check_K(K)
        new._lookup = None
        return new

    @classmethod
    def unique(cls, members, K=None):
        """
        Create a set from members that may repeat, keeping first appearances.
        """
        if isinstance(members, np.ndarray) and members.ndim == 2 and len(members):
            return cls.from_codes(bits_to_codes(members), members.shape[1], unique=True)
        patterns = [AttributePattern.coerce(m, K=K) for m in members]
        if len(patterns) == 0:
            return cls([], K=K)
        return cls.from_codes(
            [p.code for p in patterns], patterns[0].K if K is None else K, unique=True
        )

    @classmethod
    def full(cls, K):
        """
        All 2^K patterns, in canonical order.
        """
        return cls.from_codes(all_codes(K), K)

    @classmethod
    def from_strings(cls, strings):
        return cls([str(s) for s in strings])

    @property
    def codes(self):
        return self._codes

    @property
    def bits(self):
        """
        The patterns as an (L, K) array of 0/1 values.
        """
        return codes_to_bits(self._codes, self.K)

    def strings(self):
        return [code_to_string(c, self.K) for c in self._codes]

    def _get_lookup(self):
        if self._lookup is None:
            self._lookup = {int(c): i for i, c in enumerate(self._codes)}
        return self._lookup

    def index(self, pattern):
        """
        Where is a particular pattern in this set?

        Raises
        ------
        ValueError
            If the pattern isn't a member.
        """
        p = AttributePattern.coerce(pattern, K=self.K)
        try:
            return self._get_lookup()[p.code]
        except KeyError:
            raise ValueError(f"🧩 Pattern {p} is not a member of this set.")

    def indices(self, other):
        """
        Positions of another set's members within this one (-1 if absent).
        """
        other = PatternSet(other, K=self.K)
        lookup = self._get_lookup()
        return np.array([lookup.get(int(c), -1) for c in other.codes], dtype=int)

    def contains_codes(self, codes):
        return np.isin(np.asarray(codes, dtype=np.uint64), self._codes)

    def __contains__(self, pattern):
        try:
            p = AttributePattern.coerce(pattern, K=self.K)
        except ValueError:
            return False
        return p.code in self._get_lookup()

    def __len__(self):
        return len(self._codes)

    def __iter__(self):
        for c in self._codes:
            yield AttributePattern(self.K, int(c))

    def __getitem__(self, key):
        if isinstance(key, (int, np.integer)):
            return AttributePattern(self.K, int(self._codes[key]))
        return PatternSet.from_codes(self._codes[key], self.K)

    def union(self, *others):
        """
        Members of this set followed by any new members of the others.
        """
        codes = [self._codes] + [PatternSet(o, K=self.K).codes for o in others]
        return PatternSet.from_codes(np.concatenate(codes), self.K, unique=True)

    def intersection(self, other):
        other = PatternSet(other, K=self.K)
        return PatternSet.from_codes(self._codes[other.contains_codes(self._codes)], self.K)

    def difference(self, other):
        other = PatternSet(other, K=self.K)
        return PatternSet.from_codes(self._codes[~other.contains_codes(self._codes)], self.K)

    def sorted(self):
        """
        The same members, in canonical (lexicographic) order.
        """
        return PatternSet.from_codes(np.sort(self._codes), self.K)

    def same_members(self, other):
        """
        Do two sets hold the same patterns (ignoring order)?
        """
        other = PatternSet(other)
        return other.K == self.K and np.array_equal(
            np.sort(self._codes), np.sort(other.codes)
        )

    def __eq__(self, other):
        if not isinstance(other, PatternSet):
            return NotImplemented
        return self.K == other.K and np.array_equal(self._codes, other.codes)

    __hash__ = None

    def __repr__(self):
        shown = self.strings()[:6]
        more = "" if len(self) <= 6 else f", ... ({len(self)} total)"
        return f"<PatternSet K={self.K} [{', '.join(shown)}{more}]>"
