"""
The J×K binary Q-matrix linking items to the attributes they require.
"""

from ..imports import *
from .bits import *

__all__ = ["QMatrix"]


class QMatrix:
    """
    A J×K binary design matrix. Row j (`q_j`) lists the attributes
    item j requires; `q[j, k] = 1` means item j needs attribute k.

    Duplicate rows are kept (they still carry their own item
    parameters). All-zero rows are allowed but flagged with a
    warning, because such an item doesn't constrain anything.
    """

    def __init__(self, entries):
        """
        Initialize a `QMatrix`.

        Parameters
        ----------
        entries : array, QMatrix
            A 2D array-like of 0/1 values with shape (J, K).
        """
        if isinstance(entries, QMatrix):
            entries = entries.entries
        entries = np.array(entries)
        if entries.ndim != 2:
            raise ValueError(f"🧩 A Q-matrix must be 2D, not shape {entries.shape}.")
        J, K = entries.shape
        if J < 1 or K < 1:
            raise ValueError(f"🧩 A Q-matrix needs J >= 1 and K >= 1 (got {J}x{K}).")
        check_K(K)
        if not np.all((entries == 0) | (entries == 1)):
            raise ValueError("🧩 Q-matrix entries may only be 0 or 1.")

        self.entries = entries.astype(np.int8)
        self.entries.setflags(write=False)
        self.codes = bits_to_codes(self.entries)
        self.codes.setflags(write=False)

        empty = np.flatnonzero(self.entries.sum(axis=1) == 0)
        if len(empty) > 0:
            cheerfully_suggest(
                f"""
                Items {list(empty)} require no attributes at all (all-zero
                Q rows). Every pattern will count as capable for them.
                """
            )

    @property
    def J(self):
        return self.entries.shape[0]

    @property
    def K(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def required(self, j):
        """
        The attributes (𝒦_j) that item j requires, as 0-based indices.
        """
        return np.flatnonzero(self.entries[j])

    def rows(self, items):
        """
        A new `QMatrix` with only some of the items.
        """
        return QMatrix(self.entries[list(items)])

    @classmethod
    def stack(cls, blocks):
        """
        Stack several Q-matrices (or arrays) on top of each other.
        """
        return cls(np.vstack([QMatrix(b).entries for b in blocks]))

    def __getitem__(self, key):
        return self.entries[key]

    def __len__(self):
        return self.J

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None

    def __repr__(self):
        return f"<QMatrix J={self.J} K={self.K}>"
