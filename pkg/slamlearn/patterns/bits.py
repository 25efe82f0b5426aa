"""
Low-level helpers for storing binary vectors as unsigned 64-bit words.

A pattern (α_1, ..., α_K) is stored as the integer whose binary
expansion reads α_1 ... α_K from the most significant bit down, so
sorting the integers sorts the patterns lexicographically.
"""

from ..imports import *

__all__ = [
    "check_K",
    "bits_to_codes",
    "codes_to_bits",
    "code_to_string",
    "string_to_code",
    "pack_columns",
    "dominance_matrix",
    "has_distinct_rows",
    "all_codes",
]


def check_K(K):
    """
    Make sure a number of attributes fits in one 64-bit word.
    """
    if int(K) < 1:
        raise ValueError(f"🧩 The number of attributes must be at least 1 (got K={K}).")
    if int(K) > MAXIMUM_K:
        raise ValueError(
            f"""
            🧩 K={K} attributes won't fit into a single 64-bit pattern
            word. Only K <= {MAXIMUM_K} is supported.
            """
        )
    return int(K)


def _shifts(K):
    return np.arange(K - 1, -1, -1, dtype=np.uint64)


def bits_to_codes(bits):
    """
    Convert an (n, K) matrix of 0/1 values into n integer codes.

    Parameters
    ----------
    bits : array
        A 2D array with one binary vector per row.

    Returns
    -------
    codes : array
        A 1D `np.uint64` array with one code per row.
    """
    bits = np.asarray(bits)
    if bits.ndim == 1:
        bits = bits[np.newaxis, :]
    if bits.ndim != 2:
        raise ValueError(f"🧩 Expected a 2D array of bits, got shape {bits.shape}.")
    K = check_K(bits.shape[1])
    if not np.all((bits == 0) | (bits == 1)):
        raise ValueError("🧩 Binary vectors may only contain 0s and 1s.")
    weights = np.left_shift(np.uint64(1), _shifts(K))
    return np.sum(bits.astype(np.uint64) * weights[np.newaxis, :], axis=1, dtype=np.uint64)


def codes_to_bits(codes, K):
    """
    Convert integer codes back into an (n, K) matrix of 0/1 values.
    """
    K = check_K(K)
    codes = np.asarray(codes, dtype=np.uint64).reshape(-1)
    return ((codes[:, np.newaxis] >> _shifts(K)[np.newaxis, :]) & np.uint64(1)).astype(
        np.int8
    )


def code_to_string(code, K):
    return format(int(code), f"0{K}b")


def string_to_code(string):
    """
    Convert a string like "0101" into its (code, K).
    """
    s = str(string).strip()
    if len(s) == 0 or set(s) - {"0", "1"}:
        raise ValueError(
            f"🧩 '{string}' is not a binary pattern string (only 0s and 1s are allowed)."
        )
    return int(s, 2), check_K(len(s))


def all_codes(K):
    """
    Every code of length K, in canonical (increasing) order.
    """
    K = check_K(K)
    if K > MAXIMUM_ENUMERATION:
        raise ValueError(
            f"""
            🧩 Refusing to enumerate all 2^{K} patterns; enumeration
            is limited to K <= {MAXIMUM_ENUMERATION}.
            """
        )
    return np.arange(2**K, dtype=np.uint64)


def pack_columns(entries):
    """
    Pack each column of a binary (n, L) matrix into 64-bit words.

    Parameters
    ----------
    entries : array
        A binary matrix; the rows are compressed, one column
        at a time. A matrix with zero rows packs to all-zero words.

    Returns
    -------
    packed : array
        An (L, W) array of `np.uint64`, with W = max(1, ceil(n/64)).
    """
    entries = np.asarray(entries)
    n, L = entries.shape
    W = max(1, int(np.ceil(n / 64)))
    packed = np.zeros((L, W), dtype=np.uint64)
    for w in range(W):
        chunk = entries[64 * w : 64 * (w + 1)]
        if len(chunk) > 0 and L > 0:
            packed[:, w] = bits_to_codes(chunk.T)
    return packed


def dominance_matrix(packed):
    """
    The relation a ⪰ b for packed binary vectors (entrywise ≥).

    Parameters
    ----------
    packed : array
        An (L, W) array of packed words, one row per vector.

    Returns
    -------
    relation : array
        An (L, L) boolean array with `relation[a, b]` True
        when vector a is entrywise at least vector b.
    """
    a = packed[:, np.newaxis, :]
    b = packed[np.newaxis, :, :]
    return np.all((a & b) == b, axis=2)


def has_distinct_rows(packed):
    return len(np.unique(packed, axis=0)) == len(packed)
