from ..imports import *
from ..patterns import PatternSet

__all__ = ["read_patterns"]


def read_patterns(filepath, K=None):
    """
    Read one binary pattern string per line ("0110...").

    Blank lines and "#" comments are ignored; repeated
    patterns are an error.

    Returns
    -------
    patterns : PatternSet
        In the order they appear in the file.
    """
    strings, lines = [], []
    with open(filepath) as f:
        for number, line in enumerate(f, start=1):
            text = line.split("#")[0].strip()
            if text == "":
                continue
            if set(text) - {"0", "1"}:
                raise ValueError(f"🧩 {filepath}, line {number}: '{text}' isn't a binary pattern.")
            if K is not None and len(text) != K:
                raise ValueError(
                    f"🧩 {filepath}, line {number}: '{text}' has {len(text)} attributes, not K={K}."
                )
            if strings and len(text) != len(strings[0]):
                raise ValueError(
                    f"🧩 {filepath}, line {number}: '{text}' has a different length than line {lines[0]}."
                )
            if text in strings:
                raise ValueError(
                    f"🧩 {filepath}, line {number}: '{text}' repeats line {lines[strings.index(text)]}."
                )
            strings.append(text)
            lines.append(number)
    if not strings:
        if K is None:
            raise ValueError(f"🧩 {filepath} contains no patterns.")
        return PatternSet([], K=K)
    return PatternSet(strings)
