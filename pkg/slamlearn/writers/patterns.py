from ..imports import *
from ..patterns import PatternSet

__all__ = ["write_patterns"]


def write_patterns(filepath, patterns, comment=None, canonical=True):
    """
    Write one binary pattern string per line.

    Parameters
    ----------
    filepath : str
    patterns : PatternSet
    comment : str, optional
        Written first, as "#" lines.
    canonical : bool
        Sort the patterns into canonical order first.
    """
    patterns = patterns if isinstance(patterns, PatternSet) else PatternSet(patterns)
    if canonical:
        patterns = patterns.sorted()
    with open(filepath, "w") as f:
        if comment:
            for line in str(comment).splitlines():
                f.write(f"# {line}\n")
        for s in patterns.strings():
            f.write(s + "\n")
