"""
Named random-number streams derived from one seed.
"""

from ..imports import *

__all__ = ["STREAMS", "named_rng", "replicate_seeds"]

# every source of randomness gets its own stream, so that
# changing one part of a scenario never shifts the others
STREAMS = dict(patterns=1, assignments=2, responses=3, screening=4)


def named_rng(seed, name, *extra):
    """
    A `np.random.Generator` for one named stream of a seed.

    Parameters
    ----------
    seed : int
        The scenario seed.
    name : str
        One of the keys of `STREAMS`.
    *extra : int
        More integers to mix in (for example a subject index).
    """
    if name not in STREAMS:
        raise ValueError(f"🧩 Unknown random stream '{name}'; choose from {list(STREAMS)}.")
    entropy = [int(seed), STREAMS[name]] + [int(x) for x in extra]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def replicate_seeds(seed, n):
    """
    `n` independent replicate seeds derived from one seed.
    """
    children = np.random.SeedSequence(int(seed)).spawn(int(n))
    return [int(c.generate_state(1, dtype=np.uint32)[0]) for c in children]
