from ..imports import *
from ..identifiability import *
from .config import *
from .fitting import fit

__all__ = ["pem_fit_equiv"]


def pem_fit_equiv(R, Q, config=None, init=None, **kw):
    """
    Penalized EM over equivalence class representatives.

    When Q leaves some patterns indistinguishable, the proportions
    of whole classes (rather than single patterns) are what the data
    can pin down. This fits the two-parameter model over one
    representative per class; the result's `.classes` maps each
    representative back to its members.
    """
    config = (config or FitConfig()).replace(algorithm="pem", **kw)
    if config.model != "two-param":
        raise ValueError("🧩 Equivalence class fits use the two-parameter model.")
    classes = EquivalenceClasses(Q)
    result = fit(R, Q, classes.representatives, config=config, init=init)
    result.classes = classes
    return result
