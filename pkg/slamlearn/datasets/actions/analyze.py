"""
Screening and estimation, run on the data a `SLAMData` holds.
"""

from ...imports import *
from ...patterns import PatternSet
from ...screening import *
from ...estimation import *
from ...estimation import fit as fit_model
from ...analysis.bench import candidate_patterns

__all__ = ["screen", "fit", "path", "fit_equivalence_classes", "_candidates"]


def _candidates(self, patterns=None):
    """
    Turn whatever was given into a candidate `PatternSet`.

    With nothing given, small K uses every pattern and larger K
    uses Gibbs screening.
    """
    if patterns is None:
        return candidate_patterns(self.responses, self.Q)[0]
    if isinstance(patterns, ScreenResult):
        return patterns.a_screen
    return patterns if isinstance(patterns, PatternSet) else PatternSet(patterns, K=self.K)


def screen(self, config=None, variational=False):
    """
    Screen for candidate attribute patterns.

    Parameters
    ----------
    config : ScreenConfig, optional
        Screening settings.
    variational : bool
        Use mean-field variational updates instead of Gibbs draws.

    Returns
    -------
    result : ScreenResult
    """
    h = self._create_history_entry("screen", locals())
    screener = variational_screen if variational else gibbs_screen
    result = screener(self.responses, self.Q, config=config)
    self._record_history_entry(h)
    return result


def fit(self, patterns=None, config=None):
    """
    Fit one model over a set of candidate patterns.

    Parameters
    ----------
    patterns : PatternSet, ScreenResult, list, optional
        The candidates. See `_candidates` for the default.
    config : FitConfig, optional
        The algorithm and its settings.

    Returns
    -------
    result : FitResult
    """
    h = self._create_history_entry("fit", locals())
    result = fit_model(self.responses, self.Q, self._candidates(patterns), config=config)
    self._record_history_entry(h)
    return result


def path(self, grid=None, patterns=None, config=None):
    """
    Fit along a grid of tuning values and pick one by EBIC.

    Returns
    -------
    path : SolutionPath
    """
    h = self._create_history_entry("path", locals())
    result = solution_path(
        self.responses,
        self.Q,
        self._candidates(patterns),
        grid=grid,
        config=config,
        progress=False,
    )
    self._record_history_entry(h)
    return result


def fit_equivalence_classes(self, config=None):
    """
    Penalized EM over one representative per equivalence class of Q.

    Returns
    -------
    result : FitResult
        With `.classes` set.
    """
    h = self._create_history_entry("fit_equivalence_classes", locals())
    result = pem_fit_equiv(self.responses, self.Q, config=config)
    self._record_history_entry(h)
    return result
