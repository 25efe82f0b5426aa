from .slamdata import *
from ..simulation import *
from ..analysis.metrics import selection_metrics, rmse_proportions

__all__ = ["SimulatedSLAMData"]


class SimulatedSLAMData(SLAMData):
    """
    `SimulatedSLAMData` objects are generated from a `SimDesign`,
    with the planted truth (true patterns, proportions, item
    parameters, and each subject's pattern) kept alongside.
    They're useful for checking how well screening and
    estimation recover what went in.
    """

    def __init__(self, design=None, name=None, **kw):
        """
        Initialize a `SimulatedSLAMData` object.

        Parameters
        ----------
        design : SimDesign, optional
            The simulation design. If None, one is built from `**kw`.
        name : str, optional
            A name for this dataset.
        **kw : dict, optional
            Fields for a `SimDesign` (if `design` isn't given).
        """
        SLAMData.__init__(self)

        # (remove the history entry from creating the SLAMData)
        self._remove_last_history_entry()

        # create a history entry for this action (before other variables are defined)
        h = self._create_history_entry("SimulatedSLAMData", locals())

        if design is None:
            design = SimDesign(**kw)
        elif kw:
            raise ValueError("🧩 Give either a SimDesign or its fields, not both.")

        R, truth = simulate(design)
        self._initialize_from_arrays(responses=R, Q=truth.Q)
        self.subjectlike["true_assignment"] = truth.assignments * 1
        self.metadata["name"] = name
        self.metadata["design"] = design
        self.metadata["truth"] = truth

        self._record_history_entry(h)

    @property
    def truth(self):
        return self.metadata["truth"]

    @property
    def true_patterns(self):
        """
        The planted patterns 𝒜_0.
        """
        return self.truth.patterns

    @property
    def true_proportions(self):
        return self.truth.proportions

    @property
    def true_theta(self):
        """
        The (J, |𝒜_0|) true response probabilities.
        """
        return self.truth.theta

    def score(self, result, A_screen=None):
        """
        How well did a fit recover the planted patterns?

        Parameters
        ----------
        result : FitResult
        A_screen : PatternSet, optional
            The candidates the fit started from, for coverage.

        Returns
        -------
        record : AccuracyRecord
            With `rmse` set to the per-pattern error of the
            proportions (absent patterns count as 0).
        """
        record = selection_metrics(self.true_patterns, result.selected, A_screen=A_screen)
        record.rmse = rmse_proportions(self.true_proportions, [result]).tolist()
        return record
