from ..imports import *
from ..patterns import *
from .gibbs import _screen
from .config import *

__all__ = ["variational_screen"]


class _VariationalState:
    """
    Mean-field probabilities that each subject has each attribute.
    """

    method = "variational"

    def __init__(self, bits, Q, rng):
        self.P = np.asarray(bits, dtype=float)
        self.Q = Q.entries.astype(float)
        self.K = Q.K
        # Q with column k removed, for ∏_{m≠k} P_im^q_jm
        self.others = []
        for k in range(self.K):
            q = self.Q.copy()
            q[:, k] = 0
            self.others.append(q.T)

    def _log_P(self):
        return np.log(np.clip(self.P, 1e-300, 1))

    def sweep(self, W):
        for k in range(self.K):
            capable = np.exp(self._log_P() @ self.others[k])
            self.P[:, k] = expit((capable * W) @ self.Q[:, k])

    def attributes(self):
        return self.P.copy()

    def ideal(self):
        return np.exp(self._log_P() @ self.Q.T)


def variational_screen(R, Q, config=None, theta=None):
    """
    Screen candidate patterns with deterministic mean-field updates.

    Instead of drawing each attribute, every update stores the
    conditional probability itself, with the other attributes
    replaced by their current probabilities. Only the starting
    values depend on the seed.

    Returns
    -------
    result : ScreenResult
    """
    return _screen(R, Q, config, theta, _VariationalState)
