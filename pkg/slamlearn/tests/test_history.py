from ..patterns import *
from ..estimation import *
from ..simulation import *
from ..screening import *
from ..datasets import *
from ..datasets.helpers.history import represent_as_copypasteable
from .setup_tests import *


def test_represent_as_copypasteable():
    assert represent_as_copypasteable(np.array([1, 2])) == "np.array([1, 2])"
    assert represent_as_copypasteable(PatternSet(["01", "11"])) == "PatternSet(['01', '11'], K=2)"
    assert represent_as_copypasteable(QMatrix([[1, 0], [0, 1]])) == "QMatrix([[1, 0], [0, 1]])"
    assert represent_as_copypasteable(slice(1, 5)) == "slice(1, 5, None)"
    assert represent_as_copypasteable("pem") == "'pem'"
    assert eval(represent_as_copypasteable(FitConfig(algorithm="em"))) == FitConfig(algorithm="em")


def test_history_starts_with_creation():
    data = SLAMData(responses=np.array([[1, 0], [0, 1]]), Q=[[1, 0], [0, 1]])
    h = data.history()
    assert h.startswith("(\nSLAMData(")
    assert "responses=np.array([[1, 0],\n       [0, 1]])" in h
    assert h.count("SLAMData(") == 1


def test_history_is_copypasteable():
    x = SimulatedSLAMData(design=SimDesign(K=3, N=50, n_true=3, seed=4))
    y = x.subset([0, 5, 10]).subset(np.array([True, False, True]))
    h = y.history()
    assert h.count("SimulatedSLAMData(") == 1
    assert h.count(".subset(") == 2

    # the history rebuilds the same data
    assert eval(h) == y
    assert "subset" not in x.history()


def test_analysis_actions_are_recorded():
    data = SimulatedSLAMData(K=3, N=100, n_true=3, seed=1)
    data.fit(config=FitConfig(algorithm="em", max_iter=20))
    h = data.history()
    assert ".fit(" in h
    assert "FitConfig(" in h


def test_history_of_slices_and_screened_candidates():
    x = SimulatedSLAMData(K=3, N=60, n_true=3, seed=2)
    y = x.subset(slice(10, 40, 2))
    assert "subjects=slice(10, 40, 2)" in y.history()
    assert eval(y.history()) == y

    screened = x.screen(config=ScreenConfig(max_outer=3))
    x.fit(patterns=screened, config=FitConfig(algorithm="em", max_iter=10))
    h = x.history()
    assert ".screen(" in h
    assert f"patterns={represent_as_copypasteable(screened.a_screen)}" in h
    assert eval(represent_as_copypasteable(screened)).same_members(screened.a_screen)
