from ..patterns import *
from ..estimation import *
from ..screening import *
from ..simulation import *
from ..datasets import *
from .setup_tests import *


def _small_data():
    Q = [[1, 0], [0, 1], [1, 1]]
    responses = np.array([[1, 0, 0], [0, 1, 0], [1, 1, 1], [0, 0, 0]])
    return SLAMData(responses=responses, Q=Q, name="tiny")


def test_create_from_arrays():
    data = _small_data()
    assert data.shape == (4, 3)
    assert (data.N, data.J, data.K) == (4, 3, 2)
    assert data.name == "tiny"
    assert data.Q == QMatrix([[1, 0], [0, 1], [1, 1]])
    assert repr(data) == "<SLAMData'tiny'(4n, 3j, 2k)>"

    with pytest.raises(ValueError):
        SLAMData(responses=np.ones((4, 3)))
    with pytest.raises(ValueError):
        SLAMData(responses=np.ones((4, 3)), Q=[[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        SLAMData(responses=2 * np.ones((4, 3)), Q=[[1], [1], [1]])


def test_extra_arrays_and_attributes():
    data = SLAMData(
        responses=np.zeros((4, 3)), Q=[[1], [1], [1]], group=np.array([0, 0, 1, 1])
    )
    assert np.array_equal(data.subjectlike["group"], [0, 0, 1, 1])
    assert np.array_equal(data.group, [0, 0, 1, 1])

    data.difficulty = np.array([0.1, 0.2, 0.3])
    assert "difficulty" in data.itemlike
    data.note = "pilot"
    assert data.metadata["note"] == "pilot"
    with pytest.raises(AttributeError):
        data.nonexistent


def test_create_from_dictionaries():
    data = _small_data()
    copied = SLAMData(**data._get_core_dictionaries())
    assert copied == data
    copied.responselike["responses"][0, 0] = 0
    assert data.responses[0, 0] == 1


def test_subset():
    data = _small_data()
    assert data.subset([0, 2]).N == 2
    assert np.array_equal(data.subset([0, 2]).responses, data.responses[[0, 2]])
    assert data.subset(np.array([True, False, False, True])).N == 2
    assert data.subset(slice(1, None)).N == 3
    assert data.subset() == data
    assert data.N == 4
    with pytest.raises(ValueError):
        data.subset([7])
    with pytest.raises(ValueError):
        data.subset(np.array([True, False]))


def test_analysis_methods():
    data = SimulatedSLAMData(K=3, N=400, n_true=3, seed=3)
    path = data.path(grid=[-0.5, -1.0])
    assert len(path) == 2
    assert path.best.support_size >= 1

    config = FitConfig(algorithm="em")
    result = data.fit(config=config)
    assert len(result.patterns) == 8
    chosen = data.fit(patterns=path.best.selected, config=config)
    assert chosen.patterns.same_members(path.best.selected)

    screen = data.screen(config=ScreenConfig(max_outer=5))
    assert len(screen) <= data.N
    assert data.fit(patterns=screen, config=config).patterns == screen.a_screen

    classes = data.fit_equivalence_classes()
    assert classes.classes is not None

    assert ".path(" in data.history()
    assert ".fit_equivalence_classes(" in data.history()


def test_simulated_data():
    design = SimDesign(K=3, N=300, n_true=3, seed=5)
    data = SimulatedSLAMData(design=design, name="sim")
    R, truth = simulate(design)
    assert np.array_equal(data.responses, R)
    assert data.true_patterns == truth.patterns
    assert np.array_equal(data.subjectlike["true_assignment"], truth.assignments)
    assert data.true_theta.values.shape == (9, 3)
    assert SimulatedSLAMData(K=3, N=300, n_true=3, seed=5) == data
    with pytest.raises(ValueError):
        SimulatedSLAMData(design=design, K=4)

    best = data.path(grid=[-1.0]).best
    record = data.score(best)
    assert 0 <= record.tpr <= 1
    assert len(record.rmse) == 3
    assert record.support_size == best.support_size

    subset = data.subset(slice(0, 100))
    assert isinstance(subset, SimulatedSLAMData)
    assert len(subset.subjectlike["true_assignment"]) == 100
    assert subset.truth is not data.truth
