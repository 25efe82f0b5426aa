from ..patterns import *
from ..response_models import *
from ..screening import *
from ..simulation import *
from .setup_tests import *


def test_screen_config():
    config = ScreenConfig()
    assert (config.m_max, config.m_eff, config.max_outer) == (20, 10, 100)
    with pytest.raises(ValueError):
        ScreenConfig(m_max=5, m_eff=6)
    with pytest.raises(ValueError):
        ScreenConfig(enhance_period=0)
    with pytest.raises(ValueError):
        ScreenConfig(theta_plus=0.2, theta_minus=0.8)
    assert config.replace(seed=3).seed == 3


def test_conditional_probability():
    theta = TwoParamItemParams([0.8, 0.8], [0.2, 0.2])

    # nothing requires attribute 1
    Q = QMatrix([[1, 0], [1, 0]])
    assert gibbs_conditional_prob([1, 1], Q, theta, "10", 1) == 0.5

    # one relevant item, answered correctly, other requirement met
    Q = QMatrix([[1, 1]])
    one = TwoParamItemParams([0.8], [0.2])
    assert np.isclose(gibbs_conditional_prob([1], Q, one, "10", 1), 0.8)
    assert np.isclose(gibbs_conditional_prob([0], Q, one, "10", 1), 0.2)
    # the other requirement missing makes the item uninformative
    assert gibbs_conditional_prob([1], Q, one, "00", 1) == 0.5

    with pytest.raises(IndexError):
        gibbs_conditional_prob([1], Q, one, "10", 2)
    with pytest.raises(ValueError):
        gibbs_conditional_prob([1], Q, TwoParamItemParams([1.0], [0.2], strict=False), "10", 1)


def test_single_subject_screen():
    Q = QMatrix([[1], [1], [1]])
    frozen = ScreenConfig(update_theta=False, theta_plus=0.9, theta_minus=0.1, max_outer=5)
    assert gibbs_screen([[1, 1, 1]], Q, config=frozen).a_screen.strings() == ["1"]
    assert gibbs_screen([[0, 0, 0]], Q, config=frozen).a_screen.strings() == ["0"]
    assert variational_screen([[1, 1, 1]], Q, config=frozen).a_screen.strings() == ["1"]


def test_noiseless_data_with_frozen_theta():
    Q = build_q_blocks(3)
    A0 = PatternSet(["000", "101", "011", "111"])
    rng = np.random.default_rng(0)
    truth = A0.bits[rng.integers(0, len(A0), 60)]
    R = np.all(truth[:, np.newaxis, :] >= Q.entries[np.newaxis, :, :], axis=2).astype(int)

    theta = TwoParamItemParams([0.999] * Q.J, [0.001] * Q.J)
    config = ScreenConfig(update_theta=False, seed=1)
    for screener in [gibbs_screen, variational_screen]:
        result = screener(R, Q, config=config, theta=theta)
        assert np.all((result.a_ave > 0.9) | (result.a_ave < 0.1))
        assert np.array_equal(result.a_ave > 0.5, truth.astype(bool))
        assert result.a_screen.same_members(A0)
        assert result.coverage(A0) == 1.0


def test_screen_on_simulated_data():
    R, truth = simulate(SimDesign(K=6, N=300, n_true=5, noise=0.1, seed=1))
    config = ScreenConfig(seed=2)
    result = gibbs_screen(R, truth.Q, config=config)
    assert len(result) <= 300
    assert np.all((result.a_ave >= 0) & (result.a_ave <= 1))
    assert result.coverage(truth.patterns) >= 0.8
    assert result.method == "gibbs"

    again = gibbs_screen(R, truth.Q, config=config)
    assert again.a_screen == result.a_screen
    assert np.array_equal(again.a_ave, result.a_ave)

    variational = variational_screen(R, truth.Q, config=config)
    assert variational.method == "variational"
    assert len(variational) <= 300


def test_variational_symmetry_and_unused_attributes():
    R = np.array([[1, 1], [0, 0], [1, 1], [1, 1]])
    result = variational_screen(R, QMatrix([[1, 0], [0, 1]]))
    assert np.allclose(result.a_ave[:, 0], result.a_ave[:, 1])

    # attribute 1 never matters, so its probability stays at 1/2 and binarizes to 0
    result = variational_screen(R, QMatrix([[1, 0], [1, 0]]))
    assert np.allclose(result.a_ave[:, 1], 0.5)
    assert np.all(result.a_screen.bits[:, 1] == 0)


def test_binarize_and_enhance():
    assert binarize([[0.5, 0.9], [0.6, 0.1], [0.51, 0.2]], 2).strings() == ["01", "10"]

    final = PatternSet(["01"])
    assert enhance_union([], final).strings() == ["01"]
    assert enhance_union([PatternSet(["10"]), PatternSet(["01"])], final).strings() == ["01", "10"]


def test_enhanced_screening():
    R, truth = simulate(SimDesign(K=5, N=200, n_true=5, noise=0.2, seed=4))
    plain = gibbs_screen(R, truth.Q, config=ScreenConfig(seed=0, max_outer=12, tol=1e-9))
    enhanced = gibbs_screen(
        R, truth.Q, config=ScreenConfig(seed=0, max_outer=12, tol=1e-9, enhance_period=3)
    )
    assert plain.snapshots_used == 0
    assert enhanced.snapshots_used == 4
    assert np.all(enhanced.a_screen.contains_codes(binarize(enhanced.a_ave, 5).codes))
    # snapshots don't touch the random stream, so the final sets agree
    assert np.all(enhanced.a_screen.contains_codes(plain.a_screen.codes))
    assert enhanced.coverage(truth.patterns) >= plain.coverage(truth.patterns)


def test_gap_violations_are_reported():
    R, truth = simulate(SimDesign(K=3, N=100, n_true=3, noise=0.1, seed=5))
    with pytest.warns(UserWarning, match="gap"):
        result = gibbs_screen(R, truth.Q, config=ScreenConfig(delta_gap=0.99, max_outer=3))
    assert result.gap_violations == truth.Q.J


@pytest.mark.slow
def test_sure_screening_coverage():
    design = SimDesign(K=15, N=500, noise=0.1)
    coverages = []
    for replicate in design.replicates(20):
        R, truth = simulate(replicate)
        result = gibbs_screen(R, truth.Q, config=ScreenConfig(seed=replicate.seed))
        assert len(result) <= replicate.N
        coverages.append(result.coverage(truth.patterns))
    assert np.mean(coverages) >= 0.95
