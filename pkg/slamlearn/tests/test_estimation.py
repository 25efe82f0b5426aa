from ..patterns import *
from ..response_models import *
from ..estimation import *
from ..simulation import *
from .setup_tests import *
from scipy.optimize import minimize_scalar
import warnings, dataclasses


def _random_instance(seed, N=40, K=2):
    rng = np.random.default_rng(seed)
    J = 2 * K
    Q = np.zeros((J, K), dtype=int)
    while np.any(Q.sum(axis=1) == 0):
        Q = rng.integers(0, 2, (J, K))
    R = rng.integers(0, 2, (N, J))
    return R, QMatrix(Q), PatternSet.full(K)


def _starting_theta(Q, A):
    G = build_gamma(Q, A)
    return theta_two_param(G, TwoParamItemParams([0.75] * Q.J, [0.25] * Q.J))


def test_fit_config():
    config = FitConfig()
    assert config.algorithm == "pem" and config.lam == -1.0
    with pytest.raises(ValueError):
        FitConfig(lam=0.0)
    with pytest.raises(ValueError):
        FitConfig(algorithm="lasso")
    with pytest.raises(ValueError):
        FitConfig(upsilon=1.5)
    with pytest.raises(ValueError):
        FitConfig(c=0.5)
    assert FitConfig(algorithm="em", lam=0.0).algorithm == "em"

    assert config.resolve(100).rho == 1 / 200
    assert config.replace(rho=0.01).resolve(100).rho == 0.01
    with pytest.warns(UserWarning, match="threshold"):
        config.replace(rho=0.3).resolve(100, 40)

    # the default ρ = 1/(2N) stays quiet for the usual candidate sets
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for N, L in [(1000, 1024), (500, 1024), (300, 8), (150, 150), (10, 4)]:
            assert config.resolve(N, L).rho == 1 / (2 * N)

    assert config.with_tuning(-2.0).lam == -2.0
    assert FitConfig(algorithm="fpvem").with_tuning(0.5).upsilon == 0.5
    assert FitConfig(algorithm="fpvem").tuning_name == "upsilon"
    assert FitConfig.from_dict(config.to_dict()) == config
    with pytest.raises((ValueError, TypeError)):
        FitConfig.from_dict(dict(model="two-param", penalty=3))


def test_default_grids():
    lams = default_grid("pem")
    assert len(lams) == 20
    assert np.isclose(lams[0], -0.2) and np.isclose(lams[-1], -4.0)
    upsilons = default_grid("fpvem")
    assert np.allclose(upsilons, [1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3])
    assert default_grid("em") == [0.0]
    with pytest.raises(ValueError):
        default_grid("gibbs")


def test_e_step():
    Q, A, G = gamma_52()
    Theta = theta_two_param(G, TwoParamItemParams.from_noise(5, 0.2))
    R = np.array([[1, 0, 1, 0, 0], [0, 1, 0, 1, 0]])

    phi = e_step(Theta, [1.0, 1.0], R)
    assert np.allclose(phi.sum(axis=1), 1, atol=1e-10)
    assert phi[0, 0] > 0.9 and phi[1, 1] > 0.9

    # direct evaluation of the same posterior
    likelihood = np.prod(
        np.where(R[:, :, np.newaxis] == 1, Theta.values, 1 - Theta.values), axis=1
    )
    weights = np.array([3.0, 1.0])
    direct = likelihood * weights / (likelihood * weights).sum(axis=1, keepdims=True)
    assert np.allclose(e_step(Theta, weights, R), direct, atol=1e-12)

    # identical columns and equal weights split evenly
    same = ThetaMatrix(np.full((5, 2), 0.3), A)
    assert np.allclose(e_step(same, [2.0, 2.0], R), 0.5)

    # nearly all weight on one pattern
    assert e_step(same, [1.0, 1e-300], R)[0, 0] > 1 - 1e-12

    with pytest.raises(ValueError):
        e_step(Theta, [1.0, -1.0], R)
    with pytest.raises(ValueError):
        e_step(Theta, [1.0, 1.0, 1.0], R)


def test_digamma():
    assert np.isclose(digamma(1.0), -0.5772156649015329, atol=1e-10)
    assert np.isclose(digamma(0.5), -0.5772156649015329 - 2 * np.log(2), atol=1e-10)
    x = np.random.default_rng(0).uniform(0.01, 50, 20)
    assert np.allclose(digamma(x + 1) - digamma(x), 1 / x, atol=1e-10)
    for bad in [0.0, -1.0, [1.0, -2.0]]:
        with pytest.raises(ValueError):
            digamma(bad)


def test_penalized_objective():
    R, Q, A = _random_instance(1)
    Theta = _starting_theta(Q, A)
    p = ProportionVector.uniform(A)
    loglik = log_likelihood(Theta, p, R)
    assert np.isclose(penalized_objective(Theta, p, R, 0.0, 0.01), loglik)
    # every p = 0.25 is at or below ρ = 0.5
    assert np.isclose(penalized_objective(Theta, p, R, -2.0, 0.5) - loglik, -2.0 * 4 * np.log(0.5))
    assert np.isclose(
        penalized_objective(Theta, p, R, -2.0, 0.01) - loglik, -2.0 * 4 * np.log(0.25)
    )
    assert np.allclose(log_rho([0.001, 0.3], 0.01), np.log([0.01, 0.3]))


def test_ebic():
    assert np.isclose(ebic(-100, 2, 100, 4, 1.0), 212.794, atol=1e-3)
    assert np.isclose(ebic(-100, 2, 100, 4, 0.0), 200 + 2 * np.log(100))
    assert np.isclose(ebic(-100, 0, 100, 4), 200)
    with pytest.raises(ValueError):
        ebic(-100, 5, 100, 4)
    with pytest.raises(ValueError):
        ebic(-100, 2, 100, 4, gamma=2)


def test_delta_updates_on_a_single_pattern():
    Q = QMatrix([[1, 0], [0, 1]])
    A = PatternSet(["11"])

    # with one pattern every φ is 1, so Σφ = N
    R = np.ones((5, 2), dtype=int)
    with pytest.warns(UserWarning, match="didn't converge"):
        result = pem_fit(R, Q, A, lam=-2.0, max_iter=1)
    assert np.isclose(result.delta[0], 3.0)
    with pytest.warns(UserWarning, match="didn't converge"):
        result = pem_fit(R, Q, A, lam=-10.0, c=0.01, max_iter=1)
    assert np.isclose(result.delta[0], 0.01)

    R = np.ones((10, 2), dtype=int)
    with pytest.warns(UserWarning, match="didn't converge"):
        result = fpvem_fit(R, Q, A, beta=0.01, upsilon=0.5, max_iter=1)
    assert np.isclose(result.delta[0], 5.01)


def test_first_iteration_matches_formulas():
    R, Q, A = _random_instance(2)
    Theta = _starting_theta(Q, A)

    phi = e_step(Theta, np.ones(len(A)), R)
    with pytest.warns(UserWarning):
        result = pem_fit(R, Q, A, lam=-3.0, max_iter=1)
    assert np.allclose(result.delta, np.maximum(0.01, -3.0 + phi.sum(axis=0)))

    with pytest.warns(UserWarning):
        result = em_fit(R, Q, A, max_iter=1)
    assert np.allclose(result.delta, phi.sum(axis=0))

    # Δ⁰ = β everywhere, so the digamma weights cancel
    phi = e_step(Theta, np.ones(len(A)), R, power=0.6)
    with pytest.warns(UserWarning):
        result = fpvem_fit(R, Q, A, upsilon=0.6, beta=0.05, max_iter=1)
    assert np.allclose(result.delta, 0.05 + 0.6 * phi.sum(axis=0))


def test_m_step_two_param_matches_numeric_oracle():
    rng = np.random.default_rng(3)
    Q = QMatrix([[1, 0, 0], [0, 1, 1], [1, 1, 0], [0, 0, 1]])
    A = PatternSet.full(3)
    G = build_gamma(Q, A)
    R = rng.integers(0, 2, (30, 4))
    phi = rng.dirichlet(np.ones(len(A)), size=30)
    params = m_step_two_param(phi, G, R)

    for j in range(Q.J):
        for side, estimate in [(1, params.theta_plus[j]), (0, params.theta_minus[j])]:
            weight = phi[:, G.entries[j] == side].sum(axis=1)

            def negative(t):
                return -np.sum(weight * (R[:, j] * np.log(t) + (1 - R[:, j]) * np.log(1 - t)))

            best = minimize_scalar(
                negative, bounds=(1e-9, 1 - 1e-9), method="bounded", options=dict(xatol=1e-12)
            )
            assert np.isclose(estimate, best.x, atol=1e-6)


def test_m_step_two_param_edge_cases():
    Q, A, G = gamma_52()
    R = np.ones((4, 5), dtype=int)

    # all weight on capable patterns for item 0 (pattern "10")
    phi = np.tile([1.0, 0.0], (4, 1))
    params = m_step_two_param(phi, G, R)
    assert params.theta_plus[0] == 1.0
    assert clamp_theta(params.theta_plus)[0][0] == 1 - THETA_FLOOR
    # item 1 has nobody capable, so θ⁺ keeps the previous value
    assert params.theta_plus[1] == 0.5

    phi = np.full((4, 2), 0.5)
    params = m_step_two_param(phi, G, R)
    assert np.allclose(params.theta_plus[:4], 1.0)
    assert np.allclose(params.theta_minus[:4], 1.0)


def test_m_step_all_effect():
    rng = np.random.default_rng(4)
    Q = QMatrix([[1, 1], [0, 1]])
    A = PatternSet.full(2)
    R = rng.integers(0, 2, (25, 2))
    phi = rng.dirichlet(np.ones(4), size=25)
    cells, n_cells = cell_index(Q, A, "all-effect")
    estimates = m_step_all_effect(phi, Q, R, A)
    assert [len(e) for e in estimates] == list(n_cells)

    for j in range(Q.J):
        for cell in range(n_cells[j]):
            weight = phi[:, cells[j] == cell].sum(axis=1)

            def negative(t):
                return -np.sum(weight * (R[:, j] * np.log(t) + (1 - R[:, j]) * np.log(1 - t)))

            best = minimize_scalar(
                negative, bounds=(1e-9, 1 - 1e-9), method="bounded", options=dict(xatol=1e-12)
            )
            assert np.isclose(estimates[j][cell], best.x, atol=1e-6)

    # with one required attribute the update is the two-parameter one
    G = build_gamma(Q, A)
    two = m_step_two_param(phi, G, R)
    assert np.isclose(estimates[1][1], two.theta_plus[1])
    assert np.isclose(estimates[1][0], two.theta_minus[1])

    # one pattern per cell with degenerate φ gives raw response means
    degenerate = np.zeros((25, 4))
    degenerate[np.arange(25), np.arange(25) % 4] = 1
    raw = m_step_all_effect(degenerate, Q, R, A)
    for cell in range(4):
        assert np.isclose(raw[0][cell], R[np.arange(25) % 4 == cell, 0].mean())


def test_em_likelihood_never_decreases():
    for seed in range(100):
        R, Q, A = _random_instance(seed, N=30)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            result = em_fit(R, Q, A, max_iter=30, tol=1e-12)
        assert np.all(np.diff(result.trace["loglik"]) >= -1e-8)


def test_pem_objective_never_decreases_when_unguarded():
    for seed in range(20):
        R, Q, A = _random_instance(100 + seed, N=60)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            result = pem_fit(R, Q, A, lam=-0.5, rho=1e-12, max_iter=30, tol=1e-12)
        objective = result.trace["objective"]
        for t in range(len(objective) - 1):
            if not (result.trace["floored"][t] or result.trace["crossed"][t]):
                assert objective[t + 1] >= objective[t] - 1e-8


def test_fit_invariants():
    R, Q, A = _random_instance(5, N=80)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        pem = pem_fit(R, Q, A, lam=-2.0)
        vem = fpvem_fit(R, Q, A, upsilon=0.7, beta=0.02)

    for result in [pem, vem]:
        assert np.isclose(result.p.values.sum(), 1, atol=1e-10)
        assert np.isfinite(result.loglik)
        assert result.selected.same_members(A[np.flatnonzero(result.p.values > result.config.rho)])
        assert result.support_size == len(result.selected)
        assert np.all((result.theta.values > 0) & (result.theta.values < 1))
    assert np.all(pem.delta >= 0.01)
    assert np.all(vem.delta >= 0.02)


def test_fit_is_invariant_to_candidate_order():
    R, Q, A = _random_instance(6, N=80)
    shuffled = A[[3, 1, 0, 2]]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        one = em_fit(R, Q, A, max_iter=200)
        two = em_fit(R, Q, shuffled, max_iter=200)
    assert np.isclose(one.loglik, two.loglik, rtol=1e-8)
    assert np.allclose(one.proportions_of(A), two.proportions_of(A), atol=1e-8)
    assert one.selected.same_members(two.selected)


def test_fit_rejects_bad_inputs():
    R, Q, A = _random_instance(7)
    with pytest.raises(ValueError):
        pem_fit(R, Q, PatternSet([], K=2))
    with pytest.raises(ValueError):
        pem_fit(R, Q, PatternSet.full(3))
    with pytest.raises(ValueError):
        pem_fit(R[:, :3], Q, A)
    with pytest.raises(TypeError):
        pem_fit(R, Q, A, init="previous")


def test_warm_start():
    R, Q, A = _random_instance(8, N=100)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        cold = pem_fit(R, Q, A, lam=-1.0)
        warm = pem_fit(R, Q, A, lam=-1.0, init=cold)
    assert warm.iterations <= cold.iterations
    with pytest.raises(ValueError):
        pem_fit(R, Q, A, init=cold, model="all-effect")


def _planted(patterns=("000", "100", "110", "111"), N=600, seed=2):
    # these four patterns are told apart by the block Q-matrix, and
    # α1 takes both values among them
    Q = build_q_blocks(3)
    A0 = PatternSet(list(patterns))
    Theta = theta_two_param(build_gamma(Q, A0), TwoParamItemParams.from_noise(Q.J, 0.1))
    R, _ = gen_responses(Theta, ProportionVector.uniform(A0), N, seed=seed)
    return R, Q, A0


def test_pem_path_recovers_planted_patterns():
    R, Q, A0 = _planted()
    A = PatternSet.full(3)
    path = solution_path(R, Q, A)
    assert len(path) == 20
    assert path.parameter == "lam"
    assert path.best.selected.same_members(A0)
    assert path.best.ebic == min(path.ebics)
    table = path.to_table()
    assert len(table) == 20 and table["chosen"].sum() == 1
    params = path.best.item_params
    assert np.all(params.theta_plus > params.theta_minus)

    # plain EM keeps the truth but rarely stops there
    em = em_fit(R, Q, A)
    assert np.all(em.selected.contains_codes(A0.codes))
    assert path.best.ebic <= path.fits[0].ebic

    refit = refit_proportions(R, Q, path.best)
    assert refit.patterns.same_members(path.best.selected)
    assert refit.config.algorithm == "em"
    assert np.isclose(refit.p.values.sum(), 1)
    with pytest.raises(ValueError):
        refit_proportions(R, Q, dataclasses.replace(path.best, selected=PatternSet([], K=3)))


def test_fpvem_path():
    R, Q, A0 = _planted(seed=3)
    path = solution_path(R, Q, PatternSet.full(3), config=FitConfig(algorithm="fpvem"))
    assert path.parameter == "upsilon"
    assert path.grid[0] == 1.0
    assert path.best.selected.same_members(A0)


def test_fits_keep_capable_above_incapable():
    # three planted patterns that never separate some items' two sides
    R, truth = simulate(SimDesign(K=3, N=600, n_true=3, noise=0.1, seed=2))
    A = PatternSet.full(3)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        path = solution_path(R, truth.Q, A)
        fits = list(path.fits) + [em_fit(R, truth.Q, A), fpvem_fit(R, truth.Q, A, upsilon=0.5)]
    for fit in fits:
        assert np.all(fit.item_params.theta_plus >= fit.item_params.theta_minus)

    # the all-effect model keeps its top cell the largest
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        result = pem_fit(R, truth.Q, A, model="all-effect")
    for cells in result.item_params:
        assert cells[-1] >= np.max(cells)


def test_pool_monotone():
    rates, pooled = pool_monotone([[0.3, 0.1]], [[10.0, 30.0]], [2])
    assert np.allclose(rates, 0.15) and list(pooled) == [0]

    rates, pooled = pool_monotone(
        [[0.2, 0.9, 0.5, 0.6], [0.1, 0.2, 0.3, 0.8]], np.full((2, 4), 10.0), [4, 4]
    )
    assert np.allclose(rates[0], [0.2, 0.75, 0.5, 0.75])
    assert np.allclose(rates[1], [0.1, 0.2, 0.3, 0.8])
    assert list(pooled) == [0]

    # cells without weight, or missing altogether, are left alone
    rates, pooled = pool_monotone(
        [[0.9, 0.4, np.nan], [0.7, 0.2, 0.5]], [[0.0, 5.0, 0.0], [1.0, 3.0, 1.0]], [2, 3]
    )
    assert np.allclose(rates[0, :2], [0.9, 0.4]) and np.isnan(rates[0, 2])
    assert np.allclose(rates[1], [0.6, 0.2, 0.6])
    assert list(pooled) == [1]


def test_path_grid_rules():
    R, Q, A = _random_instance(9, N=50)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        path = solution_path(R, Q, A, grid=[-1.0])
    assert len(path) == 1 and path.chosen == 0 and path.chosen_value == -1.0
    with pytest.raises(ValueError):
        solution_path(R, Q, A, grid=[-1.0, -0.5])
    with pytest.raises(ValueError):
        solution_path(R, Q, A, grid=[])
    with pytest.raises(RuntimeError, match="grid position 0"):
        solution_path(R, Q, A, grid=[0.5])


class _FakeFit:
    def __init__(self, ebic, support_size):
        self.ebic, self.support_size = ebic, support_size


def test_choose_by_ebic_breaks_ties():
    fits = [_FakeFit(10.0, 5), _FakeFit(9.0, 4), _FakeFit(9.0, 3), _FakeFit(9.0, 3)]
    assert choose_by_ebic(fits) == 2
    assert choose_by_ebic([_FakeFit(np.inf, 0), _FakeFit(1.0, 2)]) == 1
    with pytest.raises(ValueError):
        choose_by_ebic([])


def test_pem_fit_equiv_selects_planted_classes():
    Q = QMatrix([[0, 1], [1, 1]] * 3)
    A = PatternSet(["00", "11"])
    Theta = theta_two_param(build_gamma(Q, A), TwoParamItemParams.from_noise(Q.J, 0.1))
    R, _ = gen_responses(Theta, ProportionVector.uniform(A), 1000, seed=1)

    result = pem_fit_equiv(R, Q, lam=-1.0)
    assert len(result.patterns) == 3
    assert result.classes is not None
    assert result.selected.same_members(A)
    with pytest.raises(ValueError):
        pem_fit_equiv(R, Q, model="all-effect")


@pytest.mark.slow
def test_pem_selects_ten_planted_patterns():
    R, truth = simulate(SimDesign.two_param_study(K=10, N=1000, signal="strong", seed=0))
    path = solution_path(R, truth.Q, PatternSet.full(10))
    assert path.best.selected.same_members(truth.patterns)
