"""
Replicated simulation studies and sensitivity checks.
"""

from ..imports import *
from ..patterns import *
from ..estimation import *
from ..screening import *
from ..simulation import *
from .metrics import *

__all__ = [
    "BENCH_ALGORITHMS",
    "SCREEN_THRESHOLD",
    "candidate_patterns",
    "run_replicate",
    "bench",
    "aggregate",
    "default_thresholds",
    "threshold_sensitivity",
    "clamp_sensitivity",
]

# "vem" is FP-VEM with Υ = 1 only
BENCH_ALGORITHMS = ["pem", "fpvem", "vem", "em"]

# above this many attributes, candidates come from screening instead of {0,1}^K
SCREEN_THRESHOLD = 12


def candidate_patterns(R, Q, screen_threshold=SCREEN_THRESHOLD, screen_config=None):
    """
    Every pattern for small K, otherwise the screened candidates.

    Returns
    -------
    patterns : PatternSet
    screen : ScreenResult or None
        The screening result, if screening ran.
    """
    Q = Q if isinstance(Q, QMatrix) else QMatrix(Q)
    if Q.K <= screen_threshold:
        return PatternSet.full(Q.K), None
    screen = gibbs_screen(R, Q, config=screen_config)
    return screen.a_screen, screen


def _select(R, Q, A_input, algorithm, config, grid=None):
    """
    The fit each benchmark algorithm would report.
    """
    if algorithm == "pem":
        return solution_path(R, Q, A_input, grid=grid, config=config.replace(algorithm="pem")).best
    if algorithm == "fpvem":
        return solution_path(R, Q, A_input, grid=grid, config=config.replace(algorithm="fpvem")).best
    if algorithm == "vem":
        return fpvem_fit(R, Q, A_input, config=config, upsilon=1.0)
    if algorithm == "em":
        return em_fit(R, Q, A_input, config=config)
    raise ValueError(f"🧩 algorithm must be one of {BENCH_ALGORITHMS}, not '{algorithm}'.")


def run_replicate(
    design, algorithm="pem", config=None, grid=None, screen_threshold=SCREEN_THRESHOLD
):
    """
    Simulate one dataset from a design, select patterns, and score them.

    Returns
    -------
    record : dict
        The scenario label, algorithm, seed, and the
        `AccuracyRecord` fields.
    """
    config = (config or FitConfig()).replace(model=design.model, seed=design.seed)
    R, truth = simulate(design)
    A_input, screen = candidate_patterns(R, truth.Q, screen_threshold=screen_threshold)
    result = _select(R, truth.Q, A_input, algorithm, config, grid=grid)
    record = selection_metrics(
        truth.patterns, result.selected, A_screen=None if screen is None else A_input
    )
    return dict(
        scenario=design.label,
        algorithm=algorithm,
        seed=design.seed,
        n_candidates=len(A_input),
        ebic=result.ebic,
        **{k: v for k, v in record.to_dict().items() if k != "rmse"},
    )


def bench(
    designs,
    algorithms=("pem",),
    replicates=20,
    config=None,
    grid=None,
    threads=1,
    progress=False,
):
    """
    Run every (design, algorithm) pair over many replicates.

    Replicates get their own seeds from each design's seed, so the
    records are the same whatever the number of threads.

    Returns
    -------
    records : list of dict
    """
    if isinstance(designs, SimDesign):
        designs = [designs]
    jobs = [
        (replicate, algorithm)
        for design in designs
        for replicate in design.replicates(replicates)
        for algorithm in algorithms
    ]
    if progress:
        jobs = tqdm(jobs, leave=False)
    return Parallel(n_jobs=threads)(
        delayed(run_replicate)(design, algorithm, config=config, grid=grid)
        for design, algorithm in jobs
    )


def aggregate(records, by=("scenario", "algorithm")):
    """
    Mean and standard deviation of the accuracy columns, per group.

    Returns
    -------
    table : pandas.DataFrame
        Flat columns like `tpr_mean`, `tpr_std`, plus `replicates`.
    """
    df = pd.DataFrame(list(records))
    if len(df) == 0:
        raise ValueError("🧩 There are no records to aggregate.")
    columns = [c for c in ["tpr", "one_minus_fdr", "coverage", "support_size"] if c in df]
    grouped = df.groupby(list(by), sort=False)
    summary = grouped[columns].agg(["mean", "std"])
    summary.columns = [f"{c}_{stat}" for c, stat in summary.columns]
    summary["replicates"] = grouped.size()
    return summary.reset_index()


def default_thresholds(N):
    """
    ρ = 1/(50N), and ρ = i/(2N) for i = 1, 3, ..., 15.
    """
    return [1 / (50 * N)] + [i / (2 * N) for i in range(1, 16, 2)]


def _sensitivity(R, Q, A_input, A0, name, values, config, grid):
    rows = []
    for value in values:
        best = solution_path(R, Q, A_input, grid=grid, config=config.replace(**{name: value})).best
        record = selection_metrics(A0, best.selected)
        rows.append(
            {
                name: value,
                "tpr": record.tpr,
                "one_minus_fdr": record.one_minus_fdr,
                "support_size": record.support_size,
                "ebic": best.ebic,
            }
        )
    return pd.DataFrame(rows)


def threshold_sensitivity(R, Q, A_input, A0, thresholds=None, config=None, grid=None):
    """
    Selection accuracy of the EBIC-chosen PEM fit for several thresholds ρ.

    Returns
    -------
    table : pandas.DataFrame
        One row per threshold.
    """
    R = np.asarray(R)
    thresholds = default_thresholds(R.shape[0]) if thresholds is None else thresholds
    config = (config or FitConfig()).replace(algorithm="pem")
    return _sensitivity(R, Q, A_input, A0, "rho", thresholds, config, grid)


def clamp_sensitivity(
    R, Q, A_input, A0, c_values=(1e-4, 1e-3, 1e-2, 0.05, 0.1), config=None, grid=None
):
    """
    Selection accuracy of the EBIC-chosen PEM fit for several floors c.
    """
    config = (config or FitConfig()).replace(algorithm="pem")
    return _sensitivity(R, Q, A_input, A0, "c", c_values, config, grid)
