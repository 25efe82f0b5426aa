"""
What each subcommand does, once its arguments are parsed.
"""

from ..imports import *
from ..patterns import *
from ..identifiability import *
from ..response_models import *
from ..estimation import *
from ..screening import *
from ..simulation import *
from ..analysis import *
from ..datasets import *
from ..readers import *
from ..writers import *
from .manifest import *
from .options import *

__all__ = [
    "cmd_simulate",
    "cmd_screen",
    "cmd_fit",
    "cmd_path",
    "cmd_check_id",
    "cmd_equiv",
    "cmd_hierarchy",
    "cmd_bench",
    "cmd_pipeline",
    "COMMANDS",
]

# screening and fitting both have a `tol`
SCREEN_RENAMES = {"tol": "screen_tol"}


def _start(args, command):
    os.makedirs(args.out, exist_ok=True)
    return RunManifest(command=command, seed=getattr(args, "seed", None)), get_current_seconds()


def _output(manifest, args, filename):
    filepath = os.path.join(args.out, filename)
    manifest.add_output(filepath)
    return filepath


def _load_data(args, manifest):
    """
    Read the responses and Q-matrix, and note their digests.
    """
    manifest.add_input(args.responses)
    manifest.add_input(args.q)
    data = SLAMData(args.responses, Q=args.q)
    logger.info(f"read {data.N} subjects answering {data.J} items over K={data.K} attributes")
    return data


def _screen_config(args):
    return build_config(ScreenConfig, args, renames=SCREEN_RENAMES)


def _fit_config(args, **fixed):
    return build_config(FitConfig, args, **fixed)


def _candidates(args, data, manifest):
    """
    Candidate patterns from a file, or {0,1}^K, or screening.
    """
    if getattr(args, "patterns", None):
        manifest.add_input(args.patterns)
        manifest.extra["screening"] = False
        return read_patterns(args.patterns, K=data.K)
    screen_config = _screen_config(args)
    A, screen = candidate_patterns(
        data.responses,
        data.Q,
        screen_threshold=args.screen_threshold,
        screen_config=screen_config,
    )
    manifest.extra["screening"] = screen is not None
    if screen is not None:
        manifest.config["screen"] = screen_config.to_dict()
        manifest.extra["screen"] = screen.to_dict()
        write_patterns(
            _output(manifest, args, "candidates.txt"),
            A,
            comment=f"{len(A)} screened candidate patterns",
        )
    logger.info(f"{len(A)} candidate patterns (screening {'on' if screen else 'off'})")
    return A


def _item_table(result, Q):
    if isinstance(result.item_params, TwoParamItemParams):
        return Table(
            dict(
                item=np.arange(Q.J),
                q=[code_to_string(c, Q.K) for c in Q.codes],
                theta_plus=result.item_params.theta_plus,
                theta_minus=result.item_params.theta_minus,
            )
        )
    return Table(
        dict(
            item=np.arange(Q.J),
            q=[code_to_string(c, Q.K) for c in Q.codes],
            cell_thetas=[" ".join(f"{v:.6g}" for v in cells) for cells in result.item_params],
        )
    )


def _write_fit(args, manifest, result, Q):
    """
    The JSON summary, selected patterns, and tables for one fit.
    """
    write_json(_output(manifest, args, "fit.json"), result)
    write_patterns(
        _output(manifest, args, "selected.txt"),
        result.selected,
        comment=f"{result.support_size} selected patterns, EBIC={result.ebic:.6g}",
    )
    write_table(
        _output(manifest, args, "proportions.ecsv"),
        Table(
            dict(
                pattern=result.patterns.strings(),
                proportion=result.p.values,
                delta=result.delta,
                selected=result.selected.contains_codes(result.patterns.codes),
            )
        ),
    )
    write_table(_output(manifest, args, "item_params.ecsv"), _item_table(result, Q))


def _finish(args, manifest, started):
    manifest.write(args.out, started)
    return 0


def cmd_simulate(args):
    """
    Simulate responses from a design and write them (with the truth) to disk.
    """
    manifest, started = _start(args, "simulate")
    design = build_config(SimDesign, args)
    manifest.config = design.to_dict()
    data = SimulatedSLAMData(design)
    data.save(
        _output(manifest, args, "responses.csv"),
        Q=_output(manifest, args, "q.csv"),
    )
    write_patterns(
        _output(manifest, args, "true_patterns.txt"),
        data.true_patterns,
        comment=design.label,
    )
    write_json(_output(manifest, args, "truth.json"), data.truth)
    print(f"simulated {data} from {design.label}")
    return _finish(args, manifest, started)


def cmd_screen(args):
    """
    Screen candidate patterns from responses.
    """
    manifest, started = _start(args, "screen")
    data = _load_data(args, manifest)
    config = _screen_config(args)
    manifest.config = config.to_dict()
    result = data.screen(config=config, variational=args.variational)
    write_patterns(
        _output(manifest, args, "candidates.txt"),
        result.a_screen,
        comment=f"{len(result)} candidates from {result.method} screening",
    )
    write_json(_output(manifest, args, "screen.json"), result)
    print(result)
    return _finish(args, manifest, started)


def cmd_fit(args):
    """
    Run one fit (PEM, FP-VEM, or EM) at a single tuning value.
    """
    manifest, started = _start(args, "fit")
    data = _load_data(args, manifest)
    A = _candidates(args, data, manifest)
    config = _fit_config(args).resolve(data.N, len(A))
    manifest.config["fit"] = config.to_dict()
    result = data.fit(patterns=A, config=config)
    _write_fit(args, manifest, result, data.Q)
    print(f"selected {result.support_size} of {len(A)} patterns (EBIC={result.ebic:.6g})")
    return _finish(args, manifest, started)


def _run_path(args, data, A, manifest):
    config = _fit_config(args).resolve(data.N, len(A))
    grid = args.grid or default_grid(config.algorithm)
    manifest.config["fit"] = config.to_dict()
    manifest.config["grid"] = list(grid)
    path = data.path(grid=grid, patterns=A, config=config)
    write_table(_output(manifest, args, "path.ecsv"), path.to_table())
    write_json(_output(manifest, args, "path.json"), path)
    _write_fit(args, manifest, path.best, data.Q)
    return path


def cmd_path(args):
    """
    Fit along a tuning grid and keep the EBIC choice.
    """
    manifest, started = _start(args, "path")
    data = _load_data(args, manifest)
    A = _candidates(args, data, manifest)
    path = _run_path(args, data, A, manifest)
    print(
        f"{path.parameter}={path.chosen_value:g} chosen; "
        f"selected {path.best.support_size} of {len(A)} patterns"
    )
    return _finish(args, manifest, started)


def cmd_check_id(args):
    """
    Check whether a set of patterns is learnable from a Q-matrix.
    """
    manifest, started = _start(args, "check-id")
    manifest.add_input(args.q)
    manifest.add_input(args.patterns)
    Q = read_qmatrix(args.q)
    A = read_patterns(args.patterns, K=Q.K)
    manifest.config = dict(
        partial=args.partial,
        max_subset_size=args.max_subset_size,
        flip_budget=args.flip_budget,
    )
    if args.partial:
        report = check_partial(Q, A, max_subset_size=args.max_subset_size)
    else:
        report = check_strict(
            Q, A, max_subset_size=args.max_subset_size, flip_budget=args.flip_budget
        )
    write_json(_output(manifest, args, "identifiability.json"), report)
    print(report)
    return _finish(args, manifest, started)


def cmd_equiv(args):
    """
    List the equivalence classes of a Q-matrix, and fit over them if
    responses are given.
    """
    manifest, started = _start(args, "equiv")
    if args.responses is not None:
        data = _load_data(args, manifest)
        Q = data.Q
    else:
        manifest.add_input(args.q)
        Q = read_qmatrix(args.q)
    classes = EquivalenceClasses(Q)
    summary = dict(
        n_classes=len(classes),
        representatives=classes.representatives.strings(),
        members={
            rep: classes.members(rep).strings() for rep in classes.representatives.strings()
        },
    )
    write_json(_output(manifest, args, "classes.json"), summary)
    print(f"{len(classes)} equivalence classes")
    if args.responses is not None:
        config = _fit_config(args, algorithm="pem").resolve(data.N, len(classes))
        manifest.config["fit"] = config.to_dict()
        result = data.fit_equivalence_classes(config=config)
        _write_fit(args, manifest, result, Q)
        print(f"selected {result.support_size} of {len(classes)} classes")
    return _finish(args, manifest, started)


def cmd_hierarchy(args):
    """
    Read an attribute hierarchy off a set of selected patterns.
    """
    manifest, started = _start(args, "hierarchy")
    manifest.add_input(args.patterns)
    graph = extract_hierarchy(read_patterns(args.patterns))
    write_json(_output(manifest, args, "hierarchy.json"), graph)
    write_dot(_output(manifest, args, "hierarchy.dot"), graph)
    for g1, g2 in graph.edges:
        print(f"{graph.groups[g1]} -> {graph.groups[g2]}")
    return _finish(args, manifest, started)


def cmd_bench(args):
    """
    Replicated simulation study of pattern-selection accuracy.
    """
    manifest, started = _start(args, "bench")
    if args.scenario == "two-param":
        preset = SimDesign.two_param_study
    else:
        preset = SimDesign.all_effect_study
    design = preset(K=args.K, N=args.N, signal=args.signal, seed=args.seed or 0)
    config = _fit_config(args, model=design.model)
    manifest.config = dict(
        design=design.to_dict(),
        fit=config.to_dict(),
        algorithms=list(args.algorithms),
        replicates=args.replicates,
        threads=args.threads,
    )
    records = bench(
        design,
        algorithms=args.algorithms,
        replicates=args.replicates,
        config=config,
        grid=args.grid,
        threads=args.threads,
    )
    summary = aggregate(records)
    write_json(_output(manifest, args, "records.json"), records)
    write_table(_output(manifest, args, "summary.ecsv"), summary)
    write_table(_output(manifest, args, "summary.csv"), summary)
    print(summary.to_string(index=False))
    return _finish(args, manifest, started)


def cmd_pipeline(args):
    """
    Candidates (screening when K is large), then a solution path,
    EBIC selection, hierarchy, and (with `--truth`) accuracy.
    """
    manifest, started = _start(args, "pipeline")
    data = _load_data(args, manifest)
    A = _candidates(args, data, manifest)
    path = _run_path(args, data, A, manifest)
    best = path.best

    if best.support_size > 0:
        graph = extract_hierarchy(best.selected)
        write_json(_output(manifest, args, "hierarchy.json"), graph)
        write_dot(_output(manifest, args, "hierarchy.dot"), graph)

    if args.truth is not None:
        manifest.add_input(args.truth)
        A0 = read_patterns(args.truth, K=data.K)
        screened = A if manifest.extra.get("screening") else None
        record = selection_metrics(A0, best.selected, A_screen=screened)
        write_json(_output(manifest, args, "metrics.json"), record)
        print(f"TPR={record.tpr:.3f}, 1-FDR={record.one_minus_fdr:.3f}")

    print(f"selected {best.support_size} of {len(A)} candidate patterns")
    return _finish(args, manifest, started)


COMMANDS = {
    "simulate": cmd_simulate,
    "screen": cmd_screen,
    "fit": cmd_fit,
    "path": cmd_path,
    "check-id": cmd_check_id,
    "equiv": cmd_equiv,
    "hierarchy": cmd_hierarchy,
    "bench": cmd_bench,
    "pipeline": cmd_pipeline,
}
