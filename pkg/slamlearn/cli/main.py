"""
The `slamlearn` command line.

Examples
--------
```
slamlearn simulate --K 10 --N 500 --noise 0.1 --out sim
slamlearn pipeline --responses sim/responses.csv --q sim/q.csv --truth sim/true_patterns.txt --out run
slamlearn check-id --q sim/q.csv --patterns run/selected.txt --out id
```
"""

import argparse, sys
from ..imports import *
from ..version import version
from ..estimation import ALGORITHMS
from ..response_models import MODELS
from ..analysis import BENCH_ALGORITHMS, SCREEN_THRESHOLD
from .commands import *

__all__ = ["build_parser", "main"]


def _common(verbose=True):
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--out", default=".", help="Directory for the output files.")
    parent.add_argument("--config", default=None, help="A key=value settings file (flags win).")
    parent.add_argument("--seed", type=int, default=None, help="The random seed.")
    parent.add_argument(
        "--threads", type=int, default=1, help="Parallel workers (results don't depend on it)."
    )
    parent.add_argument("-v", "--verbose", action="count", default=0, help="More logging (-vv for debug).")
    return parent


def _data():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--responses", required=True, help="CSV of 0/1 responses, one subject per line.")
    parent.add_argument("--q", required=True, help="CSV of the 0/1 Q-matrix, one item per line.")
    return parent


def _fitting():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--model", choices=MODELS, default=None)
    parent.add_argument(
        "--algo", "--algorithm", dest="algorithm", choices=ALGORITHMS, default=None
    )
    parent.add_argument(
        "--lambda", "--lam", dest="lam", type=float, default=None,
        help="The PEM penalty λ < 0.",
    )
    parent.add_argument("--upsilon", type=float, default=None, help="The FP-VEM power Υ in (0, 1].")
    parent.add_argument("--beta", type=float, default=None, help="The FP-VEM Dirichlet β.")
    parent.add_argument("--c", type=float, default=None, help="The PEM floor on Δ.")
    parent.add_argument("--rho", type=float, default=None, help="The selection threshold (default 1/(2N)).")
    parent.add_argument("--gamma", type=float, default=None, help="The EBIC γ.")
    parent.add_argument("--max-iter", type=int, default=None)
    parent.add_argument("--tol", type=float, default=None)
    return parent


def _screening():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--m-max", type=int, default=None)
    parent.add_argument("--m-eff", type=int, default=None)
    parent.add_argument("--max-outer", type=int, default=None)
    parent.add_argument("--screen-tol", type=float, default=None)
    parent.add_argument("--enhance-period", type=int, default=None)
    parent.add_argument("--delta-gap", type=float, default=None)
    parent.add_argument("--theta-plus", type=float, default=None)
    parent.add_argument("--theta-minus", type=float, default=None)
    return parent


def _candidates():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--patterns", default=None, help="A file of candidate patterns.")
    parent.add_argument(
        "--screen-threshold",
        type=int,
        default=SCREEN_THRESHOLD,
        help="Screen first when K is above this (otherwise use all 2^K patterns).",
    )
    return parent


def build_parser():
    """
    The argument parser, with one subcommand per action.
    """
    parser = argparse.ArgumentParser(
        prog="slamlearn", description="Learn attribute patterns in structured latent attribute models."
    )
    parser.add_argument("--version", action="version", version=version())
    sub = parser.add_subparsers(dest="command", required=True)
    common, data, fitting, screening, candidates = (
        _common(),
        _data(),
        _fitting(),
        _screening(),
        _candidates(),
    )

    p = sub.add_parser("simulate", parents=[common], help="Simulate a dataset.")
    p.add_argument("--K", type=int, default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--model", choices=MODELS, default=None)
    p.add_argument("--noise", type=float, default=None, help="θ⁻ = noise, θ⁺ = 1 - noise.")
    p.add_argument("--base", type=float, default=None)
    p.add_argument("--top", type=float, default=None)
    p.add_argument("--n-true", type=int, default=None)

    p = sub.add_parser("screen", parents=[common, data, screening], help="Screen candidate patterns.")
    p.add_argument("--variational", action="store_true", help="Use mean-field updates.")

    sub.add_parser("fit", parents=[common, data, fitting, screening, candidates], help="Fit once.")

    for name, help in [("path", "Fit along a tuning grid."), ("pipeline", "Run everything.")]:
        p = sub.add_parser(name, parents=[common, data, fitting, screening, candidates], help=help)
        p.add_argument("--grid", type=float, nargs="+", default=None, help="Decreasing tuning values.")
        if name == "pipeline":
            p.add_argument("--truth", default=None, help="True patterns, for accuracy metrics.")

    p = sub.add_parser("check-id", parents=[common], help="Check identifiability.")
    p.add_argument("--q", required=True)
    p.add_argument("--patterns", required=True)
    p.add_argument("--partial", action="store_true", help="Check representatives only.")
    p.add_argument("--max-subset-size", type=int, default=None)
    p.add_argument("--flip-budget", type=int, default=2)

    p = sub.add_parser("equiv", parents=[common, fitting], help="Equivalence classes of Q.")
    p.add_argument("--q", required=True)
    p.add_argument("--responses", default=None, help="Also fit over the class representatives.")

    p = sub.add_parser("hierarchy", parents=[common], help="Attribute hierarchy of patterns.")
    p.add_argument("--patterns", required=True)

    p = sub.add_parser("bench", parents=[common, fitting], help="Replicated simulation study.")
    p.add_argument("--scenario", choices=MODELS, default="two-param")
    p.add_argument("--signal", choices=["strong", "weak"], default="strong")
    p.add_argument("--K", type=int, default=10)
    p.add_argument("--N", type=int, default=1000)
    p.add_argument("--replicates", type=int, default=20)
    p.add_argument("--algorithms", nargs="+", choices=BENCH_ALGORITHMS, default=["pem"])
    p.add_argument("--grid", type=float, nargs="+", default=None)

    return parser


def main(argv=None):
    """
    Run one `slamlearn` command.

    Returns
    -------
    status : int
        0 on success, 2 if the inputs or the computation were bad.
    """
    args = build_parser().parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except (ValueError, RuntimeError, OSError) as e:
        message = " ".join(str(e).split())
        print(f"slamlearn {args.command}: {message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
