from ..cli import *
from .setup_tests import *
import json
from astropy.table import Table


def _path(*names):
    return os.path.join(test_directory, *names)


def _load_json(*names):
    with open(_path(*names)) as f:
        return json.load(f)


def _simulate(out="cli-sim"):
    status = main(
        ["simulate", "--K", "3", "--N", "300", "--n-true", "3", "--seed", "1", "--out", _path(out)]
    )
    assert status == 0
    return _path(out)


def test_simulate():
    out = _simulate()
    for filename in ["responses.csv", "q.csv", "true_patterns.txt", "truth.json", "manifest.json"]:
        assert os.path.exists(os.path.join(out, filename))
    manifest = _load_json("cli-sim", "manifest.json")
    assert manifest["command"] == "simulate"
    assert manifest["config"]["K"] == 3 and manifest["config"]["J"] == 9
    assert manifest["seed"] == 1
    assert "responses.csv" in manifest["outputs"]


def test_pipeline():
    sim = _simulate()
    out = _path("cli-pipeline")
    status = main(
        [
            "pipeline",
            "--responses", os.path.join(sim, "responses.csv"),
            "--q", os.path.join(sim, "q.csv"),
            "--truth", os.path.join(sim, "true_patterns.txt"),
            "--grid", "-0.5", "-1.0", "-2.0",
            "--out", out,
        ]
    )
    assert status == 0
    for filename in ["path.ecsv", "path.json", "fit.json", "selected.txt", "proportions.ecsv",
                     "item_params.ecsv", "metrics.json", "manifest.json"]:
        assert os.path.exists(os.path.join(out, filename))

    manifest = _load_json("cli-pipeline", "manifest.json")
    assert manifest["extra"]["screening"] is False
    assert manifest["config"]["grid"] == [-0.5, -1.0, -2.0]
    assert manifest["config"]["fit"]["rho"] == 1 / 600
    assert len(manifest["inputs"]) == 3
    assert all(len(digest) == 64 for digest in manifest["inputs"].values())

    metrics = _load_json("cli-pipeline", "metrics.json")
    assert 0 <= metrics["tpr"] <= 1
    fit = _load_json("cli-pipeline", "fit.json")
    assert fit["n_candidates"] == 8


def test_fit_with_config_file():
    sim = _simulate()
    settings = _path("em.cfg")
    with open(settings, "w") as f:
        f.write("algorithm = em\nmax-iter = 30\n")
    out = _path("cli-fit")
    status = main(
        [
            "fit",
            "--responses", os.path.join(sim, "responses.csv"),
            "--q", os.path.join(sim, "q.csv"),
            "--patterns", os.path.join(sim, "true_patterns.txt"),
            "--config", settings,
            "--max-iter", "40",
            "--out", out,
        ]
    )
    assert status == 0
    fit = _load_json("cli-fit", "fit.json")
    assert fit["config"]["algorithm"] == "em"
    assert fit["config"]["max_iter"] == 40
    assert fit["n_candidates"] == 3


def test_bad_inputs_exit_with_2():
    bad = _path("bad-responses.csv")
    with open(bad, "w") as f:
        f.write("1,0,1\n0,7,1\n")
    q = _path("bad-q.csv")
    with open(q, "w") as f:
        f.write("1\n1\n1\n")
    assert main(["path", "--responses", bad, "--q", q, "--out", _path("cli-bad")]) == 2
    assert main(["path", "--responses", _path("nope.csv"), "--q", q, "--out", _path("cli-bad")]) == 2
    with pytest.raises(SystemExit):
        main(["fit", "--q", q])


def test_identifiability_commands():
    sim = _simulate()
    q = os.path.join(sim, "q.csv")
    patterns = os.path.join(sim, "true_patterns.txt")

    assert main(["check-id", "--q", q, "--patterns", patterns, "--out", _path("cli-id")]) == 0
    report = _load_json("cli-id", "identifiability.json")
    assert "verdict" in report

    assert main(["equiv", "--q", q, "--out", _path("cli-equiv")]) == 0
    classes = _load_json("cli-equiv", "classes.json")
    # the block Q-matrix separates all eight patterns
    assert classes["n_classes"] == 8

    assert main(["hierarchy", "--patterns", patterns, "--out", _path("cli-hierarchy")]) == 0
    assert os.path.exists(_path("cli-hierarchy", "hierarchy.dot"))


def test_screen_command():
    sim = _simulate()
    out = _path("cli-screen")
    status = main(
        [
            "screen",
            "--responses", os.path.join(sim, "responses.csv"),
            "--q", os.path.join(sim, "q.csv"),
            "--max-outer", "5",
            "--screen-tol", "0.01",
            "--out", out,
        ]
    )
    assert status == 0
    manifest = _load_json("cli-screen", "manifest.json")
    assert manifest["config"]["max_outer"] == 5
    assert manifest["config"]["tol"] == 0.01
    assert os.path.exists(os.path.join(out, "candidates.txt"))


def test_bench_command():
    out = _path("cli-bench")
    status = main(
        ["bench", "--K", "4", "--N", "100", "--replicates", "2",
         "--algorithms", "pem", "em", "--grid", "-1.0", "--out", out]
    )
    assert status == 0
    records = _load_json("cli-bench", "records.json")
    assert len(records) == 4
    assert os.path.exists(os.path.join(out, "summary.ecsv"))
    summary = Table.read(os.path.join(out, "summary.csv"), format="ascii.csv")
    assert list(summary["algorithm"]) == ["pem", "em"]
    assert list(summary["replicates"]) == [2, 2]


def test_pipeline_with_screening_is_repeatable():
    sim = _simulate()
    arguments = [
        "pipeline",
        "--responses", os.path.join(sim, "responses.csv"),
        "--q", os.path.join(sim, "q.csv"),
        "--screen-threshold", "2",
        "--max-outer", "4",
        "--grid", "-1.0",
    ]
    outputs = []
    for out in ["cli-screened-1", "cli-screened-2"]:
        assert main(arguments + ["--out", _path(out)]) == 0
        manifest = _load_json(out, "manifest.json")
        assert manifest["extra"]["screening"] is True
        assert "candidates.txt" in manifest["outputs"]
        with open(_path(out, "fit.json")) as f:
            outputs.append(f.read())
    assert outputs[0] == outputs[1]


def test_fit_with_algo_and_lambda_flags():
    sim = _simulate()
    out = _path("cli-fit-flags")
    status = main(
        [
            "fit",
            "--responses", os.path.join(sim, "responses.csv"),
            "--q", os.path.join(sim, "q.csv"),
            "--algo", "pem",
            "--lambda", "-1.0",
            "--out", out,
        ]
    )
    assert status == 0
    fit = _load_json("cli-fit-flags", "fit.json")
    assert fit["config"]["algorithm"] == "pem"
    assert fit["config"]["lam"] == -1.0

    items = Table.read(os.path.join(out, "item_params.ecsv"), format="ascii.ecsv")
    assert len(items) == 9
    assert "theta_plus" in items.colnames and "theta_minus" in items.colnames
    assert np.all(items["theta_plus"] >= items["theta_minus"])


def test_pipeline_is_identical_across_thread_counts():
    sim = _simulate()
    arguments = [
        "pipeline",
        "--responses", os.path.join(sim, "responses.csv"),
        "--q", os.path.join(sim, "q.csv"),
        "--grid", "-0.5", "-1.0",
    ]
    outputs = []
    for threads in ["1", "3"]:
        out = f"cli-threads-{threads}"
        assert main(arguments + ["--threads", threads, "--out", _path(out)]) == 0
        with open(_path(out, "path.json")) as f:
            outputs.append(f.read())
    assert outputs[0] == outputs[1]
