from ..patterns import *
from ..analysis import *
from ..readers import *
from ..writers import *
from ..datasets import *
from .setup_tests import *
from astropy.table import Table
import pandas as pd
import json


def _write_text(name, text):
    filepath = os.path.join(test_directory, name)
    with open(filepath, "w") as f:
        f.write(text)
    return filepath


def test_read_binary_csv():
    filepath = _write_text("good.csv", "1,0,1\n0, 1,1\n")
    assert np.array_equal(read_binary_csv(filepath), [[1, 0, 1], [0, 1, 1]])
    assert read_binary_csv(filepath).dtype == np.int8

    filepath = _write_text("not-binary.csv", "1,0,1\n0,2,1\n")
    with pytest.raises(ValueError, match="line 2"):
        read_binary_csv(filepath)

    filepath = _write_text("short-row.csv", "1,0,1\n1,0,1\n0,1\n")
    with pytest.raises(ValueError, match="line 3"):
        read_binary_csv(filepath)

    filepath = _write_text("empty.csv", "")
    with pytest.raises(ValueError):
        read_binary_csv(filepath)


def test_read_qmatrix_and_responses():
    q = _write_text("q.csv", "1,0\n0,1\n1,1\n")
    Q = read_qmatrix(q)
    assert Q.shape == (3, 2)

    r = _write_text("responses.csv", "1,0,1\n0,0,1\n")
    assert read_responses(r).shape == (2, 3)

    data = SLAMData(r, Q=q)
    assert data.shape == (2, 3) and data.K == 2
    assert data.Q == Q

    with pytest.raises(ValueError):
        SLAMData(r)


def test_patterns_files():
    filepath = os.path.join(test_directory, "patterns.txt")
    write_patterns(filepath, PatternSet(["110", "001"]), comment="selected\nby pem")
    with open(filepath) as f:
        text = f.read()
    assert text == "# selected\n# by pem\n001\n110\n"
    assert read_patterns(filepath).strings() == ["001", "110"]

    write_patterns(filepath, PatternSet(["110", "001"]), canonical=False)
    assert read_patterns(filepath, K=3).strings() == ["110", "001"]

    with pytest.raises(ValueError, match="line 2"):
        read_patterns(_write_text("repeated.txt", "01\n01\n"))
    with pytest.raises(ValueError, match="line 1"):
        read_patterns(_write_text("wrong-K.txt", "011\n"), K=2)
    with pytest.raises(ValueError):
        read_patterns(_write_text("letters.txt", "0a1\n"))
    assert len(read_patterns(_write_text("none.txt", "# nothing\n"), K=4)) == 0


def test_read_config():
    filepath = _write_text(
        "settings.cfg", "# fitting\nalgorithm = fpvem\nmax-iter=50\n\nrho = 0.001 # loose\n"
    )
    assert read_config(filepath) == dict(algorithm="fpvem", max_iter="50", rho="0.001")
    with pytest.raises(ValueError, match="line 1"):
        read_config(_write_text("broken.cfg", "algorithm pem\n"))


def test_write_json():
    filepath = os.path.join(test_directory, "things.json")
    write_json(
        filepath,
        dict(b=np.arange(3), a=np.float64(0.5), c=np.inf, d=np.bool_(True), e=PatternSet(["01"]).codes[0]),
    )
    with open(filepath) as f:
        loaded = json.load(f)
    assert loaded == dict(a=0.5, b=[0, 1, 2], c="inf", d=True, e=1)
    assert as_jsonable(extract_hierarchy(["10", "11"]))["edges"] == [[0, 1]]


def test_write_table_and_dot():
    df = pd.DataFrame(dict(pattern=["01", "11"], proportion=[0.25, 0.75]))
    for extension in ["ecsv", "csv"]:
        filepath = os.path.join(test_directory, f"proportions.{extension}")
        write_table(filepath, df)
        assert list(Table.read(filepath, format=f"ascii.{extension}")["proportion"]) == [0.25, 0.75]
    with pytest.raises(ValueError):
        write_table(os.path.join(test_directory, "proportions.xlsx"), df)

    filepath = os.path.join(test_directory, "hierarchy.dot")
    write_dot(filepath, extract_hierarchy(["10", "11"]))
    with open(filepath) as f:
        assert "g0 -> g1;" in f.read()


def test_guessing_formats():
    assert guess_reader("x.slam.npy") is from_slam_npy
    assert guess_reader("x.CSV") is from_responses_csv
    assert guess_reader("x.dat", format="responses_csv") is from_responses_csv
    with pytest.raises(ValueError):
        guess_reader("x.dat")
    with pytest.raises(ValueError):
        guess_reader("x.csv", format="excel")

    assert guess_writer("x.slam.npy") is to_slam_npy
    assert guess_writer("x.txt") is to_responses_csv
    with pytest.raises(ValueError):
        guess_writer("x.dat")
    assert "to_slam_npy" in available_writers
    assert "as_jsonable" not in available_writers


def test_save_and_load():
    data = SimulatedSLAMData(K=3, N=40, n_true=3, seed=2)

    filepath = os.path.join(test_directory, "simulated.slam.npy")
    data.save(filepath)
    loaded = SLAMData(filepath)
    assert loaded == data
    assert loaded.metadata["design"] == data.metadata["design"]
    with pytest.raises(ValueError):
        data.save(os.path.join(test_directory, "simulated.npy"), format="slam_npy")

    responses = os.path.join(test_directory, "simulated-responses.csv")
    q = os.path.join(test_directory, "simulated-q.csv")
    data.save(responses, Q=q)
    assert SLAMData(responses, Q=q) == data
