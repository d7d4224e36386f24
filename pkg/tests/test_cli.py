import json
import subprocess
import sys

import pytest

from finspec import cli
from finspec import ring as ring_mod


@pytest.fixture(autouse=True)
def restore_bound():
    bound = ring_mod.SIZE_BOUND
    yield
    ring_mod.SIZE_BOUND = bound


@pytest.fixture
def dvr(tmp_path):
    path = tmp_path / "dvr.poset"
    path.write_text("# 0 is the generic point, 1 the closed point\npoints: 2\n0 < 1\n")
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spec(capsys):
    code, out, _ = run(capsys, "spec", "Z/12", "--json")
    data = json.loads(out)
    assert code == 0
    assert [p["members"] for p in data["primes"]] == [[0, 3, 6, 9], [0, 2, 4, 6, 8, 10]]
    assert [p["residue_field_size"] for p in data["primes"]] == [3, 2]


def test_report_z12(capsys):
    code, out, _ = run(capsys, "report", "Z/12", "--json")
    data = json.loads(out)
    assert code == 0
    assert set(data["conditions"].values()) == {True}
    assert data["corollary"] == [True, True]


def test_report_poset(capsys, dvr):
    code, out, _ = run(capsys, "report", "--poset", dvr, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["conditions"]["i"] is None
    assert {v for v in data["conditions"].values() if v is not None} == {False}


def test_topology_flat_dvr(capsys, dvr):
    code, out, _ = run(capsys, "topology", "--poset", dvr, "--kind", "flat", "--json")
    data = json.loads(out)
    assert code == 0
    assert sorted(data["opens"]) == [[], [0, 1], [1]]
    assert data["hausdorff"] is False
    assert data["specialization"] == [[1, 0]]


def test_topology_text(capsys):
    code, out, _ = run(capsys, "topology", "Z/12", "--kind", "patch")
    assert code == 0 and "hausdorff: True" in out


def test_pointwise_default(capsys):
    code, out, _ = run(capsys, "pointwise", "Z/4", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["result_size"] == 2
    assert data["kernel"] == [0, 2]


def test_pointwise_invert(capsys):
    code, out, _ = run(capsys, "pointwise", "Z/6", "--invert", "2", "--json")
    data = json.loads(out)
    assert data["bijective"] is True
    assert data["inverted"]["2"]["pointwise_inverse"] == 2


def test_pointwise_bad_element(capsys):
    code, _, err = run(capsys, "pointwise", "Z/6", "--invert", "9")
    assert code == 1 and "error" in err


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "spec", "Z/(")
    assert code == 1 and "position" in err


def test_size_bound_exit(capsys):
    assert run(capsys, "spec", "Z/5000")[0] == 1
    assert run(capsys, "spec", "Z/5000", "--max-size", "6000", "--json")[0] == 0


def test_missing_poset_file(capsys, tmp_path):
    assert run(capsys, "report", "--poset", str(tmp_path / "none.poset"))[0] == 1


def test_corpus_file(capsys, tmp_path):
    path = tmp_path / "list.txt"
    path.write_text("Z/6\nchain(2)\n")
    code, out, _ = run(capsys, "corpus", "--file", str(path), "--json")
    assert code == 0
    assert json.loads(out)["counts"]["subjects"] == 2


def test_corpus_parse_error_exit(capsys, tmp_path):
    path = tmp_path / "list.txt"
    path.write_text("Z/6\nZ/(\n")
    code, out, _ = run(capsys, "corpus", "--file", str(path))
    assert code == 1 and "ERROR" in out


def test_deterministic_output(capsys):
    first = run(capsys, "report", "Z/2 x GF(4)", "--json")[1]
    second = run(capsys, "report", "Z/2 x GF(4)", "--json")[1]
    assert first == second


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "finspec.cli", "spec", "GF(4)"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert "1 prime" in proc.stdout
