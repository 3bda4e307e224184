import json
import re

import pytest

from kinkydaisy.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def inst(tmp_path, capsys):
    def make(name):
        code, out, _ = run(capsys, "gen", "--fixture", name)
        assert code == 0
        path = tmp_path / f"{name}.txt"
        path.write_text(out)
        return str(path)
    return make


def test_check_phenanthrene(capsys, inst):
    code, out, _ = run(capsys, "check", inst("phenanthrene"))
    rep = json.loads(out)
    assert code == 0
    assert rep["checks"]["theorem"]["status"] == "pass"
    assert rep["instance"]["kinky"] is True
    assert rep["counts"] == {"matchings": 5, "labels": 5, "resonance_edges": 5}
    assert rep["maximal_labels"] == ["010", "101"]
    assert rep["maximal_resonant_sets"] == [[2], [1, 3]]


def test_check_anthracene_policy(capsys, inst):
    path = inst("anthracene")
    code, out, _ = run(capsys, "check", path)
    rep = json.loads(out)
    assert code == 0
    assert rep["instance"]["kinky"] is False
    assert rep["checks"]["theorem"] == {"status": "skipped", "reason": "not kinky"}
    assert rep["observations"] == {"daisy_cube": False, "daisy_witness": "001"}

    code, _, _ = run(capsys, "check", path, "--strict")
    assert code == 1

    code, out, _ = run(capsys, "check", path, "--force")
    rep = json.loads(out)
    assert code == 1
    assert rep["checks"]["theorem"]["status"] == "fail"
    assert rep["checks"]["theorem"]["witness"] == "001"
    assert rep["checks"]["lemma2_3"]["witness"] == "001"


def test_check_median_and_bfs(capsys, inst):
    code, out, _ = run(capsys, "check", inst("triphenylene"), "--median", "--order", "bfs")
    rep = json.loads(out)
    assert code == 0 and rep["checks"]["median"]["status"] == "pass"
    assert rep["instance"]["order"] == "bfs"


def test_check_root_must_be_leaf(capsys, inst):
    code, _, err = run(capsys, "check", inst("triphenylene"), "--root", "0,0")
    assert code == 2 and "leaf" in err


def test_malformed_line(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1 x\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "line 1" in err


def test_json_instance_accepted(capsys, tmp_path):
    path = tmp_path / "naph.json"
    path.write_text("[[0, 0], [1, 0]]")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0 and json.loads(out)["labels"] == ["00", "01", "10"]


def test_pericondensed_is_input_error(capsys, tmp_path):
    path = tmp_path / "tri.txt"
    path.write_text("0 0\n1 0\n0 1\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2 and "catacondensed" in err


def test_resonance_dot(capsys, inst):
    code, out, _ = run(capsys, "resonance", inst("naphthalene"), "--dot")
    assert code == 0
    nodes = set(re.findall(r'^  "(\d+)";$', out, re.M))
    assert nodes == {"10", "00", "01"}
    assert out.count(" -- ") == 2
    code, out, _ = run(capsys, "resonance", inst("benzene"))
    assert len(re.findall(r'^  "(\d+)";$', out, re.M)) == 2 and out.count(" -- ") == 1


def test_resonance_digraph_json(capsys, inst):
    code, out, _ = run(capsys, "resonance", inst("anthracene"), "--digraph", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["arcs"] == [["000", "010"], ["000", "100"], ["010", "011"]]


def test_daisy_subcommand(capsys, tmp_path):
    path = tmp_path / "labels.txt"
    path.write_text("# anthracene\n000\n100\n010\n011\n")
    code, out, _ = run(capsys, "daisy", str(path))
    data = json.loads(out)
    assert code == 1 and data["daisy_cube"] is False and data["witness"] == "001"
    assert data["maximal"] == ["011", "100"]

    code, out, _ = run(capsys, "daisy", str(path), "--closure")
    assert json.loads(out)["closure"] == ["000", "001", "010", "011", "100"]

    code, out, _ = run(capsys, "daisy", str(path), "--generate")
    assert code == 0 and json.loads(out)["daisy_cube"] is True


def test_daisy_rejects_mixed_lengths(capsys, tmp_path):
    path = tmp_path / "labels.txt"
    path.write_text("00\n010\n")
    code, _, err = run(capsys, "daisy", str(path))
    assert code == 2 and "line 2" in err


def test_gen_variants(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--turns", "LR")
    assert code == 0 and out.splitlines()[1:] == ["0 0", "1 0", "2 -1", "3 -1"]
    code, out, _ = run(capsys, "gen", "--enumerate", "3")
    assert out.count("# ") == 2
    code, out, _ = run(capsys, "gen", "--enumerate", "3", "--kinky")
    assert out.count("# ") == 1
    code, _, _ = run(capsys, "gen", "--enumerate", "4", "--out-dir", str(tmp_path / "out"))
    assert len(list((tmp_path / "out").iterdir())) == 5
    code, _, err = run(capsys, "gen", "--turns", "LLLL")
    assert code == 2
    code, out, _ = run(capsys, "gen", "--list-fixtures")
    assert "phenanthrene" in out.split()


def test_verify_kinky_only(capsys):
    code, out, _ = run(capsys, "verify", "--max-hexes", "5", "--kinky-only")
    data = json.loads(out)
    assert code == 0 and data["failures"] == []
    assert data["instances"] == data["kinky_instances"] == 10


def test_verify_all_reports_observation(capsys):
    code, out, _ = run(capsys, "verify", "--max-hexes", "5", "--order", "both")
    data = json.loads(out)
    assert code == 0 and data["failures"] == []
    assert data["instances"] == 21
    assert data["observations"] == {"non_kinky_instances": 11, "non_kinky_not_daisy": 11}


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "--max-hexes", "1", "--reports")
    data = json.loads(out)
    assert code == 0 and data["runs"] == 1
    assert data["reports"][0]["checks"]["theorem"]["status"] == "pass"


def test_reports_are_byte_stable(capsys, inst):
    path = inst("fibonaccene_5")
    first = run(capsys, "check", path)[1]
    assert run(capsys, "check", path)[1] == first
    a = run(capsys, "verify", "--max-hexes", "4", "--seed", "5", "--order", "both")[1]
    assert run(capsys, "verify", "--max-hexes", "4", "--seed", "5", "--order", "both")[1] == a


def test_verify_parallel_matches_serial(capsys):
    serial = run(capsys, "verify", "--max-hexes", "4", "--reports")[1]
    parallel = run(capsys, "verify", "--max-hexes", "4", "--reports", "--jobs", "2")[1]
    assert serial == parallel
