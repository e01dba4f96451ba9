import json

from toroidal_weyl.cli import content_hash, main


def test_garland_report(tmp_path, capsys):
    out = tmp_path / "g.json"
    assert main(["verify", "garland", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["schema"] == 1 and rep["ok"]
    assert rep["input_hash"] == content_hash({"command": "verify garland", "config": rep["config"]})


def test_overwrite_guard(tmp_path):
    out = tmp_path / "g.json"
    out.write_text("x")
    assert main(["verify", "garland", "--out", str(out)]) == 2
    assert out.read_text() == "x"
    assert main(["verify", "garland", "--out", str(out), "--force"]) == 0


def test_config_errors():
    assert main(["verify", "presentation", "--type", "B", "--rank", "3"]) == 2
    assert main(["verify", "rp1", "--type", "A", "--rank", "4"]) == 2
    assert main(["verify", "nonsense"]) == 2
    assert main(["verify", "rp1", "--m1", "2..1"]) == 2


def test_characters_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["characters", "--type", "A", "--rank", "3", "--n", "2", "--depth", "4", "--emit", "csv"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().startswith("weight,m,p2,coefficient")


def test_characters_json_verdict(tmp_path):
    out = tmp_path / "c.json"
    assert main(["characters", "--type", "D", "--rank", "4", "--depth", "4", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["results"]["verdict"] in ("full-character", "graded-dimension", "mismatch")


def test_seed_only_affects_sampling(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "central-assignments", "--n", "2", "--depth", "2", "--out", str(a)]) == 0
    assert main(["verify", "central-assignments", "--n", "2", "--depth", "2", "--seed", "9", "--out", str(b)]) == 0
    assert json.loads(a.read_text())["results"] == json.loads(b.read_text())["results"]
