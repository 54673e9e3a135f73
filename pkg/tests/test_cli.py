import json

from gridband.cli import main
from gridband.grid import parse
from gridband.knots import data_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_scramble_simplify_identify(tmp_path, capsys):
    g = tmp_path / "g.json"
    s = tmp_path / "s.json"
    assert run(capsys, "scramble", "--knot", "5_2", "--seed", 4, "--out", g)[0] == 0
    assert parse(g.read_text()).n > 7
    assert run(capsys, "simplify", "--in", g, "--out", s)[0] == 0
    code, out, _ = run(capsys, "identify", "--in", s)
    assert code == 0 and out.strip() == "5_2"


def test_bands_list_and_apply(tmp_path, capsys):
    code, out, _ = run(capsys, "bands", "--knot", "3_1")
    moves = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and moves
    code, out, _ = run(capsys, "bands", "--knot", "3_1", "--apply", json.dumps(moves[0]))
    assert code == 0 and parse(out).n == 5


def test_explore_stats_replay(tmp_path, capsys):
    rep, wit, csv = tmp_path / "r.json", tmp_path / "w.jsonl", tmp_path / "a.csv"
    args = ["explore", "--knot", "3_1", "--scrambles", 1, "--moves", 200, "--seed", 7,
            "--out", rep, "--witnesses", wit, "--csv", csv]
    assert run(capsys, *args)[0] == 0
    first = rep.read_text()
    assert run(capsys, *args)[0] == 0
    assert rep.read_text() == first
    assert csv.read_text().startswith("class_a,class_b,count\n")
    code, out, _ = run(capsys, "stats", "--report", rep)
    assert code == 0 and out.splitlines()[1].startswith("3_1,")
    code, out, _ = run(capsys, "replay", "--witness", wit)
    assert code == 0 and "0 mismatched" in out
    lines = wit.read_text().splitlines()
    rec = json.loads(lines[0])
    rec["dst"] = "8_21m" if rec["dst"] != "8_21m" else "8_21"
    wit.write_text(json.dumps(rec) + "\n")
    code, out, _ = run(capsys, "replay", "--witness", wit)
    assert code == 2 and "mismatch" in out


def test_committed_witness_via_cli(capsys):
    code, out, _ = run(capsys, "replay", "--witness", data_path("witnesses.jsonl"))
    assert code == 0 and "5_1 -> 5_1m" in out


def test_size_histogram(capsys):
    code, out, _ = run(capsys, "stats", "--knot", "3_1", "--scrambles", 5, "--moves", 100)
    assert code == 0 and out.startswith("grid_size,crossing_count,count")


def test_validation_errors_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "x": [0, 1], "o": [0, 1]}')
    assert run(capsys, "identify", "--in", bad)[0] == 1
    assert run(capsys, "identify", "--knot", "9_99")[0] == 1
    assert run(capsys, "identify")[0] == 1
    assert run(capsys, "explore", "--knot", "3_1", "--scrambles", 0)[0] == 1
    assert run(capsys, "replay", "--witness", tmp_path / "missing.jsonl")[0] == 1
    link = tmp_path / "link.json"
    link.write_text('{"n": 4, "x": [1, 0, 3, 2], "o": [0, 1, 2, 3]}')
    assert run(capsys, "identify", "--in", link)[0] == 1


def test_jobs_env_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("GRIDBAND_JOBS", "-2")
    assert run(capsys, "explore", "--knot", "3_1", "--scrambles", 1)[0] == 1
