import csv
import io
import json

import pytest

from beauville import report
from beauville.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "5")
    assert code == 0
    assert json.loads(out)["theta"] == 1
    code, out, _ = run(capsys, "count", "13")
    assert json.loads(out) == {"n": 13, "theta1": 11880, "theta2_prod": 108, "theta3_prod": 80, "theta4_prod": 2, "theta": 178}


def test_count_invalid_level(capsys):
    code, out, err = run(capsys, "count", "9")
    assert code == 2
    assert out == ""
    assert "gcd(n, 6) = 3" in err


def test_count_range_skips_invalid_levels(capsys):
    code, out, _ = run(capsys, "count", "5..13", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["n"]) for r in rows] == [5, 7, 11, 13]
    assert [int(r["theta"]) for r in rows] == [1, 7, 79, 178]


def test_classify_5(capsys):
    code, out, _ = run(capsys, "classify", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["theta"] == 1
    (orbit,) = obj["orbits"]
    assert orbit == {"rep": "1 1 2 4", "size": 24, "stabilizer": "Z3"}


def test_classify_7(capsys):
    _, out, _ = run(capsys, "classify", "7")
    assert len(json.loads(out)["orbits"]) == 7
    _, out, _ = run(capsys, "classify", "7", "--no-swap")
    obj = json.loads(out)
    assert obj["group_order"] == 36 and obj["theta"] == 12


def test_classify_refuses_beyond_budget(capsys):
    code, _, err = run(capsys, "classify", "103")
    assert code == 2
    assert "beauville count 103" in err
    code, _, err = run(capsys, "classify", "13", "--budget", "11")
    assert code == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,a,b,c,d" and len(lines) == 25
    _, out, _ = run(capsys, "enumerate", "5")
    obj = json.loads(out)
    assert obj["count"] == 24 and "1 3 2 4" in obj["matrices"]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "35")
    assert code == 0
    assert out.splitlines()[0].startswith("pass   n=35: theta=132")
    code, out, _ = run(capsys, "verify", "9")
    assert code == 0
    assert out.startswith("skip   n=9")
    assert "summary: 0 checked, 0 failed, 0 refused" in out


def test_verify_verbose_lists_checks(capsys):
    code, out, _ = run(capsys, "verify", "5,7", "-v")
    assert code == 0
    for name in ("enumeration-size", "fixed-counts", "three-way-theta", "stabilizer-types", "oracle-equivalence"):
        assert out.count(name) == 2


def test_verify_no_cache_checks_coherence(capsys):
    run(capsys, "classify", "11")
    code, out, _ = run(capsys, "verify", "11", "--no-cache", "-v")
    assert code == 0
    assert "ok  cache-coherence" in out


def test_verify_detects_corrupted_cache(capsys):
    run(capsys, "classify", "7")
    path = report.cache_dir() / "classify-7.json"
    obj = json.loads(path.read_text())
    obj["orbits"] = obj["orbits"][1:]
    path.write_text(report.dumps(obj))
    code, out, _ = run(capsys, "verify", "7")
    assert code == 1
    assert out.startswith("FAIL")


def test_table(capsys):
    code, out, _ = run(capsys, "table", "5..35", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["n"]) for r in rows] == [5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35]
    assert all(r["verified"] == "true" for r in rows)
    by_n = {int(r["n"]): r for r in rows}
    assert (by_n[5]["theta1"], by_n[5]["theta"]) == ("24", "1")
    assert (by_n[25]["theta1"], by_n[25]["theta"]) == ("15000", "225")


def test_table_beyond_budget_has_null_columns(capsys):
    _, out, _ = run(capsys, "table", "5,101,103", "--budget", "5")
    rows = json.loads(out)["rows"]
    assert [r["n"] for r in rows] == [5, 101, 103]
    assert rows[0]["orbits"] == 1 and rows[0]["verified"]
    assert rows[1]["orbits"] is None and rows[1]["stabilizers"] is None and not rows[1]["verified"]


def test_output_is_deterministic(capsys, tmp_path, monkeypatch):
    outputs = []
    for i in range(2):
        monkeypatch.setenv("BEAUVILLE_CACHE_DIR", str(tmp_path / f"c{i}"))
        _, out, _ = run(capsys, "classify", "13")
        outputs.append(out)
    _, cached, _ = run(capsys, "classify", "13")
    assert outputs[0] == outputs[1] == cached


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "classify", "13")
    assert report.dumps(report.report_to_dict(report.report_from_dict(json.loads(out)))) == out


def test_output_flag(capsys, tmp_path):
    target = tmp_path / "count.json"
    code, out, _ = run(capsys, "count", "7", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["theta"] == 7


def test_output_error_names_path(capsys, tmp_path):
    target = tmp_path / "missing" / "out.json"
    code, _, err = run(capsys, "count", "7", "--output", str(target))
    assert code == 2
    assert str(target) in err


@pytest.mark.parametrize("spec, expected", [("5..11", [5, 6, 7, 8, 9, 10, 11]), ("5,7", [5, 7]), ("35", [35])])
def test_parse_range(spec, expected):
    assert parse_range(spec) == expected


def test_bad_range(capsys):
    code, _, err = run(capsys, "count", "5..x")
    assert code == 2 and "cannot parse range" in err
