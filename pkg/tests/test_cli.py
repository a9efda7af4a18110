import json
import subprocess
import sys

import pytest

from balgroups.census import census_from_json, census_json
from balgroups.cli import main
from balgroups.rank import RankReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_balanced_all_methods(capsys):
    code, out, _ = run(capsys, "balanced", "--d", "24", "--h", "17", "--method", "all")
    assert code == 0
    assert out.count(" balanced") == 3 and "not balanced" not in out


def test_balanced_witness(capsys):
    code, out, _ = run(capsys, "balanced", "--d", "8", "--p", "3")
    assert code == 0
    assert "not balanced" in out and "witness" in out


def test_balanced_usage_errors(capsys):
    assert run(capsys, "balanced", "--d", "2", "--h", "1")[0] == 2
    assert run(capsys, "balanced", "--d", "10", "--h", "5")[0] == 2
    assert run(capsys, "balanced", "--d", "10")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["balanced", "--d", "ten"])
    assert exc.value.code == 2


def test_disagreement_exit_code(capsys, monkeypatch):
    from balgroups import balanced as bal

    real = bal.subgroup_verdict

    def broken(d, gens, method):
        v = real(d, gens, method)
        if method == "fast":
            return bal.BalancedVerdict(d, v.subgroup, not v.balanced, "fast")
        return v

    monkeypatch.setattr(bal, "subgroup_verdict", broken)
    code, out, err = run(capsys, "balanced", "--d", "24", "--h", "17", "--method", "all")
    assert code == 3
    assert "DISAGREEMENT" in out and "DISAGREEMENT" in err


def test_balanced_json_roundtrip(capsys):
    code, out, _ = run(capsys, "balanced", "--d", "20", "--p", "-3", "--method", "all", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["agree"] and [v["method"] for v in obj["verdicts"]] == ["definition", "characters", "fast"]
    assert json.dumps(obj, sort_keys=True, indent=1) + "\n" == out


def test_order2_scan_json(capsys):
    code, out, _ = run(capsys, "order2-scan", "--d-max", "2000", "--format", "json")
    assert code == 0
    assert json.loads(out)["pairs"] == [[24, 17], [24, 19], [60, 41], [60, 49]]


def test_census_cli(capsys):
    code, out, _ = run(
        capsys, "census", "--p", "3", "--x-max", "100000", "--checkpoints", "1000,10000,100000", "--format", "json"
    )
    assert code == 0
    table, recs = census_from_json(out)
    assert census_json(table, recs) == out
    rows = table.rows()
    assert [r["x"] for r in rows] == [1000, 10000, 100000]
    for a, b in zip(rows, rows[1:]):
        assert all(b[k] >= a[k] for k in ("Bp", "Bp0", "Bp1", "Bpstar"))
    for r in rows:
        assert r["Bp"] >= max(r["Bp0"], r["Bp1"])


def test_census_negative_p_and_shards(capsys, tmp_path):
    outs = []
    for shards in ("1", "4"):
        path = tmp_path / f"c{shards}.csv"
        code, _, _ = run(capsys, "census", "--p", "-3", "--x-max", "5000", "--format", "csv", "--shards", shards, "-o", str(path))
        assert code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert outs[0].startswith(b"d,j,m,")


def test_census_bad_p(capsys):
    assert run(capsys, "census", "--p", "1", "--x-max", "100")[0] == 2
    assert run(capsys, "census", "--p", "3", "--x-max", "2")[0] == 2


def test_rank_cli(capsys):
    code, out, _ = run(capsys, "rank", "--q", "81", "--d", "5")
    assert code == 0 and "rank 4" in out
    code, out, _ = run(capsys, "rank", "--q", "81", "--d", "10", "--format", "json")
    rep = RankReport.from_json(out)
    assert rep.rank == 8 and rep.to_json() == out
    assert run(capsys, "rank", "--q", "6", "--d", "5")[0] == 2
    assert run(capsys, "rank", "--q", "3", "--d", "9")[0] == 2


def test_stats_cli(capsys):
    code, out, _ = run(capsys, "stats", "--q", "3", "--x-max", "10", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert json.dumps(obj, sort_keys=True, indent=1) + "\n" == out
    assert next(r for r in obj["rows"] if r["d"] == 4)["rank"] == 1
    code, out, _ = run(capsys, "stats", "--q", "3", "--x-max", "10", "--format", "csv")
    assert out.startswith("d,rank\n")


def test_bad_shards(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["order2-scan", "--d-max", "100", "--shards", "0"])
    assert exc.value.code == 2


def test_verify_failure_exit(capsys, monkeypatch):
    from balgroups import verify

    def fake(tier):
        yield verify.CheckResult("x", False, "forced")

    monkeypatch.setattr(verify, "run_checks", fake)
    code, out, _ = run(capsys, "verify")
    assert code == 1 and "[FAIL]" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "balgroups", "rank", "--q", "3", "--d", "4", "--format", "json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["rank"] == 1
