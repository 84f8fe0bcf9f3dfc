import csv
import io
import json
import re

import pytest

from bellpart.cli import FIELDS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("method", ["bell", "theta", "corollary", "euler", "naive"])
def test_pn_each_method(capsys, method):
    assert run(capsys, "pn", "--n", "4", "--method", method)[:2] == (0, "5\n")


def test_pn_zero_euler(capsys):
    assert run(capsys, "pn", "--n", "0", "--method", "euler")[:2] == (0, "1\n")


def test_pn_theta_cap(capsys):
    code, out, err = run(capsys, "pn", "--n", "25", "--method", "theta")
    assert code == 2 and out == "" and "cap 24" in err


def test_pn_unsafe_cap_flag(capsys):
    code, out, err = run(capsys, "pn", "--n", "25", "--method", "theta", "--unsafe-cap")
    assert (code, out) == (0, "1958\n")
    assert "warning" in err


def test_pn_env_override(capsys, monkeypatch):
    monkeypatch.setenv("BELLPART_CAP_OVERRIDE", "1")
    assert run(capsys, "pn", "--n", "31", "--method", "naive")[:2] == (0, "6842\n")


def test_pn_unknown_method(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["pn", "--n", "4", "--method", "bogus"])
    assert exc.value.code == 64


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 64


def test_pn_json_record(capsys):
    code, out, _ = run(capsys, "pn", "--n", "100", "--method", "bell", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert tuple(rec) == FIELDS
    assert rec["value"] == "190569292" and rec["ok"] is True
    assert isinstance(rec["elapsed_ns"], int)


def test_pn_nested_algo(capsys):
    assert run(capsys, "pn", "--n", "12", "--method", "bell", "--algo", "nested")[:2] == (0, "77\n")


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--max", "4", "--methods", "euler", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [r["value"] for r in rows] == ["1", "1", "2", "3", "5"]
    assert all(r["ok"] == "true" for r in rows)


def test_table_json_lines(capsys):
    code, out, _ = run(capsys, "table", "--max", "0", "--methods", "bell,euler", "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(recs) == 2
    for rec in recs:
        assert set(rec) == set(FIELDS)
        assert rec["value"] == "1" and rec["ok"] is True
        assert re.fullmatch(r"-?[0-9]+", rec["value"])


def test_table_all_ok_and_sorted(capsys):
    code, out, _ = run(capsys, "table", "--max", "12", "--methods", "corollary,theta,bell",
                       "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 39
    assert all(r["ok"] == "true" for r in rows)
    keys = [(int(r["n"]), ["bell", "theta", "corollary"].index(r["method"])) for r in rows]
    assert keys == sorted(keys)


def test_table_mismatch_exits_1(capsys, monkeypatch):
    from bellpart import partition
    real = partition.compute
    monkeypatch.setattr(partition, "compute",
                        lambda n, m, **kw: real(n, m, **kw) + (n == 3))
    code, out, _ = run(capsys, "table", "--max", "4", "--methods", "bell", "--format", "plain")
    assert code == 1 and "MISMATCH" in out


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max", "0")
    assert code == 0
    assert out.count("PASS") == 16


def test_bench_rows(capsys):
    code, out, _ = run(capsys, "bench", "--max", "40", "--methods", "euler,bell", "--repeats", "3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 82
    code, out, _ = run(capsys, "bench", "--max", "20", "--methods", "theta", "--repeats", "1",
                       "--format", "json")
    assert len(out.splitlines()) == 21


def test_bench_rejects_zero_repeats():
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--max", "3", "--repeats", "0"])
    assert exc.value.code == 64


def test_csv_quoting_roundtrip():
    from bellpart.cli import write_records
    buf = io.StringIO()
    write_records([{"n": 1, "method": "a,b", "value": "1", "elapsed_ns": 0, "ok": True}], "csv", buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[1][1] == "a,b"
