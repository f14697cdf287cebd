import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from laminar_blm import parse_instance
from laminar_blm.bench import COLUMNS
from laminar_blm.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def structured(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "structured")
    assert code == 0
    return json.loads(out)


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", "--instance", FIXTURES / "five.json")
    assert code == 0 and out.startswith("valid: 5 elements, 3 family sets")


def test_validate_non_laminar(capsys):
    code, out, err = run(capsys, "validate", "--instance", FIXTURES / "non_laminar.json")
    assert code == 1
    assert "NON_LAMINAR_PAIR" in err and "X and Y" in err
    report = structured_fail(capsys)
    assert report["issues"][0]["sets"] == ["X", "Y"]


def structured_fail(capsys):
    code, out, _ = run(capsys, "validate", "--instance", FIXTURES / "non_laminar.json", "--format", "structured")
    assert code == 1
    return json.loads(out)


def test_solve_singleton(capsys):
    report = structured(capsys, "solve", "--epsilon", "0.1", "--instance", FIXTURES / "singleton.json")
    assert report["ids"] == ["only"] and report["profit"] == 11 and report["cost"] == 3
    assert report["epsilon"] == "1/10" and report["alpha"] == "11/10"


def test_solve_text_report(capsys):
    code, out, _ = run(capsys, "solve", "--instance", FIXTURES / "five.json")
    assert code == 0
    lines = dict(line.split(None, 1) for line in out.splitlines())
    assert lines["ids"] == "1 2 5" and lines["profit"] == "9"


@pytest.mark.parametrize("command", ["exact", "oracle"])
def test_exact_and_oracle_agree(capsys, command):
    report = structured(capsys, command, "--instance", FIXTURES / "five.json")
    assert report["profit"] == 9 and report["ids"] == ["1", "2", "5"]


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO((FIXTURES / "singleton.json").read_text()))
    assert structured(capsys, "exact")["profit"] == 11


def test_oracle_limit_is_usage_error(capsys):
    code, _, err = run(capsys, "oracle", "--limit", "3", "--instance", FIXTURES / "five.json")
    assert code == 2 and "TOO_LARGE" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--epsilon", "0", "--instance", FIXTURES / "singleton.json"],
        ["solve", "--epsilon", "abc", "--instance", FIXTURES / "singleton.json"],
        ["solve", "--instance", FIXTURES / "missing.json"],
        ["frobnicate"],
        ["gen", "--kind", "cardinality"],
        ["bench", "--sizes", "x"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_bad_file_is_invalid(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"budget": 1, "elements": [{"id": "a", "cost": -1, "profit": 0}]}')
    code, _, err = run(capsys, "solve", "--instance", bad)
    assert code == 1 and "elements[0].cost" in err


def test_internal_error_exit_code(capsys, monkeypatch):
    import laminar_blm.cli as cli

    def boom(*_):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "solve_exact", boom)
    code, _, err = run(capsys, "exact", "--instance", FIXTURES / "singleton.json")
    assert code == 3 and "boom" in err


def test_gen_writes_loadable_instance(capsys, tmp_path):
    out = tmp_path / "g.json"
    assert run(capsys, "gen", "--kind", "multiple_choice", "--groups", "2,2", "--seed", 3, "--out", out)[0] == 0
    inst = parse_instance(out.read_text())
    assert inst.metadata["seed"] == 3 and len(inst) == 4


def test_gen_is_deterministic(capsys):
    _, first, _ = run(capsys, "gen", "--n", 20, "--seed", 7)
    _, second, _ = run(capsys, "gen", "--n", 20, "--seed", 7)
    assert first == second


def test_solve_structured_is_deterministic(capsys, tmp_path):
    path = tmp_path / "g.json"
    run(capsys, "gen", "--n", 25, "--seed", 4, "--out", path)
    a = structured(capsys, "solve", "--epsilon", "0.2", "--instance", path)
    b = structured(capsys, "solve", "--epsilon", "0.2", "--instance", path)
    a.pop("wall_ms"), b.pop("wall_ms")
    assert a == b


def test_bench_grid(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "50,100,200", "--epsilons", "0.5,0.1", "--max-capacity", 4)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert tuple(rows[0]) == COLUMNS
    assert [(r["n"], r["epsilon"]) for r in rows] == [
        (n, e) for n in ("50", "100", "200") for e in ("0.5", "0.1")
    ]
    assert all(0 < float(r["opt_ratio_lb"]) <= 1 for r in rows)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "laminar_blm", "exact", "--instance", str(FIXTURES / "five.json")],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0 and "profit" in proc.stdout


def test_bench_repeats(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "20,30", "--epsilons", "0.5", "--repeats", 2, "--seed", 5)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [(r["n"], r["seed"]) for r in rows] == [("20", "5"), ("20", "6"), ("30", "5"), ("30", "6")]
    assert run(capsys, "bench", "--sizes", "20", "--repeats", 0)[0] == 2
