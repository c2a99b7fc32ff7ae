from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from conftest import M_54443332, TERMINAL_TIE_GREEDY, bracket_code, with_leaves
from extremal_trees.cli import main
from extremal_trees.enumeration import BOUND_ENV


def run(capsys, *argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p3(tmp_path):
    f = tmp_path / "p3.txt"
    f.write_text("3\n0 1\n1 2\n")
    return str(f)


def test_construct_star_edges(capsys):
    code, out, _ = run(capsys, "construct", "--degrees", "4,1,1,1,1", "--kind", "greedy", "--format", "edges")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "5"
    assert sorted(lines[1:5]) == ["0 1", "0 2", "0 3", "0 4"]


def test_construct_mtree_on_the_eight_term_sequence(capsys):
    D = with_leaves((5, 4, 4, 4, 3, 3, 3, 2))
    code, out, _ = run(capsys, "construct", "--degrees", ",".join(map(str, D)), "--kind", "mtree", "--format", "code")
    assert code == 0
    assert out.strip() == bracket_code(M_54443332).decode()


def test_construct_stages(capsys):
    D = with_leaves((5, 4, 4, 4, 3, 3, 3, 2))
    code, out, _ = run(capsys, "construct", "--degrees", ",".join(map(str, D)), "--kind", "mtree", "--stages")
    headers = [line for line in out.splitlines() if line.startswith("#")]
    assert headers == ["# M(4,3,3)", "# M(4,4,4,3,3,3)", "# M(5,4,4,4,3,3,3,2)"]


def test_construct_rejects_bad_sequence(capsys):
    code, _, err = run(capsys, "construct", "--degrees", "3,3", "--kind", "greedy")
    assert code == 2
    assert "sum" in err or "handshake" in err
    code, _, err = run(capsys, "construct", "--degrees", "3,x,1")
    assert code == 2 and err.startswith("error:")


def test_invariant_from_file(capsys, p3):
    assert run(capsys, "invariant", "--tree", p3, "--name", "wiener")[:2] == (0, "4\n")
    assert run(capsys, "invariant", "--tree", p3, "--name", "harary")[1] == "5/2\n"
    assert run(capsys, "invariant", "--tree", p3, "--name", "matching-poly")[1] == '["1", "2"]\n'
    assert run(capsys, "invariant", "--tree", p3, "--name", "rho:rho0", "--root", "1")[1] == "3\n"
    assert run(capsys, "invariant", "--tree", p3, "--name", "energy")[1] == f"{2 ** 1.5:.12g}\n"


def test_invariant_from_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "invariant", "--tree", "-", "--name", "solvability", stdin="1\n", monkeypatch=monkeypatch)
    assert (code, out) == (0, "s=3 t=2\n")
    code, out, _ = run(capsys, "invariant", "--tree", "-", "--name", "wab:1,0", stdin=TERMINAL_TIE_GREEDY, monkeypatch=monkeypatch)
    assert (code, out) == (0, "16\n")


def test_invariant_errors(capsys, tmp_path, p3):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1\n0 1\n")
    assert run(capsys, "invariant", "--tree", str(bad), "--name", "wiener")[0] == 2
    assert run(capsys, "invariant", "--tree", p3, "--name", "nope")[0] == 2
    assert run(capsys, "invariant", "--tree", str(tmp_path / "missing"), "--name", "wiener")[0] == 2
    assert run(capsys, "invariant", "--tree", p3, "--name", "steiner:4")[0] == 2


def test_enumerate(capsys):
    code, out, err = run(capsys, "enumerate", "--degrees", "3,2,2,1,1,1")
    assert code == 0 and len(out.splitlines()) == 2
    assert "2 trees (12 labelled)" in err
    assert run(capsys, "enumerate", "--degrees", "6,1,1,1,1,1,1", "--majorised", "--count-only")[1] == "11\n"
    code, out, _ = run(capsys, "enumerate", "--degrees", "2,2,1,1", "--format", "edges")
    assert out.splitlines()[0] == "4"


def test_enumerate_bound(capsys, monkeypatch):
    assert run(capsys, "enumerate", "--degrees", "2,2,2,1,1", "--bound", "4")[0] == 3
    monkeypatch.setenv(BOUND_ENV, "4")
    assert run(capsys, "enumerate", "--degrees", "2,2,2,1,1")[0] == 3
    assert run(capsys, "enumerate", "--degrees", "2,2,2,1,1", "--bound", "5")[0] == 0


def test_exchange(capsys, monkeypatch):
    code, out, _ = run(capsys, "exchange", "--tree", "-", "--rho", "rho2:1,0", stdin=TERMINAL_TIE_GREEDY, monkeypatch=monkeypatch)
    assert (code, out) == (0, "exchange-extremal\n")
    code, out, _ = run(capsys, "exchange", "--tree", "-", "--rho", "rho0", stdin="[[[[]]],[],[]]", monkeypatch=monkeypatch)
    assert code == 1 and out.startswith("not exchange-extremal: v=")


def test_verify_steiner(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--degrees", "3,2,2,1,1,1", "--invariant", "steiner:5", "--report", str(report))
    assert code == 0
    d = json.loads(out)
    assert d["attained"] and not d["unique"] and d["optimum"] == 27
    assert json.loads(report.read_text()) == d


def test_verify_examples(capsys):
    d = json.loads(run(capsys, "verify", "--degrees", "5,1,1,1,1,1", "--invariant", "wiener")[1])
    assert d["class_size"] == 1 and d["attained"]
    code, out, _ = run(capsys, "verify", "--degrees", "3,3,2,1,1,1,1", "--majorised", "--invariant", "hosoya")
    assert code == 0 and json.loads(out)["attained"] and json.loads(out)["bound"] == "3,3,2,1,1,1,1"


def test_verify_output_independent_of_jobs(capsys):
    outs = []
    for jobs in ("1", "2"):
        d = json.loads(run(capsys, "verify", "--degrees", "3,3,2,2,1,1,1,1", "--invariant", "ms", "--jobs", jobs)[1])
        d.pop("runtime_ms")
        outs.append(d)
    assert outs[0] == outs[1]


def test_identities(capsys):
    code, out, _ = run(capsys, "identities", "--n-max", "5")
    assert code == 0 and json.loads(out)["holds"]


def test_sweep_csv(capsys, tmp_path):
    target = tmp_path / "s.csv"
    code, _, err = run(capsys, "sweep", "--n", "4-6", "--invariant", "wiener", "--invariant", "steiner:5", "--csv", str(target))
    assert code == 0 and "0 refuted" in err
    rows = list(csv.DictReader(target.open()))
    # 2 + 3 + 5 degree sequences for n = 4, 5, 6; steiner:5 is skipped at n = 4
    assert len(rows) == 10 + 8
    assert all(r["holds"] == "True" for r in rows)
    code, out, _ = run(capsys, "sweep", "--n", "5", "--invariant", "ms", "--majorised")
    assert code == 0 and out.splitlines()[0].startswith("claim,")
    assert run(capsys, "sweep", "--n", "x", "--invariant", "ms")[0] == 2


def test_config_precedence(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"format": "edges", "kind": "mtree"}))
    out = run(capsys, "--config", str(cfg), "construct", "--degrees", "2,2,1,1")[1]
    assert out.splitlines()[0] == "4"
    out = run(capsys, "--config", str(cfg), "construct", "--degrees", "2,2,1,1", "--format", "bracket")[1]
    assert out.startswith("[")
    cfg.write_text(json.dumps({"bound": 4}))
    assert run(capsys, "--config", str(cfg), "enumerate", "--degrees", "2,2,2,1,1")[0] == 3
    assert run(capsys, "--config", str(cfg), "enumerate", "--degrees", "2,2,2,1,1", "--bound", "9")[0] == 0
    cfg.write_text("[1]")
    assert run(capsys, "--config", str(cfg), "construct", "--degrees", "1,1")[0] == 2
    cfg.write_text("{")
    assert run(capsys, "--config", str(cfg), "construct", "--degrees", "1,1")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "extremal_trees", "construct", "--degrees", "3,1,1,1", "--format", "code"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip()
    proc = subprocess.run([sys.executable, "-m", "extremal_trees", "construct", "--degrees", "3,3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and proc.stdout == "" and proc.stderr.startswith("error:")
