import json
import subprocess
import sys

import pytest

from lcdgc.cli import main


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_cosets(capsys):
    code, rep = run_json(capsys, "cosets", "9")
    assert code == 0
    assert set(rep) >= {"command", "group", "results", "warnings"}
    assert rep["group"] == {"kind": "cyclic:9", "order": 9}
    assert [c["residues"] for c in rep["results"]["cosets"]] == [[0], [1, 2, 4, 5, 7, 8], [3, 6]]
    assert rep["results"]["t"] == 3
    _, rep = run_json(capsys, "cosets", "1")
    assert [c["residues"] for c in rep["results"]["cosets"]] == [[0]]
    _, rep = run_json(capsys, "cosets", "15")
    r = rep["results"]
    assert (r["t"], r["t1"], len(r["blocks"])) == (5, 3, 4)


def test_count(capsys):
    assert run_json(capsys, "count", "9")[1]["results"]["count"] == 7
    assert run_json(capsys, "count", "7")[1]["results"]["count"] == 3
    code, rep = run_json(capsys, "count", "15")
    assert code == 0 and rep["results"]["count"] == 15
    assert rep["results"]["audit"]["paper_count"] == 7
    assert len(rep["warnings"]) == 1 and "gives 7" in rep["warnings"][0]


def test_enumerate(capsys):
    _, rep = run_json(capsys, "enumerate", "cyclic:9")
    assert rep["results"]["count"] == 7 and len(rep["results"]["codes"]) == 7
    _, rep = run_json(capsys, "enumerate", "cyclic:1")
    assert rep["results"]["count"] == 1
    _, rep = run_json(capsys, "enumerate", "sym:3", "--method", "exhaustive", "--with-params")
    params = {tuple(c["support"]): (c["n"], c["k"], c["d"]) for c in rep["results"]["codes"]}
    assert params[(0, 4, 5)] == (6, 2, 3)
    assert params[(4, 5)] == (6, 4, 2)
    assert all(c["lcd_gram"] and c["lcd_intersection"] for c in rep["results"]["codes"])


def test_enumerate_large_k_warns(capsys):
    code, rep = run_json(capsys, "enumerate", "sym:4", "--with-params")
    assert code == 0 and rep["results"]["count"] == 33
    whole = [c for c in rep["results"]["codes"] if c["support"] == [0]][0]
    assert whole["k"] == 24 and whole["d"] is None
    assert any("k=24" in w for w in rep["warnings"])


def test_catalog(tmp_path, capsys):
    path = tmp_path / "cat.jsonl"
    main(["enumerate", "cyclic:3", "--catalog", str(path)])
    main(["enumerate", "cyclic:3", "--catalog", str(path)])
    capsys.readouterr()
    lines = [json.loads(x) for x in path.read_text().splitlines()]
    assert len(lines) == 6
    assert set(lines[0]) == {"group", "support", "n", "k", "d", "lcd", "mds"}
    assert {"group": "cyclic:3", "support": [1, 2], "n": 3, "k": 2, "d": 2, "lcd": True, "mds": True} in lines


def test_analyze(capsys):
    _, rep = run_json(capsys, "analyze", "sym:3", "--support", "0,4,5")
    r = rep["results"]
    assert (r["k"], r["d"], r["lcd_gram"], r["lcd_intersection"]) == (2, 3, True, True)
    _, rep = run_json(capsys, "analyze", "cyclic:3", "--support", "1,2")
    r = rep["results"]
    assert (r["k"], r["d"], r["mds"]["is_mds"], r["mds"]["is_maximal_ideal"]) == (2, 2, True, True)
    _, rep = run_json(capsys, "analyze", "cyclic:9", "--support", "0")
    r = rep["results"]
    assert (r["k"], r["lcd_gram"]) == (9, True)


def test_analyze_non_idempotent(capsys):
    code, rep = run_json(capsys, "analyze", "sym:3", "--support", "0,1")
    assert code == 0
    assert rep["results"]["lcd_applicable"] is False
    assert rep["results"]["k"] is not None and rep["warnings"]


def test_audit(capsys):
    code, rep = run_json(capsys, "audit", "--max-n", "15")
    assert code == 0
    rows = rep["results"]["rows"]
    assert [r["n"] for r in rows] == list(range(1, 16, 2))
    assert all(r["oracle_agrees"] for r in rows)
    assert len(rep["warnings"]) == 1 and rep["warnings"][0].startswith("n=15")
    _, rep = run_json(capsys, "audit", "--max-n", "1")
    assert [(r["n"], r["block_count"]) for r in rep["results"]["rows"]] == [(1, 1)]
    _, rep = run_json(capsys, "audit", "--max-n", "27")
    row27 = rep["results"]["rows"][-1]
    assert (row27["n"], row27["t"], row27["block_count"], row27["closed_form"]) == (27, 4, 15, 15)


@pytest.mark.parametrize("argv, code", [
    (["cosets", "8"], 2),
    (["count", "10"], 2),
    (["enumerate", "sym:9"], 2),
    (["enumerate", "sym:4", "--method", "exhaustive"], 3),
    (["analyze", "sym:3", "--support", "0,7"], 2),
    (["analyze", "sym:3", "--support", "a,b"], 2),
    (["audit", "--max-n", "101"], 2),
])
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code
    assert "lcdgc:" in capsys.readouterr().err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


@pytest.mark.parametrize("fmt", ["table", "csv"])
def test_text_formats(fmt, capsys):
    assert main(["enumerate", "sym:3", "--with-params", "--format", fmt]) == 0
    out = capsys.readouterr().out
    assert "0 4 5" in out
    if fmt == "csv":
        assert out.splitlines()[0].startswith("support,labels,n,k,d")


def test_deterministic_json_via_module():
    cmd = [sys.executable, "-m", "lcdgc", "enumerate", "dihedral:5", "--with-params", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["results"]["count"] == 3
