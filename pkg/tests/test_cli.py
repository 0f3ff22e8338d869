import subprocess
import sys

import pytest

from vcew.cli import (
    EXIT_CAP,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    EXIT_VERIFY,
    main,
)
from vcew.formats import parse_weighting
from vcew.graph import Graph
from vcew.weighting import is_proper


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mu_command(capsys):
    code, out, _ = run(capsys, "mu", "cycle:5")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "mu=3"
    assert lines[1] == "3 5"  # witness header: k m
    assert len(lines) == 2 + 5


def test_mu_cap_exceeded(capsys):
    code, _, err = run(capsys, "mu", "theta:1,5,5", "--kmax", "2")
    assert code == EXIT_CAP
    assert "POTENTIAL COUNTEREXAMPLE" in err


def test_mu_rejects_tiny_graph(capsys):
    code, _, err = run(capsys, "mu", "path:2")
    assert code == EXIT_PRECONDITION
    assert err


def test_weight_oracle_canonical(capsys):
    code, out, _ = run(capsys, "weight", "cycle:4", "--method", "oracle")
    assert code == EXIT_OK
    edges, w = parse_weighting(out)
    assert w.weights == (1, 1, 2, 2)


def test_weight_oracle_infeasible_k(capsys):
    code, _, err = run(
        capsys, "weight", "theta:1,5,5", "--method", "oracle", "--k", "2"
    )
    assert code == EXIT_CAP
    assert "no proper 2-weighting" in err


def test_weight_product(capsys):
    code, out, _ = run(
        capsys, "weight", "product(cycle:4,path:3)", "--method", "product"
    )
    assert code == EXIT_OK
    edges, w = parse_weighting(out)
    assert len(edges) == 4 * 3 + 2 * 4
    assert w.k == 2


def test_weight_bipk2(capsys):
    code, out, _ = run(capsys, "weight", "cycle:6", "--method", "bipk2")
    assert code == EXIT_OK
    edges, w = parse_weighting(out)
    assert len(edges) == 6 + 6 + 6
    g = Graph(12, edges)
    assert is_proper(g, w)


def test_weight_bipk2_precondition(capsys):
    code, _, err = run(capsys, "weight", "cycle:5", "--method", "bipk2")
    assert code == EXIT_PRECONDITION
    assert "bipartite" in err


def test_weight_cycle_blocks(capsys):
    code, out, _ = run(capsys, "weight", "cycle:8", "--method", "cycle-blocks")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "2 8"


def test_weight_msp_variants(capsys):
    code, out, _ = run(capsys, "weight", "theta:2,2,2", "--method", "msp-a")
    assert code == EXIT_OK
    code, out, _ = run(capsys, "weight", "theta:2,2,2", "--method", "msp-b")
    assert code == EXIT_OK
    code, _, err = run(capsys, "weight", "cycle:6", "--method", "msp-a")
    assert code == EXIT_PRECONDITION


def test_weight_multipartite(capsys):
    code, out, _ = run(capsys, "weight", "kpart:3,3,3", "--method", "multipartite")
    assert code == EXIT_OK
    code, _, err = run(capsys, "weight", "kpart:2,3", "--method", "multipartite")
    assert code == EXIT_PRECONDITION


def test_weight_dominant_autodetect(capsys):
    code, out, _ = run(capsys, "weight", "kpart:2,3", "--method", "dominant")
    assert code == EXIT_OK
    edges, w = parse_weighting(out)
    assert is_proper(Graph(5, edges), w)


def test_verify_green(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "thm-1.3")
    assert code == EXIT_OK
    lines = dict(
        line.split("=", 1) for line in out.splitlines() if "=" in line
    )
    assert lines["theorem"] == "thm-1.3"
    assert lines["failures"] == "0"
    assert int(lines["instances"]) == int(lines["passes"]) > 0
    assert float(lines["seconds"]) >= 0


def test_verify_with_narrowed_sweep(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "thm-4.2", "--max-edges", "9"
    )
    assert code == EXIT_OK
    assert "failures=0" in out


def test_verify_unknown_theorem(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "thm-9.9")
    assert code == EXIT_PARSE
    assert "unknown theorem" in err


def test_decompose_msp(capsys):
    code, out, _ = run(capsys, "decompose", "theta:2,3,4", "--kind", "msp")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "paths=3"
    assert all(line.startswith("path ") for line in lines[1:])


def test_decompose_blocks_from_file(capsys, tmp_path):
    # two triangles sharing vertex 2
    path = tmp_path / "g.edges"
    path.write_text(
        "# two triangles\n5 6\n0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n", encoding="utf-8"
    )
    code, out, _ = run(capsys, "decompose", str(path), "--kind", "blocks")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "blocks=2"
    assert lines[1] == "cut_vertices=2"


def test_file_roundtrip_mu(capsys, tmp_path):
    path = tmp_path / "c4.edges"
    path.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n", encoding="utf-8")
    code, out, _ = run(capsys, "mu", str(path))
    assert code == EXIT_OK
    assert out.splitlines()[0] == "mu=2"


def test_bad_file(capsys, tmp_path):
    path = tmp_path / "bad.edges"
    path.write_text("3 1\n0 zero\n", encoding="utf-8")
    code, _, err = run(capsys, "mu", str(path))
    assert code == EXIT_PARSE


def test_bad_family_spec(capsys):
    code, _, err = run(capsys, "mu", "moebius:7")
    assert code == EXIT_PARSE
    assert "bad graph source" in err


def test_thread_cap_validation(capsys, monkeypatch):
    monkeypatch.setenv("VCEW_THREADS", "not-a-number")
    code, _, err = run(capsys, "mu", "cycle:4")
    assert code == EXIT_PARSE
    assert "VCEW_THREADS" in err
    monkeypatch.setenv("VCEW_THREADS", "0")
    code, _, _ = run(capsys, "mu", "cycle:4")
    assert code == EXIT_PARSE
    monkeypatch.setenv("VCEW_THREADS", "2")
    code, _, _ = run(capsys, "mu", "cycle:4")
    assert code == EXIT_OK


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "vcew.cli", "mu", "path:3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_OK
    assert proc.stdout.splitlines()[0] == "mu=1"
