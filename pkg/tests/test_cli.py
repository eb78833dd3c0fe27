import json
import subprocess
import sys

import pytest

from graphforms import CliqueComplex, Form, Graph, chi, dchi, derivative_operator, operator_table_json
from graphforms.cli import main

K4_EDGES = Graph.builtin("K4").to_edge_text()


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.edges"
    p.write_text(K4_EDGES)
    return str(p)


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cliques_text(capsys, k4_file):
    code, out, err = run_main(capsys, "cliques", "--graph", k4_file, "--tuples")
    assert code == 0 and err == ""
    assert "level 2: 6" in out
    assert "0 1 2 3" in out


def test_cliques_json_and_cap(capsys, k4_file):
    code, out, _ = run_main(capsys, "cliques", "--graph", k4_file, "--max-card", "2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert [lv["count"] for lv in obj["levels"]] == [4, 6]
    assert obj["levels"][0]["cardinality"] == 1


def test_d_subcommand(capsys, tmp_path, k4_file):
    cx = CliqueComplex.full(Graph.builtin("K4"))
    form = tmp_path / "a.json"
    form.write_text(json.dumps(chi(cx, 0).to_json()))
    code, out, _ = run_main(capsys, "d", "--graph", k4_file, "--form", str(form))
    assert code == 0
    obj = json.loads(out)
    assert obj["degree"] == 1
    assert {"clique": ["0", "1"], "value": "-1"} in obj["entries"]


def test_wedge_subcommand(capsys, tmp_path, k4_file):
    cx = CliqueComplex.full(Graph.builtin("K4"))
    left = tmp_path / "l.json"
    right = tmp_path / "r.json"
    left.write_text(json.dumps(dchi(cx, 1).to_json()))
    right.write_text(json.dumps(dchi(cx, 2).to_json()))
    code, out, _ = run_main(
        capsys, "wedge", "--graph", k4_file, "--left", str(left), "--right", str(right)
    )
    assert code == 0
    obj = json.loads(out)
    assert {"clique": ["0", "1", "2"], "value": "1/2"} in obj["entries"]


def test_expand_round_trips(capsys, tmp_path, k4_file):
    cx = CliqueComplex.full(Graph.builtin("K4"))
    a = Form(cx, 1, {(0, 1): 2, (1, 3): -1})
    form = tmp_path / "a.json"
    form.write_text(json.dumps(a.to_json()))
    code, out, _ = run_main(capsys, "expand", "--graph", k4_file, "--form", str(form))
    assert code == 0
    assert json.loads(out) == a.to_json()


def test_output_file_writing(capsys, tmp_path, k4_file):
    cx = CliqueComplex.full(Graph.builtin("K4"))
    form = tmp_path / "a.json"
    form.write_text(json.dumps(chi(cx, 3).to_json()))
    dest = tmp_path / "out.json"
    code, out, _ = run_main(
        capsys, "d", "--graph", k4_file, "--form", str(form), "--output", str(dest)
    )
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["degree"] == 1


def test_betti_text_and_json(capsys, k4_file):
    code, out, _ = run_main(capsys, "betti", "--graph", k4_file)
    assert code == 0 and out.strip() == "1 0 0 0"
    code, out, _ = run_main(capsys, "betti", "--graph", k4_file, "--json")
    assert json.loads(out) == {"betti": [1, 0, 0, 0]}


def test_betti_emit_matrices(capsys, tmp_path, k4_file):
    dest = tmp_path / "mats"
    code, _, _ = run_main(capsys, "betti", "--graph", k4_file, "--emit-matrices", str(dest))
    assert code == 0
    d0 = (dest / "d0.txt").read_text()
    assert d0.startswith("6 4\n")
    assert (dest / "d3.txt").exists()


def test_verify_operator_pass_and_fail(capsys, tmp_path, k4_file):
    cx = CliqueComplex.full(Graph.builtin("K4"))
    table = operator_table_json(derivative_operator(), cx)
    good = tmp_path / "good.json"
    good.write_text(json.dumps(table))
    code, out, _ = run_main(capsys, "verify-operator", "--graph", k4_file, "--operator", str(good))
    assert code == 0 and "verdict: PASS" in out

    bad_table = json.loads(json.dumps(table))
    ent = bad_table["degrees"]["1"][0]["image"]["entries"][0]
    ent["value"] = "-" + ent["value"] if not ent["value"].startswith("-") else ent["value"][1:]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(bad_table))
    report_path = tmp_path / "report.json"
    code, out, _ = run_main(
        capsys,
        "verify-operator",
        "--graph",
        k4_file,
        "--operator",
        str(bad),
        "--report",
        str(report_path),
    )
    assert code == 1 and "verdict: FAIL" in out
    report = json.loads(report_path.read_text())
    assert report["passed"] is False
    assert report["checks"]["squares_to_zero"]["status"] == "fail"


def test_selftest_exit_code(capsys):
    code, out, _ = run_main(capsys, "selftest", "--trials", "1")
    assert code == 0
    assert "all" in out and "passed" in out


def test_usage_error_is_json_on_stderr(capsys):
    code, out, err = run_main(capsys, "cliques")
    assert code == 2 and out == ""
    obj = json.loads(err)
    assert obj["code"] == "usage-error"


def test_parse_error_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.edges"
    p.write_text("a b c d\n")
    code, _, err = run_main(capsys, "cliques", "--graph", str(p))
    assert code == 2
    obj = json.loads(err)
    assert obj["code"] == "parse-error" and obj["context"]["line"] == 1


def test_missing_file_is_io_error(capsys):
    code, _, err = run_main(capsys, "betti", "--graph", "/nonexistent/g.edges")
    assert code == 2
    assert json.loads(err)["code"] == "io-error"


def test_json_graph_format_sniffing(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text(Graph.builtin("C4").to_json_text())
    code, out, _ = run_main(capsys, "betti", "--graph", str(p))
    assert code == 0 and out.strip() == "1 1"


def test_format_override(capsys, tmp_path):
    # .txt extension says nothing; --format picks the parser
    p = tmp_path / "graph.txt"
    p.write_text(K4_EDGES)
    code, _, err = run_main(capsys, "betti", "--graph", str(p))
    assert code == 2 and json.loads(err)["code"] == "parse-error"
    code, out, _ = run_main(capsys, "betti", "--graph", str(p), "--format", "edges")
    assert code == 0 and out.strip() == "1 0 0 0"


def test_stdin_dash(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "graphforms.cli", "betti", "--graph", "-", "--format", "edges"],
        input=K4_EDGES,
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "1 0 0 0"


def test_selftest_reports_are_byte_identical():
    runs = [
        subprocess.run(
            [sys.executable, "-m", "graphforms.cli", "selftest", "--json", "--trials", "1"],
            capture_output=True,
        ).stdout
        for _ in range(2)
    ]
    assert runs[0] == runs[1] and runs[0]
