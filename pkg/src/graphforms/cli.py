"""Command line interface.

Exit codes: 0 success, 1 a check failed (verify-operator, selftest),
2 usage or input errors. Every error path prints a single JSON object
on stderr with fields code, message, context. All output is deterministic:
identical invocations produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cliques import CliqueComplex
from .cohomology import betti, coboundary_matrix
from .errors import GraphFormsError, ParseError
from .forms import Form
from .graph import BUILTIN_NAMES, Graph
from .calculus import chi_expansion, exterior_derivative, wedge
from .selftest import render_text, run_selftest
from .uniqueness import TableOperator, check_axioms


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        payload = {"code": "usage-error", "message": message, "context": {"prog": self.prog}}
        sys.stderr.write(json.dumps(payload) + "\n")
        raise SystemExit(2)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(args):
    path = args.graph
    fmt = getattr(args, "format", None)
    if fmt is None:
        if path.endswith(".json"):
            fmt = "json"
        elif path.endswith(".edges"):
            fmt = "edges"
        else:
            raise ParseError(
                f"cannot sniff graph format from {path!r}; pass --format edges|json",
                context={"path": path},
            )
    text = _read_text(path)
    if fmt == "json":
        return Graph.from_json_text(text)
    return Graph.parse_edge_list(text)


def _load_form_json(path):
    text = _read_text(path)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid form JSON in {path!r}: {e}", context={"path": path}) from None
    return obj


def _peek_degree(obj, path):
    degree = obj.get("degree") if isinstance(obj, dict) else None
    if not isinstance(degree, int) or degree < 0:
        raise ParseError(f"form JSON in {path!r} needs an integer 'degree'", context={"path": path})
    return degree


def _complex_for(graph, *needed_cards):
    """Full complex, deepened when an operation needs higher levels."""
    cx = CliqueComplex.full(graph)
    cap = max([cx.max_card, *needed_cards])
    if cap > cx.max_card:
        cx = CliqueComplex.build(graph, cap)
    return cx


def _emit_form(form, args):
    _write_text(getattr(args, "output", None), json.dumps(form.to_json(), indent=2) + "\n")


def cmd_cliques(args):
    graph = _load_graph(args)
    if args.max_card is not None:
        cx = CliqueComplex.build(graph, args.max_card)
    else:
        cx = CliqueComplex.full(graph, headroom=0)
    label = graph.label
    if args.json:
        levels = []
        for k in range(1, cx.max_card + 1):
            entry = {"cardinality": k, "count": len(cx.level(k))}
            if args.tuples:
                entry["cliques"] = [[label(v) for v in c] for c in cx.level(k)]
            levels.append(entry)
        _write_text(None, json.dumps({"levels": levels}, indent=2) + "\n")
    else:
        lines = []
        for k in range(1, cx.max_card + 1):
            lines.append(f"level {k}: {len(cx.level(k))}")
            if args.tuples:
                lines.extend("  " + " ".join(label(v) for v in c) for c in cx.level(k))
        _write_text(None, "\n".join(lines) + "\n")
    return 0


def cmd_d(args):
    graph = _load_graph(args)
    obj = _load_form_json(args.form)
    degree = _peek_degree(obj, args.form)
    cx = _complex_for(graph, degree + 2)
    form = Form.from_json(cx, obj)
    _emit_form(exterior_derivative(form), args)
    return 0


def cmd_wedge(args):
    graph = _load_graph(args)
    left_obj = _load_form_json(args.left)
    right_obj = _load_form_json(args.right)
    r = _peek_degree(left_obj, args.left)
    s = _peek_degree(right_obj, args.right)
    cx = _complex_for(graph, r + 1, s + 1, r + s + 1)
    left = Form.from_json(cx, left_obj)
    right = Form.from_json(cx, right_obj)
    _emit_form(wedge(left, right), args)
    return 0


def cmd_expand(args):
    graph = _load_graph(args)
    obj = _load_form_json(args.form)
    degree = _peek_degree(obj, args.form)
    cx = _complex_for(graph, degree + 1)
    form = Form.from_json(cx, obj)
    _emit_form(chi_expansion(form), args)
    return 0


def cmd_betti(args):
    graph = _load_graph(args)
    cx = CliqueComplex.full(graph, headroom=1)
    values = betti(cx)
    if args.emit_matrices:
        os.makedirs(args.emit_matrices, exist_ok=True)
        for k in range(cx.top_cardinality):
            matrix = coboundary_matrix(cx, k)
            path = os.path.join(args.emit_matrices, f"d{k}.txt")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(matrix.to_triplet_text())
    if args.json:
        _write_text(None, json.dumps({"betti": list(values)}, indent=2) + "\n")
    else:
        _write_text(None, " ".join(str(b) for b in values) + "\n")
    return 0


def cmd_verify_operator(args):
    graph = _load_graph(args)
    cx = CliqueComplex.full(graph)
    text = _read_text(args.operator)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"invalid operator JSON in {args.operator!r}: {e}", context={"path": args.operator}
        ) from None
    op = TableOperator.from_json(cx, obj, name=os.path.basename(args.operator))
    report = check_axioms(op, cx, trials=args.trials, seed=args.seed)
    if args.report:
        _write_text(args.report, json.dumps(report.to_json(), indent=2) + "\n")
    if args.json:
        _write_text(None, json.dumps(report.to_json(), indent=2) + "\n")
    else:
        _write_text(None, report.render_text())
    return 0 if report.passed else 1


def cmd_selftest(args):
    report = run_selftest(seed=args.seed, trials=args.trials)
    if args.json:
        _write_text(None, json.dumps(report, indent=2) + "\n")
    else:
        _write_text(None, render_text(report))
    return 0 if report["passed"] else 1


def build_parser():
    parser = _Parser(
        prog="graphforms",
        description="Exact exterior calculus on the clique complex of a finite simple graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_arg(p):
        p.add_argument("--graph", required=True, help="graph file (.edges or .json; '-' for stdin)")
        p.add_argument(
            "--format", choices=("edges", "json"), default=None, help="override format sniffing"
        )

    p = sub.add_parser("cliques", help="enumerate cliques per level")
    add_graph_arg(p)
    p.add_argument("--max-card", type=int, default=None, help="cap on clique cardinality")
    p.add_argument("--tuples", action="store_true", help="also list the cliques")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cliques)

    p = sub.add_parser("d", help="exterior derivative of a form")
    add_graph_arg(p)
    p.add_argument("--form", required=True, help="form JSON file ('-' for stdin)")
    p.add_argument("--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_d)

    p = sub.add_parser("wedge", help="wedge product of two forms")
    add_graph_arg(p)
    p.add_argument("--left", required=True, help="left form JSON file")
    p.add_argument("--right", required=True, help="right form JSON file")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_wedge)

    p = sub.add_parser("expand", help="rebuild a form from its coordinate expansion")
    add_graph_arg(p)
    p.add_argument("--form", required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("betti", help="rational Betti numbers")
    add_graph_arg(p)
    p.add_argument("--emit-matrices", default=None, metavar="DIR", help="write coboundary matrices")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify-operator", help="check a tabulated operator against the axioms")
    add_graph_arg(p)
    p.add_argument("--operator", required=True, help="operator table JSON file")
    p.add_argument("--trials", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", default=None, help="also write the JSON report here")
    p.add_argument("--json", action="store_true", help="print the JSON report instead of text")
    p.set_defaults(func=cmd_verify_operator)

    p = sub.add_parser("selftest", help="run the built-in property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        return args.func(args)
    except GraphFormsError as e:
        sys.stderr.write(json.dumps(e.to_json()) + "\n")
        return 2
    except OSError as e:
        payload = {"code": "io-error", "message": str(e), "context": {}}
        sys.stderr.write(json.dumps(payload) + "\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
