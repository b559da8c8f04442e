"""Command-line interface.

Exit codes form a stable contract:
  0  success (SAT / good / value computed)
  1  UNSAT or bad coloring
  2  usage error or malformed input
  3  search bound exhausted (not found within --max-n / --max-k)
  4  decision budget exceeded

Primary results go to stdout; errors and diagnostics go to stderr.
Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from .cnf import decode, encode, export_dimacs
from .coloring import is_good
from .document import ColoringDocument
from .dpll import DEFAULT_DECISION_BUDGET, SolveStatus, solve
from .errors import BudgetExceededError, DocumentError, SearchExhaustedError
from .graphs import DeletedEdgeGraph, Edge
from .search import (
    DEFAULT_MAX_N,
    RamseyQuery,
    extend_coloring,
    min_deletions,
    ramsey_number,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3
EXIT_BUDGET = 4


def _edge_argument(text: str) -> Edge:
    """Parse an edge written as u-v."""
    match = re.fullmatch(r"(\d+)-(\d+)", text)
    if match is None:
        raise argparse.ArgumentTypeError(f"expected an edge like 0-5, got {text!r}")
    u, v = int(match.group(1)), int(match.group(2))
    if u == v:
        raise argparse.ArgumentTypeError(f"loop edge {text!r}")
    return (u, v) if u < v else (v, u)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _load_document(path: str) -> ColoringDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc
    return ColoringDocument.from_json_text(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsat",
        description="Ramsey numbers and clique-avoiding edge colorings via SAT.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_number = sub.add_parser(
        "number", help="compute r(s,t) by solving K_n for increasing n"
    )
    p_number.add_argument("-s", type=_positive_int, required=True)
    p_number.add_argument("-t", type=_positive_int, required=True)
    p_number.add_argument("--max-n", type=_positive_int, default=DEFAULT_MAX_N)
    p_number.add_argument("--budget", type=_positive_int, default=DEFAULT_DECISION_BUDGET)
    p_number.add_argument(
        "--witness", metavar="PATH", help="write the good coloring of K_{p-1} as JSON"
    )

    p_solve = sub.add_parser(
        "solve", help="solve one instance: K_n minus deleted edges, sizes (s,t)"
    )
    p_solve.add_argument("-n", type=_positive_int, required=True)
    p_solve.add_argument("-s", type=_positive_int, required=True)
    p_solve.add_argument("-t", type=_positive_int, required=True)
    p_solve.add_argument(
        "--delete",
        metavar="U-V",
        type=_edge_argument,
        action="append",
        default=[],
        help="delete an edge (repeatable)",
    )
    p_solve.add_argument("--budget", type=_positive_int, default=DEFAULT_DECISION_BUDGET)
    p_solve.add_argument(
        "--json", metavar="PATH", help="write the coloring as JSON when SAT"
    )
    p_solve.add_argument(
        "--dimacs", metavar="PATH", help="write the CNF encoding as DIMACS"
    )

    p_verify = sub.add_parser("verify", help="check a coloring document for (s,t)")
    p_verify.add_argument("json_path")
    p_verify.add_argument("-s", type=_positive_int, required=True)
    p_verify.add_argument("-t", type=_positive_int, required=True)

    p_extend = sub.add_parser(
        "extend", help="extend a good coloring of K_{p-1} to K_p minus one edge"
    )
    p_extend.add_argument("json_path")
    p_extend.add_argument("--vertex", type=int, required=True, help="vertex to twin")
    p_extend.add_argument("-s", type=_positive_int, required=True)
    p_extend.add_argument("-t", type=_positive_int, required=True)
    p_extend.add_argument("--out", metavar="PATH", required=True)

    p_min = sub.add_parser(
        "min-deletions", help="fewest deletions from K_p admitting a good coloring"
    )
    p_min.add_argument("-s", type=_positive_int, required=True)
    p_min.add_argument("-t", type=_positive_int, required=True)
    p_min.add_argument("-p", type=_positive_int, required=True)
    p_min.add_argument(
        "--max-k",
        type=int,
        default=None,
        help="largest deletion count to try (default: p-1)",
    )
    p_min.add_argument("--budget", type=_positive_int, default=DEFAULT_DECISION_BUDGET)
    p_min.add_argument(
        "--json", metavar="PATH", help="write the coloring found as JSON"
    )

    p_dot = sub.add_parser("export-dot", help="render a coloring document as DOT")
    p_dot.add_argument("json_path")
    p_dot.add_argument("-o", "--out", metavar="PATH", required=True, dest="out")

    return parser


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _format_edge(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


def cmd_number(args: argparse.Namespace) -> int:
    query = RamseyQuery(args.s, args.t)
    try:
        result = ramsey_number(query, args.max_n, budget=args.budget)
    except SearchExhaustedError:
        print(f"r({args.s},{args.t}) > {args.max_n}")
        return EXIT_EXHAUSTED
    except BudgetExceededError as exc:
        print(f"BUDGET EXCEEDED: {exc}")
        return EXIT_BUDGET
    print(f"r({args.s},{args.t}) = {result.p}")
    if args.witness and result.witness is not None:
        _write(args.witness, ColoringDocument.from_coloring(result.witness).to_json_text())
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    graph = DeletedEdgeGraph(args.n, tuple(args.delete))
    formula = encode(graph, args.s, args.t)
    if args.dimacs:
        _write(args.dimacs, export_dimacs(formula))
    result = solve(formula, args.budget)
    if result.status is SolveStatus.BUDGET_EXCEEDED:
        print("BUDGET EXCEEDED")
        return EXIT_BUDGET
    if result.status is SolveStatus.UNSAT:
        print("UNSAT")
        return EXIT_NEGATIVE
    print("SAT")
    if args.json:
        coloring = decode(result.model, graph)
        _write(args.json, ColoringDocument.from_coloring(coloring).to_json_text())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    document = _load_document(args.json_path)
    verdict = is_good(document.to_coloring(), args.s, args.t)
    if verdict.good:
        print("GOOD")
        return EXIT_OK
    color, clique = verdict.witness
    vertices = ",".join(str(v) for v in clique)
    print(f"BAD: {color.value} K_{len(clique)} on {{{vertices}}}")
    return EXIT_NEGATIVE


def cmd_extend(args: argparse.Namespace) -> int:
    document = _load_document(args.json_path)
    if document.deleted_edges:
        raise DocumentError("extension starts from a complete graph")
    coloring = document.to_coloring()
    if not 0 <= args.vertex < document.n:
        raise DocumentError(f"vertex {args.vertex} is not a vertex of K_{document.n}")
    verdict = is_good(coloring, args.s, args.t)
    if not verdict.good:
        color, clique = verdict.witness
        vertices = ",".join(str(v) for v in clique)
        print(f"BAD: {color.value} K_{len(clique)} on {{{vertices}}}")
        return EXIT_NEGATIVE
    extended = extend_coloring(coloring, args.vertex, args.s, args.t)
    deleted = extended.graph.deleted[0]
    _write(args.out, ColoringDocument.from_coloring(extended).to_json_text())
    print(f"deleted edge {_format_edge(deleted)}")
    return EXIT_OK


def cmd_min_deletions(args: argparse.Namespace) -> int:
    if args.p < 2:
        raise DocumentError("p must be at least 2")
    query = RamseyQuery(args.s, args.t)
    k_max = args.p - 1 if args.max_k is None else args.max_k
    try:
        result = min_deletions(query, args.p, k_max, budget=args.budget)
    except SearchExhaustedError:
        print(f"e > {k_max}")
        return EXIT_EXHAUSTED
    except BudgetExceededError as exc:
        print(f"BUDGET EXCEEDED: {exc}")
        return EXIT_BUDGET
    print(f"e = {result.e}")
    if result.deleted:
        print(f"deleted: {' '.join(_format_edge(e) for e in result.deleted)}")
    else:
        print("deleted: none")
    if args.json:
        _write(args.json, ColoringDocument.from_coloring(result.coloring).to_json_text())
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    document = _load_document(args.json_path)
    _write(args.out, document.to_dot())
    return EXIT_OK


_HANDLERS = {
    "number": cmd_number,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "extend": cmd_extend,
    "min-deletions": cmd_min_deletions,
    "export-dot": cmd_export_dot,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
