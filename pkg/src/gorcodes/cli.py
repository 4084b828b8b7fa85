"""Command-line interface: ``gorcodes group | classify | verify-tables``.

Simplex documents list one vertex per line as whitespace-separated integers;
blank lines separate simplices and a ``#`` line sets the label of the next
simplex.  Exit status is 0 when every requested check passes, 1 when a check
fails and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, TextIO, Tuple

from gorcodes import __version__
from gorcodes.codes import word_to_str
from gorcodes.ehrhart import DEFAULT_BUDGET, ehrhart_polynomial
from gorcodes.extremal import MAX_S, SECTION4_RANGE, RouteDisagreementError, classify_extremal
from gorcodes.kernels import BACKEND, BudgetExceeded
from gorcodes.simplex import (
    LatticeSimplex,
    degree_and_codegree,
    group_of_simplex,
    hstar_from_group,
    is_gorenstein,
    is_pyramid,
)
from gorcodes.tables import ALL_ROWS, TableRow, verify_row

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class DocumentError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class SimplexDocument:
    label: str
    vertices: Tuple[Tuple[int, ...], ...]
    line: int  # first vertex line, 1-based

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def simplex(self) -> LatticeSimplex:
        try:
            return LatticeSimplex(self.vertices)
        except ValueError as exc:
            raise DocumentError(self.line, str(exc)) from None


def parse_documents(text: str) -> List[SimplexDocument]:
    """Split ``text`` into simplex documents, checking shapes as we go."""
    docs: List[SimplexDocument] = []
    label: Optional[str] = None
    rows: List[Tuple[int, ...]] = []
    start = 0

    def flush() -> None:
        nonlocal rows, label
        if not rows:
            return
        d = len(rows[0])
        if len(rows) != d + 1:
            raise DocumentError(start, f"{len(rows)} vertices given; a {d}-simplex needs {d + 1}")
        docs.append(SimplexDocument(label or f"simplex {len(docs) + 1}", tuple(rows), start))
        rows, label = [], None

    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            flush()
            continue
        if line.startswith("#"):
            flush()
            label = line[1:].strip() or None
            continue
        vals = []
        for field_no, tok in enumerate(line.split(), start=1):
            try:
                vals.append(int(tok))
            except ValueError:
                raise DocumentError(no, f"field {field_no}: {tok!r} is not an integer") from None
        if not rows:
            start = no
        elif len(vals) != len(rows[0]):
            raise DocumentError(no, f"expected {len(rows[0])} coordinates, found {len(vals)}")
        rows.append(tuple(vals))
    flush()
    if not docs:
        raise DocumentError(1, "no simplices found")
    return docs


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _vertices_str(simplex: LatticeSimplex) -> str:
    return ", ".join("(" + ",".join(map(str, v)) + ")" for v in simplex.vertices)


def _frac(a: int, q: int) -> str:
    from fractions import Fraction

    return str(Fraction(a, q))


# ------------------------------------------------------------------ group


def _group_record(doc: SimplexDocument, oracle: bool, budget: int) -> dict:
    simplex = doc.simplex()
    group = group_of_simplex(simplex)
    h = hstar_from_group(group)
    s, r = degree_and_codegree(h, simplex.dim)
    q = group.denominator
    rec = {
        "label": doc.label,
        "dimension": simplex.dim,
        "order": len(group),
        "denominator": q,
        "elements": [
            {"coordinates": [_frac(a, q) for a in v], "height": sum(v) // q} for v in group.vectors
        ],
        "hstar": list(h.coefficients),
        "hstar_text": str(h),
        "pyramid_coordinate": is_pyramid(group),
        "gorenstein": is_gorenstein(h),
        "degree": s,
        "codegree": r,
    }
    if oracle:
        rec["oracle_hstar"] = list(ehrhart_polynomial(simplex, budget=budget, interior=False).hstar.coefficients)
    return rec


def _print_group(rec: dict, out: TextIO) -> None:
    out.write(f"simplex: {rec['label']} (dimension {rec['dimension']})\n")
    out.write(f"group order {rec['order']}, denominator {rec['denominator']}\n")
    for e in rec["elements"]:
        out.write(f"  ({', '.join(e['coordinates'])})  height {e['height']}\n")
    out.write(f"h* = {rec['hstar_text']}\n")
    if "oracle_hstar" in rec:
        agree = "agrees" if rec["oracle_hstar"] == rec["hstar"] else "DISAGREES"
        out.write(f"oracle h* = {rec['oracle_hstar']} ({agree})\n")
    p = rec["pyramid_coordinate"]
    out.write(f"pyramid: {'no' if p is None else f'yes (coordinate {p} vanishes)'}\n")
    out.write(f"gorenstein: {'yes' if rec['gorenstein'] else 'no'}\n")
    out.write(f"degree {rec['degree']}, codegree {rec['codegree']}\n")


def cmd_group(args, out: TextIO) -> int:
    docs = parse_documents(_read(args.input))
    records = [_group_record(d, not args.no_oracle, args.budget) for d in docs]
    if args.format == "records":
        json.dump(records, out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        for i, rec in enumerate(records):
            if i:
                out.write("\n")
            _print_group(rec, out)
    bad = [r for r in records if "oracle_hstar" in r and r["oracle_hstar"] != r["hstar"]]
    return EXIT_FAIL if bad else EXIT_OK


# ------------------------------------------------------------------ classify


def _class_record(c) -> dict:
    n = 2 * c.s
    return {
        "type": c.type_id,
        "graph": c.label,
        "hstar": list(c.hstar.coefficients),
        "hstar_text": str(c.hstar),
        "vertices": [list(v) for v in c.simplex.vertices],
        "code_generators": [word_to_str(g, n) for g in c.code.generators],
    }


def cmd_classify(args, out: TextIO) -> int:
    s, route = args.s, args.route
    if not 1 <= s <= MAX_S:
        raise ValueError(f"--s must be in [1, {MAX_S}]")
    if route != "code" and s not in SECTION4_RANGE:
        raise ValueError(f"the section4 route covers s in {SECTION4_RANGE}")
    try:
        classes = classify_extremal(s, route)
    except RouteDisagreementError as exc:
        out.write(f"route disagreement for s = {s}: {exc}\n")
        return EXIT_FAIL
    records = [_class_record(c) for c in classes]
    if args.format == "records":
        json.dump({"s": s, "route": route, "classes": records}, out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        out.write(f"s = {s}, dimension {2 * s - 1}: {len(records)} classes (route: {route})\n")
        out.write("type\tgraph\th*\tvertices\tcode generators\n")
        for rec, c in zip(records, classes):
            out.write(
                f"{rec['type']}\t{rec['graph']}\t{rec['hstar_text']}\t{_vertices_str(c.simplex)}\t"
                f"{' '.join(rec['code_generators'])}\n"
            )
        if route == "both":
            out.write("code route and section4 route agree class by class\n")
    return EXIT_OK


# ------------------------------------------------------------------ verify-tables


def _rows_from_file(path: str) -> List[TableRow]:
    rows = []
    for doc in parse_documents(_read(path)):
        try:
            rows.append(TableRow.from_label(doc.label, doc.vertices))
        except ValueError as exc:
            raise DocumentError(doc.line, str(exc)) from None
    return rows


def cmd_verify_tables(args, out: TextIO) -> int:
    rows = _rows_from_file(args.rows) if args.rows else list(ALL_ROWS)
    classes = {s: classify_extremal(s) for s in sorted({r.s for r in rows})}
    reports = [verify_row(r, classes[r.s], oracle=not args.no_oracle, budget=args.budget) for r in rows]
    passed = sum(rep.ok for rep in reports)
    if args.format == "records":
        json.dump(
            [
                {
                    "row": rep.row.name,
                    "ok": rep.ok,
                    "group_hstar": rep.group_hstar and list(rep.group_hstar.coefficients),
                    "code_hstar": rep.code_hstar and list(rep.code_hstar.coefficients),
                    "oracle_hstar": rep.oracle_hstar and list(rep.oracle_hstar.coefficients),
                    "graph": rep.graph,
                    "class": list(rep.class_ids),
                    "failures": list(rep.failures),
                }
                for rep in reports
            ],
            out,
            indent=2,
            ensure_ascii=False,
        )
        out.write("\n")
    else:
        for rep in reports:
            if rep.ok:
                oracle = "skipped" if rep.oracle_hstar is None else str(rep.oracle_hstar)
                out.write(
                    f"{rep.row.name}\tok\th* {rep.group_hstar}\toracle {oracle}\t"
                    f"graph {rep.graph}\tclass {rep.class_ids[0]}\n"
                )
            else:
                out.write(f"{rep.row.name}\tFAIL\t{'; '.join(rep.failures)}\n")
        mode = "group route only" if args.no_oracle else "with oracle"
        out.write(f"{passed}/{len(reports)} rows pass ({mode})\n")
    return EXIT_OK if passed == len(reports) else EXIT_FAIL


# ------------------------------------------------------------------ entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "records"), default="table")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="lattice-point enumeration node cap")
    common.add_argument("--no-oracle", action="store_true", help="skip the Ehrhart point-counting check")

    parser = argparse.ArgumentParser(prog="gorcodes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", parents=[common], help="group, h* and predicates of simplices")
    p.add_argument("input", nargs="?", default="-", help="simplex document (default: stdin)")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("classify", parents=[common], help="classify extremal simplices of degree s")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--route", choices=("code", "section4", "both"), default="both")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-tables", parents=[common], help="check the golden classification tables")
    p.add_argument("--rows", help="check rows from a labelled simplex document instead")
    p.set_defaults(func=cmd_verify_tables)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (DocumentError, ValueError, OSError) as exc:
        sys.stderr.write(f"gorcodes {args.command}: {exc}\n")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        sys.stderr.write(f"gorcodes {args.command}: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
