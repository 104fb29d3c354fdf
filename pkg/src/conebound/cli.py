"""Command-line front end: ``conebound analyze|survey|family|convert``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Iterable, Optional, TextIO

from . import __version__
from .bounds import (
    bipartite_product_bound,
    compare_bounds,
    cone_structure,
    product_bound_report,
)
from .enumeration import independence_number
from .families import FamilySpec, make_family, parse_family_spec
from .graph import Graph, GraphError, graph_from_edges, is_connected, profile
from .graph6 import parse_graph6, read_graph6_lines, to_graph6
from .spectra import Spectrum, spectrum
from .survey import CSV_HEADER, MAX_ORDER, MIN_ORDER, survey

MAX_FAMILY_ORDER = 300

FAMILY_HELP = """\
family spec grammar: [cone:]*kind[:param]*
  complete:n  empty:n  path:n  cycle:n  star:k  wheel:k
  completeBipartite:a:b  hypercube:k  kneser:m:t  odd:k  petersen
examples: cone:kneser:5:2 (Petersen + hub), cone:hypercube:7, cone:cycle:7
"""

ANALYZE_CSV_FIELDS = [
    "graph6", "n", "Delta", "delta", "lambdaMax", "lambdaMin", "product", "slack",
    "equalityWithinTol", "witnessVertex", "alpha", "haemersBound", "winner",
]


class CliError(Exception):
    pass


# -- edge-list text format: "n: u-v,u-v,..." ---------------------------------

def parse_edge_line(line: str) -> Graph:
    head, sep, body = line.partition(":")
    if not sep:
        raise GraphError(f"edge line {line!r} lacks the 'n:' prefix")
    try:
        n = int(head.strip())
        edges = []
        for tok in body.split(","):
            tok = tok.strip()
            if not tok:
                continue
            u, v = tok.split("-")
            edges.append((int(u), int(v)))
    except ValueError:
        raise GraphError(f"malformed edge line {line!r}") from None
    return graph_from_edges(n, edges)


def format_edge_line(g: Graph) -> str:
    body = ",".join(f"{u}-{v}" for u, v in g.edges())
    return f"{g.n}: {body}" if body else f"{g.n}:"


def parse_graph_line(line: str) -> Graph:
    # ':' (58) is outside the graph6 alphabet, so it marks an edge line
    return parse_edge_line(line) if ":" in line else parse_graph6(line)


def read_graphs(lines: Iterable[str]) -> list[Graph]:
    out = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            out.append(parse_graph_line(line))
        except GraphError as exc:
            raise CliError(f"line {lineno}: {exc}") from None
    return out


def _load_input(source: str) -> list[Graph]:
    if source == "-":
        return read_graphs(sys.stdin)
    path = Path(source)
    if path.is_file():
        with path.open() as fh:
            return read_graphs(fh)
    try:
        return [parse_graph_line(source)]
    except GraphError as exc:
        raise CliError(f"cannot read {source!r} as a file or a graph: {exc}") from None


# -- reports -----------------------------------------------------------------

def analyze_graph(g: Graph, tol: float) -> dict:
    if g.n < 2 or not is_connected(g):
        raise CliError(f"analysis needs a connected graph on >= 2 vertices: {format_edge_line(g)}")
    spec = spectrum(g)
    prof = profile(g)
    report = product_bound_report(g, tol, spec=spec)
    alpha = independence_number(g)
    comparison = compare_bounds(g, alpha, tol)
    doc = {
        "graph6": to_graph6(g) if g.n <= 62 else None,
        "n": g.n,
        "edges": g.num_edges,
        "degrees": list(prof.degrees),
        "Delta": prof.max_degree,
        "delta": prof.min_degree,
        "regular": prof.is_regular,
        "bipartite": prof.is_bipartite,
        "spectrum": list(spec.values),
        "bound": report.to_dict(),
        "coneStructure": _asdict_or_none(cone_structure(g, tol)),
        "alpha": alpha,
        "comparison": comparison.to_dict(),
        "bipartiteBound": bipartite_product_bound(g, tol, spec=spec).to_dict()
        if prof.is_bipartite
        else None,
    }
    structural = report.witness is not None
    doc["consistent"] = structural == report.equalityWithinTol
    return doc


def _asdict_or_none(obj) -> Optional[dict]:
    return None if obj is None else asdict(obj)


def expected_family_verdict(spec: FamilySpec) -> Optional[bool]:
    """Equality (True), strict inequality (False), or no stated expectation."""
    kind, p, cones = spec.kind, spec.params, spec.cones
    if cones == 0:
        if kind == "complete" and p[0] >= 2:
            return True
        if kind == "star":
            return True
        if kind == "wheel":
            return _wheel_verdict(p[0] + 1)
        return None
    if cones != 1:
        return None
    if kind in ("complete", "empty", "odd", "petersen"):
        return True
    if kind == "kneser" and p[0] == 2 * p[1] + 1:
        return True
    if kind == "cycle":
        return _wheel_verdict(p[0] + 1)
    if kind == "hypercube":
        return p[0] == 1 or p[0] >= 7
    return None


def _wheel_verdict(order: int) -> bool:
    # the 4-vertex wheel is K4; orders 5, 6, 7 miss the threshold
    return order == 4 or order >= 8


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


def _degree_text(degrees: list[int]) -> str:
    if len(degrees) <= 24:
        return str(degrees)
    counts: dict[int, int] = {}
    for d in degrees:
        counts[d] = counts.get(d, 0) + 1
    return ", ".join(f"{d}^{k}" for d, k in sorted(counts.items(), reverse=True))


def _spectrum_text(values: list[float], tol: float) -> str:
    if len(values) <= 24:
        return "[" + ", ".join(_fmt(round(x, 10) + 0.0) for x in values) + "]"
    groups = Spectrum(tuple(values), tol).distinct()
    return ", ".join(f"{_fmt(round(x, 10) + 0.0)}^{k}" for x, k in groups)


def _text_analyze(doc: dict, tol: float) -> str:
    b = doc["bound"]
    c = doc["comparison"]
    lines = [
        f"graph6       {doc['graph6']}",
        f"n            {doc['n']}   edges {doc['edges']}",
        f"degrees      {_degree_text(doc['degrees'])}   Delta={doc['Delta']} delta={doc['delta']}",
        f"spectrum     {_spectrum_text(doc['spectrum'], tol)}",
        f"-lmin*lmax   {_fmt(b['product'])}   slack {_fmt(b['slack'])}",
        f"equality     {b['equalityWithinTol']}",
    ]
    w = b["witness"]
    if w is not None:
        lines.append(
            f"witness      cone vertex {w['coneVertex']} over {w['baseDegree']}-regular base, "
            f"lmin(base)={_fmt(w['baseLambdaMin'])} >= phi={_fmt(w['phiValue'])}"
        )
    else:
        lines.append("witness      none")
    lines.append(
        f"alpha        {doc['alpha']}   haemers {_fmt(c['haemersBound'])}   "
        f"new {_fmt(c['newBound'])}   winner {c['winner']}"
    )
    if doc["bipartiteBound"] is not None:
        bb = doc["bipartiteBound"]
        lines.append(
            f"bipartite    l1^2={_fmt(bb['lambda1Squared'])} >= "
            f"{_fmt(bb['meanDeg1'])}*{_fmt(bb['meanDeg2'])}  equality={bb['equality']} "
            f"biregular={bb['isBiregular']}"
        )
    if not doc["consistent"]:
        lines.append("WARNING      numerical and structural equality verdicts disagree")
    if "expected" in doc:
        lines.append(f"expected     {doc['expected']}   check {doc['check']}")
    return "\n".join(lines)


def _csv_analyze(docs: list[dict]) -> str:
    rows = [",".join(ANALYZE_CSV_FIELDS)]
    for d in docs:
        b, c = d["bound"], d["comparison"]
        w = b["witness"]
        vals = [
            d["graph6"], d["n"], d["Delta"], d["delta"], b["lambdaMax"], b["lambdaMin"],
            b["product"], b["slack"], b["equalityWithinTol"],
            "" if w is None else w["coneVertex"], d["alpha"], c["haemersBound"], c["winner"],
        ]
        rows.append(",".join(_fmt(v) for v in vals))
    return "\n".join(rows)


def _render_reports(docs: list[dict], fmt: str, tol: float) -> str:
    if fmt == "json":
        return json.dumps(docs[0] if len(docs) == 1 else docs, indent=2)
    if fmt == "csv":
        return _csv_analyze(docs)
    return "\n\n".join(_text_analyze(d, tol) for d in docs)


def _render_survey(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in rows], indent=2)
    if fmt == "csv":
        return "\n".join([CSV_HEADER] + [r.csv_line() for r in rows])
    lines = [f"{'order':>5}  {'irregular':>9}  {'new':>6}  {'haemers':>7}  {'ties':>5}  proportion"]
    for r in rows:
        lines.append(
            f"{r.order:>5}  {r.irregularConnectedCount:>9}  {r.newWins:>6}  {r.haemersWins:>7}  "
            f"{r.ties:>5}  {r.newWins}/{r.irregularConnectedCount} ~ {float(r.proportion):.3f}"
        )
    return "\n".join(lines)


def _emit(text: str, out: Optional[str], stdout: TextIO) -> None:
    if text and not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text)
    else:
        stdout.write(text)


# -- subcommands -------------------------------------------------------------

def cmd_analyze(args, stdout: TextIO) -> int:
    if args.family:
        graphs = [make_family(args.family)]
    elif args.input:
        graphs = _load_input(args.input)
    else:
        raise CliError("analyze needs INPUT or --family")
    if not graphs:
        raise CliError("no graphs in input")
    docs = [analyze_graph(g, args.tol) for g in graphs]
    _emit(_render_reports(docs, args.format, args.tol), args.out, stdout)
    return 0


def cmd_survey(args, stdout: TextIO) -> int:
    if not MIN_ORDER <= args.max_n <= MAX_ORDER:
        raise CliError(f"survey order must lie in {MIN_ORDER}..{MAX_ORDER}, got {args.max_n}")
    universe = None
    if args.universe:
        with open(args.universe) as fh:
            try:
                universe = list(read_graph6_lines(fh))
            except GraphError as exc:
                raise CliError(f"{args.universe}: {exc}") from None
    rows = [
        survey(n, args.tol, universe=universe, threads=args.threads)
        for n in range(MIN_ORDER, args.max_n + 1)
    ]
    _emit(_render_survey(rows, args.format), args.out, stdout)
    return 0


def cmd_family(args, stdout: TextIO) -> int:
    spec = parse_family_spec(args.spec)
    if spec.order() > MAX_FAMILY_ORDER:
        raise CliError(f"{spec} has {spec.order()} vertices; the limit is {MAX_FAMILY_ORDER}")
    doc = analyze_graph(make_family(spec), args.tol)
    doc = {"family": str(spec), **doc}
    status = 0
    if args.check_equality:
        expected = expected_family_verdict(spec)
        doc["expected"] = (
            None if expected is None else ("equality" if expected else "strict")
        )
        if expected is None:
            doc["check"] = "no stated expectation"
        else:
            ok = doc["bound"]["equalityWithinTol"] == expected and doc["consistent"]
            doc["check"] = "pass" if ok else "fail"
            if not ok:
                status = 1
    _emit(_render_reports([doc], args.format, args.tol), args.out, stdout)
    if status:
        print(f"error: {spec} does not match the expected {doc['expected']} verdict", file=sys.stderr)
    return status


def cmd_convert(args, stdout: TextIO) -> int:
    with open(args.input) as fh:
        lines = fh.readlines()
    out = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            if args.to == "graph6":
                out.append(to_graph6(parse_edge_line(line)))
            else:
                out.append(format_edge_line(parse_graph6(line)))
        except GraphError as exc:
            raise CliError(f"{args.input}:{lineno}: {exc}") from None
    _emit("\n".join(out), args.out, stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-7, help="comparison tolerance (default 1e-7)")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="conebound",
        description="Check -lambda_min * lambda_max >= max degree and compare with Haemers' bound.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=FAMILY_HELP,
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="analyze graphs (graph6 or edge list)",
                       epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("input", nargs="?", help="graph6 string, edge line 'n: u-v,...', file, or '-'")
    p.add_argument("--family", help="build the input from a family spec instead")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("survey", parents=[common], help="reproduce the bound comparison table")
    p.add_argument("max_n", type=int, metavar="MAXN", help=f"largest order ({MIN_ORDER}..{MAX_ORDER})")
    p.add_argument("--universe", metavar="PATH", help="graph6 file used instead of the generator")
    p.add_argument("--threads", type=int, default=None, metavar="N", help="worker processes")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("family", parents=[common], help="analyze a named family member",
                       epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("spec", help="family spec, e.g. cone:hypercube:7")
    p.add_argument("--check-equality", action="store_true",
                   help="fail unless the equality verdict matches the expected one")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("convert", help="convert between edge lists and graph6")
    p.add_argument("input", help="input file, one graph per line")
    p.add_argument("--to", choices=["graph6", "edges"], required=True)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: Optional[list[str]] = None, stdout: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tol", 1.0) <= 0:
        parser.error("--tol must be positive")
    if getattr(args, "threads", None) is not None and args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args, stdout or sys.stdout)
    except (CliError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
