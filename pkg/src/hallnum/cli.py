"""Command-line front end.

Exit codes: 0 success (colorable / Hall satisfied / all rows pass),
1 negative verdict (not colorable / Hall violated / a row failed),
2 unreadable input, 3 instance too large for an exact routine,
4 Hall shortcut inconclusive.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constructions import NAMES, ConstructionSpec
from .errors import CapabilityError
from .formats import ParseError, format_certificate, format_instance, format_records, parse_graph, parse_lists
from .lists import INCONCLUSIVE, SATISFIED, check_hall
from .params import DEFAULT_BUDGET, conjecture_scan, graph_parameters
from .reproduce import FAIL, reproduce
from .solver import find_coloring


def _read_instance(graph_path: str, lists_path: str):
    try:
        g = parse_graph(Path(graph_path).read_text())
        L = parse_lists(Path(lists_path).read_text(), g)
    except ParseError as exc:
        raise SystemExit(_fail(f"parse error: {exc}", 2))
    except (OSError, ValueError) as exc:
        raise SystemExit(_fail(f"cannot read input: {exc}", 2))
    return g, L


def _fail(msg: str, code: int) -> int:
    print(msg, file=sys.stderr)
    return code


def _emit(args, records: list[dict], text: str) -> None:
    out = format_records(records) if args.format == "records" else text
    sys.stdout.write(out)


def cmd_solve(args) -> int:
    g, L = _read_instance(args.graph, args.lists)
    outcome = find_coloring(L)
    rec = {"record": "solve", "colorable": outcome.colorable, "nodes": outcome.nodes_explored}
    if outcome.colorable:
        lines = [f"color {lab}: {c}" for lab, c in zip(g.labels, outcome.coloring.colors)]
        rec["coloring"] = " ".join(f"{lab}={c}" for lab, c in zip(g.labels, outcome.coloring.colors))
        _emit(args, [rec], "\n".join(lines) + "\n")
        return 0
    _emit(args, [rec], "NOT COLORABLE\n")
    return 1


def cmd_hall(args) -> int:
    g, L = _read_instance(args.graph, args.lists)
    try:
        report = check_hall(L, args.method)
    except CapabilityError as exc:
        return _fail(str(exc), 3)
    witness = [g.labels[v] for v in report.witness]
    rec = {
        "record": "hall", "status": report.status, "method": report.method,
        "worst_margin": report.worst_margin, "witness": " ".join(witness),
    }
    text = [f"{report.status.upper()} (method: {report.method})", f"worst margin: {report.worst_margin}",
            f"witness: {{{', '.join(witness)}}}"]
    if report.status == INCONCLUSIVE:
        bad = [g.labels[v] for v in report.uncolorable_deletions]
        rec["uncolorable_deletions"] = " ".join(bad)
        text.append(f"G-v not colorable for v in {bad}; rerun with --method exhaustive")
    _emit(args, [rec], "\n".join(text) + "\n")
    if report.status == SATISFIED:
        return 0
    return 4 if report.status == INCONCLUSIVE else 1


def cmd_bounds(args) -> int:
    try:
        g = parse_graph(Path(args.graph).read_text())
    except (ParseError, OSError) as exc:
        return _fail(f"parse error: {exc}", 2)
    try:
        rep = graph_parameters(g, args.budget, args.oracle == "on")
    except CapabilityError as exc:
        return _fail(str(exc), 3)
    records, text = [], []
    for b in (rep.chi, rep.ch, rep.hall):
        records.append({"record": "bounds", "parameter": b.parameter, "lower": b.lower,
                        "upper": "?" if b.upper is None else b.upper, "exact": b.exact,
                        "lower_certificate": b.lower_cert.note,
                        "upper_certificate": b.upper_cert.note if b.upper_cert else "none"})
        text.append(str(b))
        text += [f"  {t}" for t in b.trace]
    if rep.h_equals_ch:
        text.append(f"h = ch: {rep.h_equals_ch}")
    _emit(args, records, "\n".join(text) + "\n")
    if args.certificates:
        for b in (rep.ch, rep.hall):
            if b.lower_cert.assignment is not None:
                path = Path(f"{args.certificates}.{b.parameter}.txt")
                path.write_text(format_certificate(b))
    return 0


def cmd_verify_paper(args) -> int:
    rows = reproduce(oracle=args.oracle == "on", budget=args.budget, workers=args.workers)
    records = [{"record": "verify", "item": r.item, "stated": r.stated, "computed": r.computed, "status": r.status}
               for r in rows]
    width = max(len(r.item) for r in rows)
    lines = []
    for r in rows:
        mark = ">>" if r.status == FAIL else "  "
        lines.append(f"{mark} {r.status:<8}{r.item:<{width}}  stated: {r.stated}")
        lines.append(f"   {'':<8}{'':<{width}}  computed: {r.computed}")
    _emit(args, records, "\n".join(lines) + "\n")
    return 1 if any(r.status == FAIL for r in rows) else 0


def cmd_scan(args) -> int:
    rows = conjecture_scan(args.max_vertices, args.budget, args.oracle == "on", args.workers)
    records = []
    for row in rows:
        rep = row.report
        rec = {
            "record": "scan", "graph": row.name, "status": row.status, "reason": row.reason,
            "chi": rep.chi.lower,
            "ch_lower": rep.ch.lower, "ch_upper": "?" if rep.ch.upper is None else rep.ch.upper,
            "h_lower": rep.hall.lower, "h_upper": "?" if rep.hall.upper is None else rep.hall.upper,
        }
        if row.reverification:
            rec["reverification"] = "; ".join(row.reverification)
        records.append(rec)
    out = format_records(records)
    if args.out:
        Path(args.out).write_text(out)
    if args.format == "records" and not args.out:
        sys.stdout.write(out)
    else:
        for row in rows:
            print(f"{row.name:<14}{row.status:<11}{row.report.ch!s:<16}{row.report.hall!s:<18}{row.reason}")
    return 0


def cmd_dump(args) -> int:
    try:
        spec = ConstructionSpec(args.name, args.k)
        _, L = spec.resolve()
    except ValueError as exc:
        return _fail(str(exc), 2)
    text = format_instance(L, [f"construction: {spec}"])
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle", choices=("on", "off"), default="on",
                        help="use published choice numbers as upper/lower bounds")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max canonical assignments examined per search")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--format", choices=("text", "records"), default="text")

    parser = argparse.ArgumentParser(prog="hallnum", description="List coloring and Hall numbers of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="find a proper list coloring")
    p.add_argument("graph")
    p.add_argument("lists")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("hall", parents=[common], help="check Hall's condition")
    p.add_argument("graph")
    p.add_argument("lists")
    p.add_argument("--method", choices=("exhaustive", "shortcut", "auto"), default="auto")
    p.set_defaults(func=cmd_hall)

    p = sub.add_parser("bounds", parents=[common], help="certified bounds for chi, ch and h")
    p.add_argument("graph")
    p.add_argument("--certificates", metavar="PREFIX", help="write assignment certificates to PREFIX.<param>.txt")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify-paper", parents=[common], help="reproduce the published constructions and values")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("scan", parents=[common], help="test h = ch on complete multipartite graphs")
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--out", help="write the records report here")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("dump", parents=[common], help="print a construction as graph + lists text")
    p.add_argument("name", choices=NAMES)
    p.add_argument("--k", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dump)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget <= 0:
        parser.error("--budget must be positive")
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
