"""Command-line front end.

Every command builds a JSON-ready report dict first; the plain-text output is
rendered from that dict, so both carry the same facts.

Exit codes: 0 ok, 1 input error, 2 verification failure, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .breakable import (Length2Splitting, certify_breaking_set,
                        classify_poly_fg_free, euler_report, find_breaking_set)
from .checks import verify_graph
from .errors import BreakingSetRefused, InputError, ResourceError
from .graph import (CYCLE_CAP, SOLVER_CAP, Graph, chromatic_number,
                    coloring_with, max_clique, read_graph)
from .tower import ColorClassSplitting, build_tower, pfl_bounds
from .words import format_letters, initial_letters, letter_key, parse_word, normalize

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_RESOURCE = 0, 1, 2, 3


def _caps(args) -> tuple:
    if args.max_vertices is None:
        return SOLVER_CAP, CYCLE_CAP
    return args.max_vertices, args.max_vertices


def analyze(g: Graph, args, warnings: list) -> dict:
    solver_cap, cycle_cap = _caps(args)
    clique = max_clique(g, solver_cap)
    chi, coloring = chromatic_number(g, solver_cap)
    out = {
        "clique_number": len(clique),
        "clique": list(clique),
        "chromatic_number": chi,
        "coloring": [list(c) for c in coloring.classes(g)],
    }
    cert = None
    try:
        cert = find_breaking_set(g, cycle_cap)
    except ResourceError as exc:
        out["breaking_set"] = {"found": None, "reason": str(exc)}
        warnings.append(f"breaking-set search skipped: {exc}")
    else:
        if cert is not None:
            out["breaking_set"] = {"found": True, **cert.to_dict()}
        elif not g.edges:
            out["breaking_set"] = {"found": False, "reason": "graph has no edges"}
        else:
            out["breaking_set"] = {
                "found": False,
                "reason": "no independent set leaves a forest meeting each tree at most once "
                          "per dead vertex (exhaustive search)"}
    out["pfl"] = pfl_bounds(g, solver_cap).to_dict()
    verdict = classify_poly_fg_free(g, cycle_cap)
    out["classification"] = verdict.to_dict()
    shape = verdict.shape
    ranks = shape.parts if shape.kind == "complete_bipartite" else None
    rep = euler_report(g, cert, ranks)
    out["euler"] = rep.to_dict()
    warnings.extend(rep.notes)
    return out


def normalize_cmd(g: Graph, args, warnings: list) -> dict:
    letters = parse_word(g, args.word)
    u = normalize(g, letters)
    firsts = sorted(initial_letters(u), key=lambda x: letter_key(g, x))
    return {
        "input": format_letters(letters),
        "normal_form": str(u),
        "length": len(u),
        "initial_letters": [str(x) for x in firsts],
    }


def tower(g: Graph, args, warnings: list) -> dict:
    solver_cap, _ = _caps(args)
    if args.colors is None:
        _, coloring = chromatic_number(g, solver_cap)
    else:
        coloring = coloring_with(g, args.colors, solver_cap)
    desc = build_tower(g, coloring)
    out = desc.to_dict()
    for level, lv in zip(out["levels"], desc.levels):
        if lv.is_free_top:
            continue
        check = ColorClassSplitting(lv.graph, lv.dead).relator_check()
        level["relators"] = check.to_dict()
    return out


def table(g: Graph, args, warnings: list) -> dict:
    _, cycle_cap = _caps(args)
    if args.set is None:
        cert = find_breaking_set(g, cycle_cap)
        if cert is None:
            raise InputError("no breaking set exists; pass one with --set to see why it fails")
    else:
        dead = [v.strip() for v in args.set.split(",") if v.strip()]
        cert = certify_breaking_set(g, dead)
    split = Length2Splitting(cert)
    out = {"certificate": cert.to_dict(),
           "table": split.action_table(args.depth).to_dict()}
    return out


def verify(g: Graph, args, warnings: list) -> dict:
    results = verify_graph(g, depth=args.depth, mutated=args.mutate,
                           max_vertices=args.max_vertices)
    for r in results:
        if r.skipped:
            warnings.append(f"{r.name}: skipped ({r.skipped})")
    return {"passed": all(r.passed for r in results),
            "checks": [r.to_dict() for r in results]}


COMMANDS = {"analyze": analyze, "normalize": normalize_cmd, "tower": tower,
            "table": table, "verify": verify}


def _shared_flags(top: bool) -> argparse.ArgumentParser:
    # Accepted before or after the subcommand; only the top level sets
    # defaults, so a flag given early is not reset by the subparser.
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--json", action="store_true",
                       default=False if top else argparse.SUPPRESS,
                       help="emit the report as JSON")
    flags.add_argument("--max-vertices", type=int,
                       default=None if top else argparse.SUPPRESS,
                       help="override the vertex caps of the exact solvers")
    return flags


def build_parser() -> argparse.ArgumentParser:
    common = _shared_flags(top=False)
    p = argparse.ArgumentParser(prog="polyfree", parents=[_shared_flags(top=True)],
                                description="Poly-free decompositions of right-angled Artin groups.")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="clique, colouring, breaking set, bounds")
    a.add_argument("file")
    n = sub.add_parser("normalize", parents=[common], help="shortlex normal form of a word")
    n.add_argument("file")
    n.add_argument("word", help="quoted, whitespace separated, e.g. 'a b^-1'")
    t = sub.add_parser("tower", parents=[common], help="tower from a proper colouring")
    t.add_argument("file")
    t.add_argument("--colors", type=int, default=None, help="use exactly this many colours")
    tb = sub.add_parser("table", parents=[common], help="action table of a free-by-free splitting")
    tb.add_argument("file")
    tb.add_argument("--set", default=None, help="breaking set, e.g. d,e")
    tb.add_argument("--depth", type=int, default=1)
    v = sub.add_parser("verify", parents=[common], help="run the property suites")
    v.add_argument("file")
    v.add_argument("--depth", type=int, default=4)
    v.add_argument("--mutate", action="store_true",
                   help="corrupt one action-table entry (the relator check should fail)")
    return p


# -- text projection -------------------------------------------------------

def _render_table(t: dict) -> list:
    head = [""] + t["columns"]
    body = [[r["label"]] + [e["text"] for e in r["entries"]] for r in t["rows"]]
    widths = [max(len(row[i]) for row in [head] + body) for i in range(len(head))]

    def line(cells):
        return " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    return [line(head), "-+-".join("-" * w for w in widths)] + [line(r) for r in body]


def _scalar(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def _nested(v: list) -> bool:
    """Lists that get one line per item: containers or long sentences."""
    return any(isinstance(x, (dict, list)) or isinstance(x, str) and len(x) > 30
               for x in v)


def _render(value, indent: int) -> list:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        if set(value) >= {"columns", "rows"}:
            return [pad + s for s in _render_table(value)]
        for k, v in value.items():
            if isinstance(v, dict) and not v:
                lines.append(f"{pad}{k}: none")
            elif isinstance(v, dict) or isinstance(v, list) and _nested(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        if not _nested(value):
            return [pad + _scalar(value)]
        for v in value:
            sub = _render(v, indent + 1)
            lines.append(pad + "- " + sub[0].lstrip())
            lines.extend(sub[1:])
    else:
        lines.append(pad + _scalar(value))
    return lines


def render_text(report: dict) -> str:
    g = report["graph"]
    lines = [f"{report['command']} {report['file']}",
             f"graph: {len(g['vertices'])} vertices, {len(g['edges'])} edges"]
    lines.extend(_render(report["results"], 0))
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def run(args: argparse.Namespace) -> tuple:
    """Run one parsed command; returns ``(exit code, report)``."""
    report = {"command": args.command, "file": args.file, "graph": None,
              "results": None, "warnings": []}
    try:
        g = read_graph(args.file)
        report["graph"] = {"vertices": list(g.vertices),
                           "edges": [list(e) for e in g.sorted_edges()]}
        report["results"] = COMMANDS[args.command](g, args, report["warnings"])
    except BreakingSetRefused as exc:
        report["error"] = {"kind": "refused", "message": str(exc),
                           "offending": list(exc.offending or ())}
        return EXIT_INPUT, report
    except (InputError, OSError) as exc:
        report["error"] = {"kind": "input", "message": str(exc)}
        return EXIT_INPUT, report
    except ResourceError as exc:
        report["error"] = {"kind": "resource", "message": str(exc), "cap": exc.cap}
        return EXIT_RESOURCE, report
    if args.command == "verify" and not report["results"]["passed"]:
        return EXIT_VERIFY, report
    return EXIT_OK, report


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code, report = run(args)
    if args.json:
        print(json.dumps(report, indent=2, ensure_ascii=False))
    elif "error" in report:
        print(f"error: {report['error']['message']}", file=sys.stderr)
    else:
        print(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
