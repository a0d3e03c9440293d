"""Command-line front end: ``gturan <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on invalid
input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import subprocess
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .closed_forms import bipartite_slope, crossover, matching_only_value, theorem_value_kk
from .constructions import complete_multipartite, d_h_graph, g_graph, matching_graph, turan_graph
from .graph import Graph, count_cliques
from .graph6 import decode_graph6, encode_graph6, read_graph6
from .matching import berge_certificate, matching_number
from .oracle import ForbiddenSet, default_workers, extremal_search
from .symmetrize import symmetrize
from . import verify

_NAMED = re.compile(r"^(K|C|P|M|S)(\d+)(?:,(\d+(?:,\d+)*))?$")


def parse_graph(token: str) -> Graph:
    """Named graph (K4, C5, P3, M2 matching, S3 star, K3,3 multipartite) or graph6."""
    m = _NAMED.match(token)
    if m:
        kind, first, rest = m.group(1), int(m.group(2)), m.group(3)
        if rest:
            if kind != "K":
                raise ValueError(f"only K accepts part lists: {token}")
            return complete_multipartite([first, *map(int, rest.split(","))])
        if kind == "K":
            return Graph.complete(first)
        if kind == "C":
            if first < 3:
                raise ValueError("cycles need at least 3 vertices")
            return Graph.from_edges(first, [(i, (i + 1) % first) for i in range(first)])
        if kind == "P":
            return Graph.from_edges(first, [(i, i + 1) for i in range(first - 1)])
        if kind == "M":
            return matching_graph(first)
        return Graph.from_edges(first + 1, [(0, i) for i in range(1, first + 1)])
    return decode_graph6(token)


def parse_range(text: str) -> list[int]:
    """'3', '3..5' or '3,4,6'."""
    out: list[int] = []
    for piece in text.split(","):
        if ".." in piece:
            lo, hi = piece.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(piece))
    if not out:
        raise ValueError(f"empty range: {text}")
    return out


def provenance(args) -> dict:
    try:
        described = subprocess.run(
            ["git", "describe", "--always", "--dirty"],
            capture_output=True, text=True, cwd=Path(__file__).parent, timeout=5,
        ).stdout.strip()
    except (OSError, subprocess.SubprocessError):
        described = ""
    params = {k: v for k, v in vars(args).items() if k not in ("func", "output")}
    return {"tool": "gturan", "version": __version__ + (f"+{described}" if described else ""), "parameters": params}


def _emit(args, payload, text: str, rows=None):
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        out = json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"
    elif fmt == "csv" and rows:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
        out = buf.getvalue()
    else:
        out = text if text.endswith("\n") else text + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)


def _read_lines(path):
    if path in (None, "-"):
        return sys.stdin.read().splitlines()
    return Path(path).read_text().splitlines()


def _family(args) -> ForbiddenSet:
    return ForbiddenSet(tuple(parse_graph(t) for t in args.forbid or ()), args.s)


def cmd_value(args):
    if args.kind == "slope":
        H = parse_graph(args.H)
        v = bipartite_slope(H, args.r)
        _emit(args, {"kind": "slope", "H": encode_graph6(H), "r": args.r, "value": v}, str(v))
        return 0
    missing = [f"--{name}" for name in ("n", "s") if getattr(args, name) is None]
    if args.kind == "kk" and args.k is None:
        missing.append("--k")
    if missing:
        raise ValueError("missing " + ", ".join(missing))
    if args.kind == "kk":
        tv = theorem_value_kk(args.n, args.k, args.r, args.s)
    else:
        tv = matching_only_value(args.n, args.r, args.s)
    payload = {"kind": args.kind, "n": args.n, "k": args.k, "r": args.r, "s": args.s, **tv.to_dict()}
    _emit(args, payload, tv.describe())
    return 0


def cmd_construct(args):
    if args.kind == "turan":
        G = turan_graph(args.n, args.k)
    elif args.kind == "g":
        G = g_graph(args.n, args.k, args.s)
    elif args.kind == "matching":
        G = matching_graph(args.s)
    elif args.kind == "multipartite":
        G = complete_multipartite(parse_range(args.parts))
    else:
        G = d_h_graph(parse_graph(args.H), args.n, args.s, args.r)
    sys.stdout.write(encode_graph6(G) + "\n")
    return 0


def cmd_count(args):
    rows = []
    for G in read_graph6(_read_lines(args.input)):
        rows.append({"graph6": encode_graph6(G), "n": G.n, "cliques": count_cliques(G, args.r), "matching": matching_number(G)})
    text = "\n".join(f"{r['graph6']}\tcliques {r['cliques']}\tmatching {r['matching']}" for r in rows)
    _emit(args, {"r": args.r, "graphs": rows}, text, rows)
    return 0


def cmd_certify(args):
    results = []
    lines = []
    for G in read_graph6(_read_lines(args.input)):
        cert = berge_certificate(G, args.s)
        results.append({"graph6": encode_graph6(G), "certificate": cert.to_dict() if cert else None})
        lines.append(f"{encode_graph6(G)}\t" + (json.dumps(cert.to_dict()) if cert else "exceeds bound"))
    _emit(args, {"s": args.s, "results": results}, "\n".join(lines))
    return 0


def cmd_oracle(args):
    fam = _family(args)
    candidates = _read_lines(args.input) if args.source == "graph6_stream" else None
    report = extremal_search(args.n, args.r, fam, args.source, candidates=candidates, workers=args.workers)
    payload = {"provenance": provenance(args), **report.to_dict()}
    text = f"value {report.value}\nwitnesses {' '.join(report.witnesses)}\nexamined {report.graphs_examined} ({report.source})"
    _emit(args, payload, text)
    return 0


def cmd_verify(args):
    suites = ["theorem", "gtr", "af", "recurrences", "convexity", "berge"] if args.suite == "all" else [args.suite]
    reports = []
    for suite in suites:
        if suite == "theorem":
            pts = verify.theorem_grid(range(3, args.k_max_oracle + 1), args.k_max_oracle, range(1, args.s_max + 1), args.n_max)
            reports.append(verify.theorem_sweep(pts, workers=args.workers))
        elif suite == "af":
            pts = verify.theorem_grid([2], args.k_max_oracle, range(1, args.s_max + 1), args.n_max)
            reports.append(verify.theorem_sweep(pts, workers=args.workers, name="theorem-kk-r2"))
        elif suite == "gtr":
            reports.append(verify.gtr_sweep(args.n_max, workers=args.workers))
        elif suite == "recurrences":
            reports.append(verify.recurrence_report(args.t_max, args.k_max))
        elif suite == "convexity":
            reports.append(verify.convexity_sweep(args.conv_n_max, args.conv_s_max, args.conv_k_max))
        elif suite == "berge":
            reports.append(verify.berge_sweep(args.n_max, args.random, seed=args.seed))
    ok = all(r.passed for r in reports)
    payload = {
        "provenance": provenance(args),
        "passed": ok,
        "suites": [r.to_dict() for r in reports],
        "timestamp": {"utc": datetime.now(timezone.utc).isoformat()},
    }
    text = "\n".join(
        f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases)"
        + ("" if r.passed else f" counterexample: {json.dumps(r.counterexample)}")
        for r in reports
    )
    _emit(args, payload, text)
    return 0 if ok else 1


def cmd_crossover(args):
    rows = []
    for k in parse_range(args.k):
        for r in parse_range(args.r):
            if r > k:
                continue
            for s in parse_range(args.s):
                n_star = crossover(k, r, s)
                rows.append({"k": k, "r": r, "s": s, "n_star": "never" if n_star is None else n_star})
    text = "\n".join(["   k    r    s   n*"] + [f"{x['k']:>4} {x['r']:>4} {x['s']:>4} {x['n_star']:>4}" for x in rows])
    _emit(args, {"rows": rows}, text, rows)
    return 0


def cmd_symmetrize(args):
    fam = _family(args)
    graphs = list(read_graph6(_read_lines(args.input)))
    traces = []
    for G in graphs:
        _, trace = symmetrize(G, fam, args.r, args.budget)
        traces.append(trace.to_dict())
        if args.emit_steps:
            for step in trace.steps:
                sys.stderr.write(step.graph6 + "\n")
    text = "\n".join(
        f"{t['initial']} -> {t['final']} ({t['iterations']} steps, {t['terminated_by']})" for t in traces
    )
    _emit(args, {"r": args.r, "forbidden": fam.to_dict(), "traces": traces}, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gturan", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--output", help="write the result here instead of stdout")

    p = sub.add_parser("value", help="closed-form extremal values")
    common(p)
    p.add_argument("--kind", choices=["kk", "matching", "slope"], default="kk")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--H", help="forbidden bipartite graph for --kind slope")
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("construct", help="print an extremal construction as graph6")
    p.add_argument("kind", choices=["turan", "g", "dh", "matching", "multipartite"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--H")
    p.add_argument("--parts", help="part sizes, e.g. 5,1,1")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", help="clique count and matching number of graph6 input")
    common(p, ("text", "json", "csv"))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--input", default="-")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("certify", help="Tutte-Berge certificate for a matching bound")
    common(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--input", default="-")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("oracle", help="brute-force extremal search")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--forbid", action="append", help="forbidden graph (repeatable): K4, C4, K3,3, graph6")
    p.add_argument("--s", type=int, help="matching bound")
    p.add_argument("--source", choices=["exhaustive", "graph6_stream"], default="exhaustive")
    p.add_argument("--input", default="-", help="graph6 candidates for stream mode")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run verification sweeps")
    common(p)
    p.add_argument("--suite", choices=["theorem", "gtr", "af", "recurrences", "convexity", "berge", "all"], default="all")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--s-max", type=int, default=3)
    p.add_argument("--k-max-oracle", type=int, default=5)
    p.add_argument("--t-max", type=int, default=50)
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--conv-n-max", type=int, default=200)
    p.add_argument("--conv-s-max", type=int, default=40)
    p.add_argument("--conv-k-max", type=int, default=8)
    p.add_argument("--random", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("crossover", help="where the join construction overtakes T_k(2s+1)")
    common(p, ("text", "json", "csv"))
    p.add_argument("--k", default="3..5")
    p.add_argument("--r", default="3")
    p.add_argument("--s", default="1..5")
    p.set_defaults(func=cmd_crossover)

    p = sub.add_parser("symmetrize", help="run the switching engine on graph6 input")
    common(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--forbid", action="append")
    p.add_argument("--s", type=int)
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--input", default="-")
    p.add_argument("--emit-steps", action="store_true", help="write every intermediate graph6 to stderr")
    p.set_defaults(func=cmd_symmetrize)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", None) is None and args.command in ("oracle", "verify"):
        args.workers = default_workers()
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"gturan {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
