"""Command line entry point: ``nlbounds {compute,table,example1,generate}``."""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from .errors import NLBoundsError, SoundnessViolation
from .generators import GenSpec, generate
from .graph import format_edge_list, parse_degree_sequence, read_edge_list
from .report import BOUND_IDS, BoundReport, evaluate_bounds
from .tables import TABLE_IDS, TableSpec, build_table, example1, render_example1

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2


def _float_list(text: str) -> tuple[float, ...]:
    return tuple(float(t) for t in text.split(",") if t.strip())


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(",") if t.strip())


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nlbounds",
        description="Normalized-Laplacian energies of graphs and bounds on them.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="exact indices and every bound for one graph")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="edge list: 'n m' header, then 1-based 'i j' lines")
    src.add_argument("--degseq", metavar="LIST", help="comma-separated degrees; a random realization is used")
    c.add_argument("--bounds", default="all", help="'all' or comma-separated bound names")
    c.add_argument("--format", choices=("md", "csv", "json"), default="md")
    c.add_argument("--seed", type=int, default=0, help="seed for --degseq realizations")

    t = sub.add_parser("table", help="bound comparison table over random graphs")
    t.add_argument("--id", required=True, choices=TABLE_IDS)
    t.add_argument("--n-list", type=_int_list, default=None)
    t.add_argument("--model", choices=("er", "ws"), default=None)
    t.add_argument("--q", type=_float_list, default=None, help="ER edge probabilities")
    t.add_argument("--p", type=_float_list, default=None, help="WS rewiring probabilities")
    t.add_argument("--ring-k", type=int, default=1, help="WS neighbours on each side")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--replicates", type=int, default=1, help="average each row over this many graphs")
    t.add_argument("--format", choices=("csv", "md"), default="md")
    t.add_argument("--jobs", type=int, default=1)

    e = sub.add_parser("example1", help="bounds for one degree sequence vs sampled graphs")
    e.add_argument("--degseq", default=None, help="defaults to the 20-vertex reference sequence")
    e.add_argument("--trials", type=int, default=10_000)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--format", choices=("md", "csv"), default="md")
    e.add_argument("--jobs", type=int, default=1)

    g = sub.add_parser("generate", help="write a random graph as an edge list")
    g.add_argument("--model", choices=("er", "ws", "degseq"), required=True)
    g.add_argument("--n", type=int, default=0)
    g.add_argument("--q", type=float, default=0.5)
    g.add_argument("--p", type=float, default=0.1)
    g.add_argument("--ring-k", type=int, default=1)
    g.add_argument("--degseq", default=None)
    g.add_argument("--seed", type=int, default=0)
    return p


def _selected(report: BoundReport, spec: str):
    if spec == "all":
        return list(report.entries)
    wanted = [s.strip() for s in spec.split(",") if s.strip()]
    known = {name for name, _, _ in BOUND_IDS}
    unknown = [w for w in wanted if w not in known]
    if unknown:
        raise ValueError(f"unknown bound name(s): {', '.join(unknown)}")
    return [e for e in report.entries if e.name in wanted]


def _json_float(x):
    if x is None:
        return None
    if isinstance(x, float) and not math.isfinite(x):
        return str(x)
    return x


def _render_report(report: BoundReport, entries, fmt: str) -> str:
    ex = report.exact
    exact = {"nee": ex.nee, "lee": ex.lee, "ne": ex.ne, "randic": ex.randic}
    if fmt == "json":
        doc = {
            "n": report.n, "m": report.m, "bipartite": report.bipartite,
            "degrees": list(report.degrees), "exact": exact,
            "spectrum": list(report.spectrum), "Q": report.Q, "R": report.R,
            "bounds": [
                {"name": e.name, "index": e.index, "side": e.side, "value": _json_float(e.value),
                 "applicable": e.applicable, "reason": e.reason,
                 "sound": None if e.value is None or not e.applicable else e not in report.violations()}
                for e in entries
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    rows = []
    for e in entries:
        ref = exact[e.index]
        rel = "" if e.value is None or math.isinf(e.value) else abs(e.value - ref) / ref
        rows.append((e.name, e.index, e.side, e.value, ref, rel, int(e.applicable), e.reason))
    if fmt == "csv":
        lines = ["name,index,side,value,exact,rel_error,applicable,reason"]
        for r in rows:
            cells = ["" if v is None else (repr(v) if isinstance(v, float) else str(v)) for v in r]
            cells[-1] = '"' + cells[-1].replace('"', '""') + '"' if cells[-1] else ""
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"
    head = [
        f"n = {report.n}, m = {report.m}, bipartite = {report.bipartite}",
        f"NEE = {ex.nee:.6f}, lEE = {ex.lee:.6f}, NE = {ex.ne:.6f}, R_-1 = {ex.randic:.6f}",
        f"Q = {report.Q}, R = {report.R}",
        "",
        "| bound | index | side | value | exact | rel. error | applicable | note |",
        "|---|---|---|---|---|---|---|---|",
    ]
    for name, index, side, value, ref, rel, app, reason in rows:
        v = "n/a" if value is None else (f"{value:.4E}" if abs(value) >= 1e6 else f"{value:.6f}")
        r = "" if rel == "" else f"{100 * rel:.4f}%"
        head.append(f"| {name} | {index} | {side} | {v} | {ref:.6f} | {r} | {'yes' if app else 'no'} | {reason} |")
    return "\n".join(head) + "\n"


def _cmd_compute(args) -> int:
    if args.input:
        g = read_edge_list(args.input)
    else:
        ds = parse_degree_sequence(args.degseq)
        g = generate(GenSpec("degseq", sequence=ds.values, seed=args.seed))
    report = evaluate_bounds(g, label=args.input or args.degseq)
    sys.stdout.write(_render_report(report, _selected(report, args.bounds), args.format))
    return EXIT_OK


def _cmd_table(args) -> int:
    kw = {}
    if args.n_list is not None:
        kw["n_list"] = args.n_list
    spec = TableSpec(args.id, model=args.model, q=args.q, p=args.p, ring_k=args.ring_k,
                     seed=args.seed, replicates=args.replicates, **kw)
    text = build_table(spec, fmt=args.format, jobs=args.jobs)
    sys.stdout.write(text)
    return EXIT_OK


def _cmd_example1(args) -> int:
    kw = {}
    if args.degseq:
        kw["sequence"] = parse_degree_sequence(args.degseq).values
    res = example1(args.trials, args.seed, jobs=args.jobs, **kw)
    sys.stdout.write(render_example1(res, args.format))
    return EXIT_OK if res.ok else EXIT_CHECK_FAILED


def _cmd_generate(args) -> int:
    seq = parse_degree_sequence(args.degseq).values if args.degseq else ()
    spec = GenSpec(args.model, n=args.n, q=args.q, p=args.p, ring_k=args.ring_k,
                   sequence=seq, seed=args.seed)
    g = generate(spec)
    sys.stdout.write(format_edge_list(g, f"model={args.model} seed={args.seed}"))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {"compute": _cmd_compute, "table": _cmd_table,
               "example1": _cmd_example1, "generate": _cmd_generate}[args.command]
    try:
        return handler(args)
    except SoundnessViolation as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except NLBoundsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
