"""Command-line entry point: compute, sweep, verify, hunt, enumerate.

Exit codes: 0 success / all pass, 1 violations or counterexample found,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Iterator
from pathlib import Path
from typing import Optional

from .claims import ClaimSyntaxError, parse_claim
from .enumerate import FAMILIES, make_named
from .graph import Graph, GraphError, parse_edge_list, parse_graph6
from .harness import (
    CHECKS,
    UNIVERSE_CAPS,
    UNIVERSES,
    SweepConfig,
    parameter_table,
    run_sweep,
    universe_graphs,
    write_document,
)
from .solvers import PARAMETERS, compute_report

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class InputError(ValueError):
    pass


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _looks_like_edge_list(text: str) -> bool:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return all(tok.lstrip("-").isdigit() for tok in line.split())
    return False


def read_graphs(text: str, fmt: str = "auto") -> Iterator[Graph]:
    """Graphs from graph6 lines or a single edge list; errors name the line."""
    if fmt == "edgelist" or (fmt == "auto" and _looks_like_edge_list(text)):
        try:
            yield parse_edge_list(text)
        except GraphError as exc:
            raise InputError(str(exc)) from exc
        return
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line.strip())
        except ValueError as exc:
            raise InputError(f"line {lineno}: {exc}") from exc


def _input_graphs(args: argparse.Namespace) -> list[Graph]:
    if args.family:
        return [make_named(args.family, args.k, args.k2)]
    return list(read_graphs(_read_text(args.input), args.input_format))


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _text_report(g: Graph) -> str:
    r = compute_report(g)
    d = r.as_dict()
    lines = [f"graph6 {d['graph6']}  n={d['n']} m={d['m']} diam={d['diam']} dominating_vertex={d['has_dominating_vertex']}"]
    for name in PARAMETERS:
        p = d["parameters"][name]
        lines.append(f"  {name:<13} {'undefined' if p is None else p['value']:>9}  {'' if p is None else p['witness']}")
    return "\n".join(lines) + "\n"


def cmd_compute(args: argparse.Namespace) -> int:
    graphs = _input_graphs(args)
    if args.format == "csv":
        out = parameter_table(graphs)
    elif args.format == "text":
        out = "".join(_text_report(g) for g in graphs)
    else:
        out = "".join(json.dumps(compute_report(g).as_dict(), sort_keys=True) + "\n" for g in graphs)
    _emit(out, args.output)
    return EXIT_OK


def _sweep_config(args: argparse.Namespace, theorems: tuple[str, ...]) -> SweepConfig:
    return SweepConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        universe=args.universe,
        theorems=theorems,
        jobs=args.jobs,
        path=args.input,
        output=args.output,
    )


def _theorems(args: argparse.Namespace) -> tuple[str, ...]:
    picked = list(args.theorem or [])
    picked += [f"claim: {c}" for c in args.claim or []]
    return tuple(picked) if picked else tuple(CHECKS)


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _sweep_config(args, _theorems(args))
    if args.format == "csv":
        _emit(parameter_table(universe_graphs(cfg)), args.output)
        return EXIT_OK
    verdicts = run_sweep(cfg)
    text = write_document(cfg, verdicts, timing=args.timing)
    if not args.output:
        sys.stdout.write(text)
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_VIOLATION


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _sweep_config(args, _theorems(args))
    verdicts = run_sweep(cfg)
    text = write_document(cfg, verdicts, timing=args.timing)
    if not args.output:
        sys.stdout.write(text)
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_VIOLATION


def cmd_hunt(args: argparse.Namespace) -> int:
    claim = parse_claim(args.claim_text)
    cfg = _sweep_config(args, ())
    scanned = 0
    for g in universe_graphs(cfg):
        report = compute_report(g)
        scanned += 1
        if claim.holds(report) is False:
            if args.format == "json":
                _emit(json.dumps({"claim": claim.text, "counterexample": report.as_dict()}, sort_keys=True) + "\n", args.output)
            else:
                _emit(f"counterexample to {claim.text}\n" + _text_report(g), args.output)
            return EXIT_VIOLATION
    if args.format == "json":
        _emit(json.dumps({"claim": claim.text, "counterexample": None, "graphs_scanned": scanned}, sort_keys=True) + "\n", args.output)
    else:
        _emit(f"exhausted: {claim.text} holds on all {scanned} graphs ({cfg.describe()})\n", args.output)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    from .graph import emit_graph6

    cfg = _sweep_config(args, ())
    _emit("".join(emit_graph6(g) + "\n" for g in universe_graphs(cfg)), args.output)
    return EXIT_OK


def _add_universe(p: argparse.ArgumentParser, n_max: int) -> None:
    p.add_argument("--universe", choices=UNIVERSES, default="connected")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=n_max)
    p.add_argument("--input", help="graph6 file for --universe file")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--output", help="write to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isodom", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="all parameters of the input graphs")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--family", choices=FAMILIES)
    src.add_argument("--input", help="graph6 or edge-list file ('-' for stdin, the default)")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--k2", type=int)
    p.add_argument("--input-format", choices=("auto", "graph6", "edgelist"), default="auto")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--output")
    p.set_defaults(func=cmd_compute)

    for name, func, helptext in (
        ("sweep", cmd_sweep, "run selected checks (or emit a CSV parameter table)"),
        ("verify", cmd_verify, "run every check; exit 1 on any violation"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_universe(p, 7)
        p.add_argument("--theorem", action="append", choices=sorted(CHECKS), help="repeatable")
        p.add_argument("--claim", action="append", help="extra inequality to check, repeatable")
        p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identity)")
        if name == "sweep":
            p.add_argument("--format", choices=("json", "csv"), default="json")
        p.set_defaults(func=func)

    p = sub.add_parser("hunt", help="search for a counterexample to an inequality")
    p.add_argument("claim_text", metavar="CLAIM")
    _add_universe(p, 7)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("enumerate", help="print the universe as graph6 lines")
    _add_universe(p, 7)
    p.set_defaults(func=cmd_enumerate)
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if not hasattr(args, "universe"):
        return
    if args.universe == "file":
        if not args.input:
            parser.error("--universe file needs --input")
        return
    if args.input:
        parser.error("--input is only valid with --universe file")
    cap = UNIVERSE_CAPS[args.universe]
    if not 1 <= args.n_min <= args.n_max <= cap:
        parser.error(f"{args.universe} universe needs 1 <= --n-min <= --n-max <= {cap}")
    if args.jobs < 1:
        parser.error("--jobs must be positive")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    _validate(parser, args)
    try:
        return args.func(args)
    except (InputError, GraphError, ClaimSyntaxError) as exc:
        print(f"isodom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
