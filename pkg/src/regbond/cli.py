"""Command-line entry point.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence

from . import generators
from .bondage import bondage_number
from .domination import domination_number
from .graph import Graph, GraphError, empty_graph, from_graph6, parse_edge_list, to_graph6
from .harness import known_values, verify_theorem

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _int_args(name: str, args: list[str], count: Optional[int] = None) -> list[int]:
    if count is not None and len(args) != count:
        raise GraphError(f"family {name!r} takes {count} integer argument(s), got {len(args)}")
    try:
        return [int(a) for a in args]
    except ValueError:
        raise GraphError(f"family {name!r} needs integer arguments, got {args}") from None


def family_graphs(spec: str) -> list[Graph]:
    """Resolve a family spec such as ``"complete 5"`` or ``"n-minus-3-regular 6"``."""
    tokens = spec.replace(",", " ").split()
    if not tokens:
        raise GraphError("empty family spec")
    name, args = tokens[0].lower(), tokens[1:]
    if name in ("complete", "k"):
        return [generators.complete_graph(*_int_args(name, args, 1))]
    if name == "cycle":
        return [generators.cycle(*_int_args(name, args, 1))]
    if name == "path":
        return [generators.path(*_int_args(name, args, 1))]
    if name in ("cocktail-party", "cocktail"):
        return [generators.cocktail_party(*_int_args(name, args, 1))]
    if name == "empty":
        return [empty_graph(*_int_args(name, args, 1))]
    if name == "disjoint-cycles":
        parts = _int_args(name, args)
        return [generators.disjoint_cycles(parts)]
    if name == "n-minus-3-regular":
        (n,) = _int_args(name, args, 1)
        return [g for _, g in generators.enumerate_n_minus_3_regular(n)]
    raise GraphError(f"unknown family {name!r}")


def _read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    graphs = [from_graph6(line) for line in lines if line.strip()]
    if not graphs:
        raise GraphError("no graph given")
    return graphs


def load_graphs(args: argparse.Namespace) -> list[Graph]:
    sources = sum(bool(x) for x in (args.graph6, args.edge_list, args.family))
    if sources > 1:
        raise GraphError("give exactly one of: graph6 argument, --edge-list, --family")
    if args.family:
        return family_graphs(args.family)
    if args.edge_list:
        if args.edge_list == "-":
            text = sys.stdin.read()
        else:
            try:
                text = Path(args.edge_list).read_text()
            except OSError as exc:
                raise GraphError(f"cannot read {args.edge_list}: {exc}") from None
        return [parse_edge_list(text)]
    if args.graph6:
        return _read_graph6_lines(args.graph6)
    return _read_graph6_lines(sys.stdin)


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=False))


def cmd_gamma(args: argparse.Namespace) -> int:
    for g in load_graphs(args):
        cert = domination_number(g)
        _emit({"graph6": to_graph6(g), "n": g.n, "m": g.m, **cert.to_json()})
    return EXIT_OK


def cmd_bondage(args: argparse.Namespace) -> int:
    graphs = load_graphs(args)
    for g in graphs:
        if g.m == 0:
            raise GraphError(f"bondage number undefined for edgeless graph {to_graph6(g)}")
    for g in graphs:
        cert = bondage_number(g)
        _emit({"graph6": to_graph6(g), "n": g.n, "m": g.m, **cert.to_json()})
    return EXIT_OK


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    def progress(entry) -> None:
        if args.verbose:
            print(f"n={entry.n} {entry.partition}: b={entry.bondage} {entry.status}", file=sys.stderr)

    report = verify_theorem(
        args.n_min, args.n_max, jobs=args.jobs, allow_large=args.allow_large, progress=progress
    )
    if args.format == "json":
        print(json.dumps(report.to_json(include_timing=not args.no_timing), indent=2))
    else:
        print(report.to_table())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_known_values(args: argparse.Namespace) -> int:
    rows = known_values()
    ok = all(r.status == "pass" for r in rows)
    if args.format == "json":
        payload = {
            "rows": [vars(r) for r in rows],
            "summary": {"total": len(rows), "status": "pass" if ok else "fail"},
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"{'family':<15} {'param':>5} {'n':>3} {'b':>3} {'expected':>8}  status")
        for r in rows:
            print(f"{r.family:<15} {r.parameter:>5} {r.n:>3} {r.computed:>3} {r.expected:>8}  {r.status}")
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_generate(args: argparse.Namespace) -> int:
    for g in family_graphs(" ".join(args.spec)):
        print(to_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regbond", description="Exact domination and bondage numbers of small graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph6", nargs="*", help="graph6 strings (default: read lines from stdin)")
        p.add_argument("--edge-list", metavar="FILE", help="plain edge-list file ('-' for stdin)")
        p.add_argument("--family", metavar="SPEC", help='named family, e.g. "cycle 5"')

    p = sub.add_parser("gamma", help="domination number with a witness set")
    add_graph_input(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("bondage", help="bondage number with a witness edge set")
    add_graph_input(p)
    p.set_defaults(func=cmd_bondage)

    p = sub.add_parser("verify-theorem", help="check b(G) = n-3 on every (n-3)-regular graph")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--allow-large", action="store_true", help="permit n = 11 (slow)")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms from JSON")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("known-values", help="regression against b(K_n) and b(K_{2,...,2})")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_known_values)

    p = sub.add_parser("generate", help="print graph6 lines for a family")
    p.add_argument("spec", nargs="+", help='e.g. "complete 5" or "n-minus-3-regular 6"')
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"regbond: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
