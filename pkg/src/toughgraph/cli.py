"""Command-line interface.

One subcommand per operation; machine-readable output (JSON, or CSV for
corpus sweeps) goes to stdout, diagnostics to stderr. Exit codes:
0 success, 1 check falsified, 2 usage error, 3 input parse error,
4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .errors import (
    FalsificationError,
    Graph6Error,
    PreconditionError,
    ResourceBudgetError,
    UnsupportedSizeError,
)
from .graph import Graph
from .graph6 import parse_edge_list, parse_graph6, read_graph6_stream
from .invariants import find_claw, independence_number, is_hamiltonian, vertex_connectivity
from .rational import Rational, ZERO

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4


class _UsageError(Exception):
    pass


def _parse_t(text: str) -> Rational:
    try:
        t = Rational.parse(text)
    except (ValueError, TypeError) as exc:
        raise _UsageError(f"cannot parse t={text!r}: {exc}") from exc
    if t.is_infinite or not t > ZERO:
        raise _UsageError(f"t must be a positive finite rational, got {text!r}")
    return t


def _load_graphs(args) -> list[Graph]:
    sources = [
        args.graph6 is not None,
        args.file is not None,
        args.edge_list is not None,
    ]
    if sum(sources) != 1:
        raise _UsageError(
            "exactly one input source required: positional graph6, --file, or --edge-list"
        )
    if args.graph6 is not None:
        return [parse_graph6(args.graph6)]
    if args.edge_list is not None:
        with open(args.edge_list) as fh:
            return [parse_edge_list(fh.read())]
    if args.file == "-":
        return list(read_graph6_stream(sys.stdin))
    return list(read_graph6_stream(args.file))


def _emit(payload, args, single: bool):
    fmt = getattr(args, "format", "json")
    if fmt == "plain":
        def render(obj, indent=""):
            lines = []
            for key, value in obj.items():
                if isinstance(value, dict):
                    lines.append(f"{indent}{key}:")
                    lines.extend(render(value, indent + "  "))
                else:
                    lines.append(f"{indent}{key}: {value}")
            return lines

        items = payload if isinstance(payload, list) else [payload]
        out = []
        for item in items:
            out.extend(render(item))
        print("\n".join(out))
    else:
        data = payload[0] if (single and isinstance(payload, list)) else payload
        print(json.dumps(data, indent=2, sort_keys=True))


def _add_input_args(sub):
    sub.add_argument("graph6", nargs="?", help="graph6 string (or use --file/--edge-list)")
    sub.add_argument("--file", help="file of graph6 lines, '-' for stdin")
    sub.add_argument("--edge-list", help="file in 'n m' + 'u v' pairs format")
    sub.add_argument(
        "--format", choices=("json", "plain"), default="json", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toughgraph",
        description="Exact graph toughness, minimal-toughness certificates, "
        "minimally t-tough embeddings, and theorem sweeps.",
    )
    default_workers = int(os.environ.get("TOUGHGRAPH_WORKERS", "1"))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tau", help="exact toughness certificate")
    _add_input_args(p)

    p = sub.add_parser("minimal", help="minimally t-tough report")
    _add_input_args(p)
    p.add_argument("-t", required=True, help="toughness level as 'a/b' or integer 'a'")

    p = sub.add_parser("witness", help="witness set S(e) and k(e) for an edge")
    _add_input_args(p)
    p.add_argument("-e", required=True, help="edge as 'u,v'")

    p = sub.add_parser("embed", help="embed into a minimally t-tough host")
    _add_input_args(p)
    p.add_argument("-t", required=True, help="toughness level as 'a/b' or integer 'a'")
    p.add_argument(
        "--max-added",
        type=int,
        default=4,
        help="budget of added vertices for the alpha-critical search",
    )

    p = sub.add_parser("corpus", help="theorem-verification sweep")
    p.add_argument("--max-n", type=int, help="sweep the census up to this size (<= 7)")
    p.add_argument("--g6", help="additional graph6 file to sweep")
    p.add_argument("--checks", help="comma-separated check names (default: all)")
    p.add_argument("--workers", type=int, default=default_workers)
    p.add_argument("--skip-errors", action="store_true", help="log malformed graph6 lines instead of failing")
    p.add_argument(
        "--format", choices=("json", "csv", "plain"), default="json"
    )

    for name, help_text in [
        ("claw", "find an induced claw"),
        ("kappa", "vertex connectivity"),
        ("alpha", "independence number"),
        ("ham", "Hamiltonian cycle search"),
    ]:
        p = sub.add_parser(name, help=help_text)
        _add_input_args(p)
    return parser


def _cmd_tau(args) -> int:
    from .toughness import toughness_exact

    graphs = _load_graphs(args)
    payload = [toughness_exact(g).to_json_dict() for g in graphs]
    _emit(payload, args, single=args.graph6 is not None or args.edge_list is not None)
    return EXIT_OK


def _cmd_minimal(args) -> int:
    from .minimality import is_minimally_t_tough

    t = _parse_t(args.t)
    graphs = _load_graphs(args)
    payload = [is_minimally_t_tough(g, t).to_json_dict() for g in graphs]
    _emit(payload, args, single=args.graph6 is not None or args.edge_list is not None)
    return EXIT_OK


def _cmd_witness(args) -> int:
    from .minimality import witness_1tough

    try:
        u_text, _, v_text = args.e.partition(",")
        u, v = int(u_text), int(v_text)
    except ValueError as exc:
        raise _UsageError(f"cannot parse edge {args.e!r}: expected 'u,v'") from exc
    graphs = _load_graphs(args)
    payload = []
    for g in graphs:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise _UsageError(f"({u},{v}) is not an edge of the input graph")
        s = witness_1tough(g, (min(u, v), max(u, v)))
        payload.append({"e": [min(u, v), max(u, v)], "S": list(s), "k": len(s)})
    _emit(payload, args, single=args.graph6 is not None or args.edge_list is not None)
    return EXIT_OK


def _cmd_embed(args) -> int:
    from .embedding import embed_minimally_t_tough

    t = _parse_t(args.t)
    graphs = _load_graphs(args)
    payload = [
        embed_minimally_t_tough(g, t, max_added=args.max_added).to_json_dict()
        for g in graphs
    ]
    _emit(payload, args, single=args.graph6 is not None or args.edge_list is not None)
    return EXIT_OK


def _cmd_corpus(args) -> int:
    from .corpus import CENSUS_MAX_N, CHECKS, corpus_graphs, run_checks

    if args.max_n is None and args.g6 is None:
        raise _UsageError("corpus needs --max-n and/or --g6")
    if args.max_n is not None and not 1 <= args.max_n <= CENSUS_MAX_N:
        raise _UsageError(f"--max-n must be in 1..{CENSUS_MAX_N}")
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            raise _UsageError(f"unknown checks {unknown}; available: {sorted(CHECKS)}")
    graphs = corpus_graphs(
        max_n=args.max_n, graph6_path=args.g6, skip_errors=args.skip_errors
    )
    report = run_checks(graphs, checks=checks, workers=args.workers)
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
    elif args.format == "plain":
        _emit(report.to_json_dict(), args, single=True)
    else:
        print(report.to_json())
    if report.hard_falsifications:
        print(
            f"{len(report.hard_falsifications)} falsification(s) found",
            file=sys.stderr,
        )
        return EXIT_FALSIFIED
    return EXIT_OK


def _cmd_claw(args) -> int:
    graphs = _load_graphs(args)
    payload = []
    for g in graphs:
        claw = find_claw(g)
        payload.append(
            {
                "claw_free": claw is None,
                "witness": None
                if claw is None
                else {"center": claw[0], "leaves": list(claw[1])},
            }
        )
    _emit(payload, args, single=args.graph6 is not None or args.edge_list is not None)
    return EXIT_OK


def _cmd_kappa(args) -> int:
    graphs = _load_graphs(args)
    payload = [{"kappa": vertex_connectivity(g)} for g in graphs]
    _emit(payload, args, single=args.graph6 is not None or args.edge_list is not None)
    return EXIT_OK


def _cmd_alpha(args) -> int:
    graphs = _load_graphs(args)
    payload = []
    for g in graphs:
        alpha, witness = independence_number(g)
        payload.append({"alpha": alpha, "witness": list(witness)})
    _emit(payload, args, single=args.graph6 is not None or args.edge_list is not None)
    return EXIT_OK


def _cmd_ham(args) -> int:
    graphs = _load_graphs(args)
    payload = []
    for g in graphs:
        ham, cycle = is_hamiltonian(g)
        payload.append({"hamiltonian": ham, "cycle": list(cycle) if cycle else None})
    _emit(payload, args, single=args.graph6 is not None or args.edge_list is not None)
    return EXIT_OK


_COMMANDS = {
    "tau": _cmd_tau,
    "minimal": _cmd_minimal,
    "witness": _cmd_witness,
    "embed": _cmd_embed,
    "corpus": _cmd_corpus,
    "claw": _cmd_claw,
    "kappa": _cmd_kappa,
    "alpha": _cmd_alpha,
    "ham": _cmd_ham,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6Error, UnsupportedSizeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceBudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except FalsificationError as exc:
        print(f"FALSIFICATION: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
