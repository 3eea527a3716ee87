"""Command-line entry point.

Exit status: 0 for success / yes, 1 for no / inconclusive, 2 for usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import kernel, minimize, predicates, reduction, solvers
from .errors import BudgetExceeded, GraphFormatError, NotAnAllianceError, PreconditionError
from .graph import FAMILIES, Graph, generate, parse_graph, serialize_graph

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2

PREDICATES = {
    "alliance": predicates.is_defensive_alliance,
    "strong": predicates.is_strong_defensive_alliance,
    "lmda": predicates.is_locally_minimal,
    "clmda": predicates.is_connected_locally_minimal,
    "gmda": predicates.is_globally_minimal,
}


class UsageError(Exception):
    pass


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def _parse_ids(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"vertex set must be whitespace-separated integers, got {text!r}") from None


def _emit(args: argparse.Namespace, record: dict, human: str) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(human)


def _fmt(vs) -> str:
    return "{" + ", ".join(map(str, sorted(vs))) + "}"


def _load(args: argparse.Namespace) -> tuple[Graph, str]:
    if args.graph is None:
        raise UsageError("--graph is required")
    text = _read_text(args.graph)
    return parse_graph(text), text


def _require_k(args: argparse.Namespace) -> int:
    if args.k is None:
        raise UsageError("--k is required")
    return args.k


def cmd_verify(args: argparse.Namespace) -> int:
    g, _ = _load(args)
    if args.set is None:
        raise UsageError("--set is required")
    d = g.vertex_set(_parse_ids(args.set))
    record: dict = {"command": "verify", "predicate": args.predicate, "set": sorted(d)}
    if args.predicate == "crucial":
        crucial = predicates.crucial_set(g, d)
        record["crucial"] = sorted(crucial)
        _emit(args, record, f"crucial vertices: {_fmt(crucial)}")
        return EXIT_YES
    holds = PREDICATES[args.predicate](g, d)
    record["result"] = holds
    if d:
        record["report"] = predicates.protection_report(g, d).to_dict()
    _emit(args, record, f"{args.predicate}({_fmt(d)}) = {str(holds).lower()}")
    return EXIT_YES if holds else EXIT_NO


def cmd_minimize(args: argparse.Namespace) -> int:
    g, _ = _load(args)
    d = g.vertex_set(_parse_ids(args.set)) if args.set is not None else frozenset(g.vertices)
    mode = args.mode or ("algorithm2" if args.pivot is not None else "algorithm1")
    record: dict = {"command": "minimize", "mode": mode, "input": sorted(d)}
    if mode == "peel":
        result = minimize.peel_to_alliance(g, d)
        record["result"] = sorted(result)
        _emit(args, record, f"largest alliance inside: {_fmt(result)}")
        return EXIT_YES if result else EXIT_NO
    if mode == "algorithm2":
        if args.pivot is None:
            raise UsageError("algorithm2 needs --pivot")
        result, trace = minimize.algorithm2(g, d, args.pivot, args.order)
    else:
        result, trace = minimize.algorithm1(g, d, args.order)
    record["result"] = sorted(result)
    record["trace"] = trace.to_dict()
    human = trace.to_text() + f"result {_fmt(result)} (size {len(result)})"
    _emit(args, record, human)
    return EXIT_YES


def cmd_kernelize(args: argparse.Namespace) -> int:
    g, _ = _load(args)
    k = _require_k(args)
    thresholds = {args.graph_class: args.threshold} if args.threshold is not None else None
    outcome = kernel.kernelize(g, k, args.graph_class, thresholds)
    record = {"command": "kernelize", "k": k, "class": args.graph_class, **outcome.to_dict()}
    if isinstance(outcome, kernel.VerifiedYes):
        human = f"YES via {outcome.rule} rule: witness {_fmt(outcome.witness)} (size {len(outcome.witness)})"
        _emit(args, record, human)
        return EXIT_YES
    if isinstance(outcome, kernel.Reduced):
        c = outcome.certificate
        human = (
            f"REDUCED: diameter {c.diameter} < {c.diameter_threshold}, "
            f"max degree {c.max_degree} < {c.threshold_used}; {c.size_bound}"
        )
    else:
        human = f"INCONCLUSIVE ({outcome.rule}): {outcome.report}"
    _emit(args, record, human)
    return EXIT_NO


def cmd_solve(args: argparse.Namespace) -> int:
    g, text = _load(args)
    mode = args.mode
    if mode == "exact":
        result = solvers.exact_max_lmda(g, args.size_limit)
    elif mode == "exact-connected":
        result = solvers.exact_max_connected_lmda(g, args.size_limit)
    elif mode == "fpt":
        result = solvers.fpt_connected_lmda(g, _require_k(args), args.budget)
    else:
        forced = _parse_ids(args.set) if args.set is not None else reduction.parse_forced(text)
        if forced is None:
            raise UsageError("extension mode needs --set or a '# forced:' block in the graph file")
        result = solvers.exact_extension(g, forced, args.size_limit)

    decision = result.decision
    if mode in ("exact", "exact-connected") and args.k is not None:
        decision = result.optimum >= args.k
    record = {"command": "solve", "mode": mode, "k": args.k, **result.to_dict(timing=args.timing)}
    record["decision"] = "yes" if decision else "no"
    parts = [f"decision: {record['decision']}"]
    if result.optimum is not None:
        parts.append(f"optimum: {result.optimum}")
    if result.witness is not None:
        parts.append(f"witness: {_fmt(result.witness)}")
    _emit(args, record, "; ".join(parts))
    return EXIT_YES if decision else EXIT_NO


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        params = [float(p) if "." in p else int(p) for p in args.params]
    except ValueError:
        raise UsageError(f"generator parameters must be numbers, got {args.params}") from None
    g = generate(args.family, params, args.seed)
    if args.json:
        print(json.dumps({"command": "gen", "n": g.n, "edges": [list(e) for e in g.edges()]}, sort_keys=True))
    else:
        sys.stdout.write(serialize_graph(g))
    return EXIT_YES


def cmd_reduce(args: argparse.Namespace) -> int:
    g, _ = _load(args)
    k = _require_k(args)
    if not args.verify:
        instance = reduction.clique_to_extension(g, k)
        if args.json:
            record = {
                "command": "reduce",
                "n": instance.graph.n,
                "edges": [list(e) for e in instance.graph.edges()],
                "hubs": list(instance.hubs),
                "forced": sorted(instance.forced),
            }
            print(json.dumps(record, sort_keys=True))
        else:
            sys.stdout.write(instance.serialize())
        return EXIT_YES
    trip = reduction.round_trip(g, k, args.size_limit)
    record = {
        "command": "reduce",
        "k": k,
        "has_clique": trip.has_clique,
        "extension": trip.extension.to_dict(timing=args.timing),
        "agrees": trip.agrees,
    }
    human = (
        f"k-clique: {'yes' if trip.has_clique else 'no'}; "
        f"extension: {'yes' if trip.extension.decision else 'no'}; "
        f"{'agree' if trip.agrees else 'DISAGREE'}"
    )
    _emit(args, record, human)
    return EXIT_YES if trip.agrees else EXIT_NO


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="edge-list file, or '-' for stdin")
    common.add_argument("--json", action="store_true", help="emit one JSON record")
    common.add_argument("--k", type=int)

    parser = _Parser(prog="defalliance", description="Defensive alliance toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="evaluate a predicate on a vertex set")
    p.add_argument("--predicate", choices=[*PREDICATES, "crucial"], default="lmda")
    p.add_argument("--set", help='vertex ids, e.g. "1 2 4"')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("minimize", parents=[common], help="run a greedy minimizer")
    p.add_argument("--set", help="starting alliance (default: all vertices)")
    p.add_argument("--pivot", type=int)
    p.add_argument("--mode", choices=["algorithm1", "algorithm2", "peel"])
    p.add_argument("--order", default="asc", help="asc, desc or seed:N")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("kernelize", parents=[common], help="apply kernel rules")
    p.add_argument("--class", dest="graph_class", choices=kernel.GRAPH_CLASSES, default="general")
    p.add_argument("--threshold", type=int, help="override the degree threshold for the class")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("solve", parents=[common], help="exact or FPT search")
    p.add_argument("--mode", choices=["exact", "exact-connected", "fpt", "extension"], default="exact")
    p.add_argument("--set", help="forced set for extension mode")
    p.add_argument("--budget", type=int, default=solvers.DEFAULT_BUDGET)
    p.add_argument("--size-limit", type=int, default=solvers.DEFAULT_SIZE_LIMIT)
    p.add_argument("--timing", action="store_true", help="include elapsed time in JSON output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", parents=[common], help="build the clique reduction instance")
    p.add_argument("--verify", action="store_true", help="round-trip against exhaustive search")
    p.add_argument("--size-limit", type=int, default=solvers.DEFAULT_SIZE_LIMIT)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, PreconditionError, NotAnAllianceError, BudgetExceeded, OSError) as exc:
        print(f"defalliance {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
