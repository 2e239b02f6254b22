"""Command-line front end for batch runs.

Exit codes: 0 success (including a Feasible verdict); 1 proven Infeasible or a
property violation found by verify/check-lemma; 2 usage error; 3 capacity or
domain error.  Machine format (--format machine) prints the module documents
as JSON; human format prints the same content readably.  Output never depends
on --threads or on anything but the flags and seed.
"""
from __future__ import annotations

import argparse
import json
import sys

from .construct import group_construction, ordered_construction
from .model import (
    FULL,
    SUBSET,
    CapacityError,
    DomainError,
    ProblemInstance,
    enumerate_demand_vectors,
    max_switching_cost,
)
from .simulate import TraceError, random_walk, records_to_csv, save_trace, walk_stats
from .solver import feasible, min_max_distortion
from .structure import check_local_lemma, check_table_lemma, classify_task
from .tableio import TableFormatError, load_table, save_table, table_to_doc

EXIT_OK = 0
EXIT_NEGATIVE = 1  # Infeasible proven, or a violation found
EXIT_USAGE = 2
EXIT_CAPACITY = 3

TABLE_LEMMAS = ("dest2", "sw1", "tech", "ss", "one2", "all2int", "ind")
LOCAL_LEMMAS = ("fix", "exists3", "fix2", "pair", "spec")


def _emit(doc: dict, fmt: str, human_lines) -> None:
    if fmt == "machine":
        json.dump(doc, sys.stdout, indent=1)
        sys.stdout.write("\n")
    else:
        for line in human_lines:
            print(line)


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int vector: {text!r}")


def _add_instance_flags(parser):
    parser.add_argument("--n", type=int, required=True, help="number of agents")
    parser.add_argument("--k", type=int, required=True, help="number of tasks")
    parser.add_argument(
        "--regime", choices=(FULL, SUBSET), default=FULL, help="demand-vector regime"
    )


def _add_format_flag(parser):
    parser.add_argument("--format", choices=("human", "machine"), default="human")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="switchalloc",
        description="Exact tools for allocation tables with bounded switching cost.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("enumerate", help="list the demand vectors of an instance")
    _add_instance_flags(p)
    _add_format_flag(p)

    p = sub.add_parser("construct", help="build an explicit allocation table")
    _add_instance_flags(p)
    p.add_argument("--construction", choices=("ordered", "group"), default="ordered")
    p.add_argument(
        "--special-task", type=int, default=0, help="special task of the group scheme"
    )
    p.add_argument("--output", help="write the table file here")
    _add_format_flag(p)

    p = sub.add_parser("solve", help="decide feasibility of a max switching cost")
    _add_instance_flags(p)
    p.add_argument("--max-cost", type=int, required=True, help="target cost bound D")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--output", help="write the witness table here when feasible")
    _add_format_flag(p)

    p = sub.add_parser("min-distortion", help="smallest feasible max switching cost")
    _add_instance_flags(p)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--output", help="write the optimal witness table here")
    _add_format_flag(p)

    p = sub.add_parser("verify", help="validate a table file and bound its cost")
    p.add_argument("--table", required=True, help="table file to check")
    p.add_argument("--max-cost", type=int, help="required bound on the max cost")
    _add_format_flag(p)

    p = sub.add_parser("analyze", help="cost profile and task typing of a table")
    p.add_argument("--table", required=True, help="table file to analyze")
    _add_format_flag(p)

    p = sub.add_parser("check-lemma", help="run a structural-lemma oracle")
    p.add_argument(
        "--lemma", required=True, choices=LOCAL_LEMMAS + TABLE_LEMMAS
    )
    p.add_argument("--table", help="table file (table lemmas)")
    p.add_argument("--n", type=int, help="number of agents (local-family lemmas)")
    p.add_argument("--k", type=int, help="number of tasks (local-family lemmas)")
    _add_format_flag(p)

    p = sub.add_parser("simulate", help="seeded random walk over a table")
    p.add_argument("--table", required=True, help="table file to walk")
    p.add_argument("--start", type=_parse_vector, help="start vector, e.g. 1,1,1,3")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="write the trace file here")
    p.add_argument("--csv", help="write per-step records as CSV here")
    _add_format_flag(p)

    return parser


def _cmd_enumerate(args) -> int:
    instance = ProblemInstance(args.n, args.k, args.regime)
    vectors = enumerate_demand_vectors(instance)
    doc = {
        "n": args.n,
        "k": args.k,
        "regime": args.regime,
        "count": len(vectors),
        "vectors": [list(v) for v in vectors],
    }
    _emit(
        doc,
        args.format,
        [f"{len(vectors)} demand vectors"] + [" ".join(map(str, v)) for v in vectors],
    )
    return EXIT_OK


def _cmd_construct(args) -> int:
    instance = ProblemInstance(args.n, args.k, args.regime)
    if args.construction == "ordered":
        table = ordered_construction(instance)
    else:
        table = group_construction(instance, args.special_task)
    cost = max_switching_cost(table).max_cost
    if args.output:
        save_table(table, args.output)
    doc = {"max_cost": cost, "table": table_to_doc(table)}
    _emit(
        doc,
        args.format,
        [
            f"{args.construction} construction: {len(table.entries)} entries, "
            f"max switching cost {cost}"
        ],
    )
    return EXIT_OK


def _cmd_solve(args) -> int:
    instance = ProblemInstance(args.n, args.k, args.regime)
    outcome = feasible(instance, args.max_cost, threads=args.threads)
    doc = {
        "verdict": outcome.verdict,
        "max_cost": outcome.target,
        "stats": {
            "nodes_expanded": outcome.stats.nodes_expanded,
            "max_depth": outcome.stats.max_depth,
            "exhaustive": outcome.stats.exhaustive,
        },
        "witness": table_to_doc(outcome.witness) if outcome.feasible else None,
    }
    if outcome.feasible and args.output:
        save_table(outcome.witness, args.output)
    _emit(
        doc,
        args.format,
        [
            f"{outcome.verdict} at max cost {outcome.target} "
            f"({outcome.stats.nodes_expanded} nodes"
            + (", exhaustive)" if outcome.stats.exhaustive else ")")
        ],
    )
    return EXIT_OK if outcome.feasible else EXIT_NEGATIVE


def _cmd_min_distortion(args) -> int:
    instance = ProblemInstance(args.n, args.k, args.regime)
    D, witness = min_max_distortion(instance, threads=args.threads)
    if args.output:
        save_table(witness, args.output)
    doc = {"min_max_cost": D, "witness": table_to_doc(witness)}
    _emit(doc, args.format, [str(D)])
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        table = load_table(args.table)
    except TableFormatError as exc:
        _emit(
            {"ok": False, "error": str(exc)},
            args.format,
            [f"violation: {exc}"],
        )
        return EXIT_NEGATIVE
    cost = max_switching_cost(table).max_cost
    ok = args.max_cost is None or cost <= args.max_cost
    doc = {"ok": ok, "max_cost": cost, "bound": args.max_cost}
    lines = [f"valid table, max switching cost {cost}"]
    if not ok:
        lines.append(f"violation: cost {cost} exceeds bound {args.max_cost}")
    _emit(doc, args.format, lines)
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_analyze(args) -> int:
    try:
        table = load_table(args.table)
    except TableFormatError as exc:
        _emit({"ok": False, "error": str(exc)}, args.format, [f"violation: {exc}"])
        return EXIT_NEGATIVE
    report = max_switching_cost(table)
    doc = {
        "entries": len(table.entries),
        "max_cost": report.max_cost,
        "partial": table.domain is not None,
    }
    lines = [
        f"{len(table.entries)} entries, max switching cost {report.max_cost}"
    ]
    if report.max_cost <= 2:
        types = {}
        for v in sorted(table.entries):
            for task in range(table.instance.k):
                kind = classify_task(table, v, task).kind
                types[kind.value] = types.get(kind.value, 0) + 1
        doc["task_types"] = types
        lines.append(
            "task types: "
            + ", ".join(f"{name}={count}" for name, count in sorted(types.items()))
        )
    _emit(doc, args.format, lines)
    return EXIT_OK


def _cmd_check_lemma(args) -> int:
    if args.lemma in TABLE_LEMMAS:
        if not args.table:
            raise UsageError(f"lemma {args.lemma!r} requires --table")
        try:
            table = load_table(args.table)
        except TableFormatError as exc:
            _emit({"ok": False, "error": str(exc)}, args.format, [f"violation: {exc}"])
            return EXIT_NEGATIVE
        report = check_table_lemma(table, args.lemma)
    else:
        if args.n is None or args.k is None:
            raise UsageError(f"lemma {args.lemma!r} requires --n and --k")
        report = check_local_lemma(args.lemma, args.n, args.k)
    doc = report.to_doc()
    lines = [
        f"lemma {report.lemma}: {report.instances} instances, "
        f"{report.non_vacuous_passes} non-vacuous passes, "
        f"{report.vacuous} vacuous, {len(report.failures)} failures"
    ]
    lines.extend(f"failure: {witness}" for witness in doc["failures"])
    _emit(doc, args.format, lines)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _cmd_simulate(args) -> int:
    try:
        table = load_table(args.table)
    except TableFormatError as exc:
        _emit({"ok": False, "error": str(exc)}, args.format, [f"violation: {exc}"])
        return EXIT_NEGATIVE
    start = args.start if args.start is not None else min(table.entries)
    trace, records = random_walk(table, start, args.steps, args.seed)
    if args.output:
        save_trace(trace, args.output)
    if args.csv:
        records_to_csv(records, args.csv)
    stats = walk_stats(records)
    doc = {
        "start": list(trace.start),
        "seed": trace.seed,
        "moves": [list(m) for m in trace.moves],
        "stats": {k: v for k, v in stats.items() if k != "histogram"}
        | {"histogram": {str(c): count for c, count in stats["histogram"].items()}},
    }
    _emit(
        doc,
        args.format,
        [
            f"{stats['steps']} steps from {' '.join(map(str, start))} "
            f"(seed {trace.seed}): max cost {stats['max']}, "
            f"mean {stats['mean']:.3f}"
        ],
    )
    return EXIT_OK


class UsageError(Exception):
    pass


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "construct": _cmd_construct,
    "solve": _cmd_solve,
    "min-distortion": _cmd_min_distortion,
    "verify": _cmd_verify,
    "analyze": _cmd_analyze,
    "check-lemma": _cmd_check_lemma,
    "simulate": _cmd_simulate,
}


def dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.subcommand](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapacityError, DomainError, TraceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
