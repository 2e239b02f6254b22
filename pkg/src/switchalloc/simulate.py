"""Replay of demand-change walks against an allocation table.

A trace is a start vector plus a list of (source, target) unit moves; running
it against a table records per-step switching cost and the agents that moved.
Random walks use Python's `random.Random` (Mersenne Twister), which is fully
specified and seed-deterministic across platforms, so a (table, start, steps,
seed) quadruple always reproduces the same trace.
"""
from __future__ import annotations

import csv
import json
import random
from dataclasses import dataclass

from .model import AllocationTable, DomainError, ProblemInstance, SUBSET


class TraceError(Exception):
    """Trace move not applicable at some step."""


@dataclass(frozen=True)
class Trace:
    start: tuple[int, ...]
    moves: tuple[tuple[int, int], ...]
    seed: int | None = None


@dataclass(frozen=True)
class StepRecord:
    step: int
    before: tuple[int, ...]
    after: tuple[int, ...]
    cost: int
    moved: tuple[tuple[int, int, int], ...]  # (agent, from task, to task)


def _apply_move(instance: ProblemInstance, v, s, t, step):
    if not (0 <= s < instance.k and 0 <= t < instance.k) or s == t:
        raise TraceError(f"step {step}: invalid move ({s}, {t})")
    if v[s] == 0:
        raise TraceError(f"step {step}: task {s} has no demand to move")
    if instance.regime == SUBSET and v[t] != 0:
        raise TraceError(f"step {step}: task {t} already demanded in subset regime")
    out = list(v)
    out[s] -= 1
    out[t] += 1
    return tuple(out)


def run_trace(table: AllocationTable, trace: Trace) -> list[StepRecord]:
    """One record per move; costs computed from the table only."""
    v = tuple(trace.start)
    current = table.assignment_for(v)  # raises DomainError outside the domain
    records = []
    for step, (s, t) in enumerate(trace.moves):
        after = _apply_move(table.instance, v, s, t, step)
        next_assignment = table.assignment_for(after)
        moved = tuple(
            (agent, current[agent], next_assignment[agent])
            for agent in range(table.instance.n)
            if current[agent] != next_assignment[agent]
        )
        records.append(StepRecord(step, v, after, len(moved), moved))
        v, current = after, next_assignment
    return records


def applicable_moves(table: AllocationTable, v) -> list[tuple[int, int]]:
    """Ordered (s, t) pairs whose result stays inside the table's domain."""
    out = []
    k = table.instance.k
    for s in range(k):
        if v[s] == 0:
            continue
        for t in range(k):
            if t == s:
                continue
            if table.instance.regime == SUBSET and v[t] != 0:
                continue
            after = list(v)
            after[s] -= 1
            after[t] += 1
            if tuple(after) in table.entries:
                out.append((s, t))
    return out


def random_walk(table: AllocationTable, start, steps: int, seed: int):
    """Uniform random applicable moves; identical seed, identical trace."""
    v = tuple(start)
    if v not in table.entries:
        raise DomainError(f"start vector {v} not in table domain")
    rng = random.Random(seed)
    moves = []
    for step in range(steps):
        options = applicable_moves(table, v)
        if not options:
            raise TraceError(f"step {step}: no applicable moves from {v}")
        s, t = rng.choice(options)
        moves.append((s, t))
        after = list(v)
        after[s] -= 1
        after[t] += 1
        v = tuple(after)
    trace = Trace(tuple(start), tuple(moves), seed=seed)
    return trace, run_trace(table, trace)


def walk_stats(records) -> dict:
    """Exact max/mean/histogram of per-step cost."""
    costs = [r.cost for r in records]
    histogram = {}
    for c in costs:
        histogram[c] = histogram.get(c, 0) + 1
    return {
        "steps": len(costs),
        "max": max(costs) if costs else 0,
        "mean": sum(costs) / len(costs) if costs else 0.0,
        "histogram": dict(sorted(histogram.items())),
    }


def save_trace(trace: Trace, path):
    doc = {"start": list(trace.start), "moves": [list(m) for m in trace.moves]}
    if trace.seed is not None:
        doc["seed"] = trace.seed
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_trace(path) -> Trace:
    with open(path) as fh:
        doc = json.load(fh)
    return Trace(
        tuple(doc["start"]),
        tuple((int(s), int(t)) for s, t in doc["moves"]),
        seed=doc.get("seed"),
    )


def records_to_csv(records, path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["step", "source", "target", "cost", "moved_agents"])
        for r in records:
            s, t = _move_of(r)
            writer.writerow(
                [r.step, s, t, r.cost, " ".join(str(a) for a, _, _ in r.moved)]
            )


def _move_of(record: StepRecord):
    for i, (b, a) in enumerate(zip(record.before, record.after)):
        if a == b - 1:
            s = i
        elif a == b + 1:
            t = i
    return s, t
