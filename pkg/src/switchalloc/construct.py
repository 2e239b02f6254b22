"""Explicit allocation-table generators.

Two constructions: the ordered-ID table (max switching cost at most k-1) and
the group-based partial table over S_i (cost exactly 2 for moves between
non-special tasks).
"""
from __future__ import annotations

from dataclasses import dataclass

from .model import (
    FULL,
    AllocationTable,
    ProblemInstance,
    enumerate_demand_vectors,
)


def ordered_construction(instance: ProblemInstance) -> AllocationTable:
    """Table where agents populate tasks 1..k in order of increasing agent id.

    Agent a (0-indexed) serves the task j whose prefix demand first reaches
    a+1, so the assignment for v is just task 0 repeated v[0] times, then task
    1 repeated v[1] times, and so on.  Moving one unit of demand from task i
    to task j shifts at most one agent per task between i and j, so every
    adjacent pair costs at most |i - j| and the maximum cost is at most k-1.
    """
    entries = {}
    for v in enumerate_demand_vectors(instance):
        assignment = []
        for task, count in enumerate(v):
            assignment.extend([task] * count)
        entries[v] = tuple(assignment)
    return AllocationTable(instance, entries)


@dataclass(frozen=True)
class GroupScheme:
    """Partition of agents into one group per non-special task."""

    special_task: int
    groups: dict  # task id -> tuple of agent ids, each of size n // (k-1)


def group_scheme(instance: ProblemInstance, special_task: int) -> GroupScheme:
    n, k = instance.n, instance.k
    if not 0 <= special_task < k:
        raise ValueError(f"special task {special_task} outside [0, {k})")
    if k < 2 or n % (k - 1) != 0:
        raise ValueError(f"k-1={k - 1} must divide n={n}")
    size = n // (k - 1)
    groups = {}
    agent = 0
    for task in range(k):
        if task == special_task:
            continue
        groups[task] = tuple(range(agent, agent + size))
        agent += size
    return GroupScheme(special_task, groups)


def group_domain(instance: ProblemInstance, special_task: int) -> list[tuple[int, ...]]:
    """S_i: demand vectors where every task except i has demand <= n/(k-1)."""
    cap = instance.n // (instance.k - 1)
    return [
        v
        for v in enumerate_demand_vectors(instance)
        if all(c <= cap for task, c in enumerate(v) if task != special_task)
    ]


def group_construction(instance: ProblemInstance, special_task: int) -> AllocationTable:
    """Partial table over S_i from the group scheme.

    Each non-special task is served by the smallest-id agents of its group;
    all agents not used by their group go to the special task.
    """
    if instance.regime != FULL:
        raise ValueError("group construction is defined on the full regime")
    scheme = group_scheme(instance, special_task)
    domain = group_domain(instance, special_task)
    entries = {}
    for v in domain:
        assignment = [special_task] * instance.n
        for task, agents in scheme.groups.items():
            for agent in agents[: v[task]]:
                assignment[agent] = task
        entries[v] = tuple(assignment)
    return AllocationTable(instance, entries, domain=tuple(domain))
