"""Exact feasibility search for a target maximum switching cost D.

Depth-first backtracking over demand vectors in canonical order.  The branch
set at each vector is the distinct permutations of its multiset in
lexicographic order; a candidate is pruned as soon as its Hamming distance to
an already-assigned adjacent vector exceeds D.  Constraints are purely
pairwise over the adjacency graph, so prefix checking is exact.

Symmetry breaking: the first demand vector's assignment is fixed to its sorted
permutation.  Relabeling agents by a fixed permutation maps valid tables to
valid tables with identical pairwise costs, so every feasible instance has a
witness in this orbit.  A reported Infeasible therefore covers the whole
space, and a reported witness is the lexicographically least table under the
canonical orders within the reduced space.

The `threads` argument is accepted for interface stability but the search is
single-threaded: CPython threads cannot speed up this CPU-bound recursion, and
the output contract requires thread count to never change results.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .model import (
    AllocationTable,
    ProblemInstance,
    demand_to_multiset,
    enumerate_demand_vectors,
    max_switching_cost,
    neighbors,
    switching_cost,
    validate_table,
)


@dataclass
class SolveStats:
    nodes_expanded: int = 0
    max_depth: int = 0
    exhaustive: bool = False


@dataclass
class SolveOutcome:
    feasible: bool
    target: int  # the D that was asked for
    witness: AllocationTable | None
    stats: SolveStats

    @property
    def verdict(self) -> str:
        return "feasible" if self.feasible else "infeasible"


def distinct_permutations(items):
    """Distinct permutations of a sorted sequence, in lexicographic order."""
    counts = Counter(items)
    keys = sorted(counts)
    length = len(items)
    prefix = []

    def rec():
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for key in keys:
            if counts[key] > 0:
                counts[key] -= 1
                prefix.append(key)
                yield from rec()
                prefix.pop()
                counts[key] += 1

    yield from rec()


def feasible(instance: ProblemInstance, D: int, threads: int = 1) -> SolveOutcome:
    """Decide whether a table with maximum switching cost <= D exists."""
    if D < 0:
        raise ValueError("D must be non-negative")
    if threads < 1:
        raise ValueError("threads must be positive")
    instance.check_capacity()
    vectors = enumerate_demand_vectors(instance)
    rank = {v: i for i, v in enumerate(vectors)}

    # Earlier-ranked adjacent vectors: the ones already assigned when vector i
    # is reached during the canonical-order DFS.
    earlier = []
    for i, v in enumerate(vectors):
        earlier.append(
            sorted(rank[v2] for _, v2 in neighbors(instance, v) if rank[v2] < i)
        )

    candidates = [sorted(distinct_permutations(demand_to_multiset(v))) for v in vectors]
    # Symmetry breaking: fix the first vector to its sorted permutation.
    candidates[0] = candidates[0][:1]

    stats = SolveStats()
    assigned: list[tuple[int, ...] | None] = [None] * len(vectors)
    n = instance.n

    def search(depth: int) -> bool:
        if depth == len(vectors):
            return True
        stats.max_depth = max(stats.max_depth, depth + 1)
        prior = [assigned[j] for j in earlier[depth]]
        for cand in candidates[depth]:
            stats.nodes_expanded += 1
            ok = True
            for prev in prior:
                diff = 0
                for p in range(n):
                    if cand[p] != prev[p]:
                        diff += 1
                        if diff > D:
                            ok = False
                            break
                if not ok:
                    break
            if not ok:
                continue
            assigned[depth] = cand
            if search(depth + 1):
                return True
            assigned[depth] = None
        return False

    found = search(0)
    if found:
        witness = AllocationTable(instance, dict(zip(vectors, assigned)))
        return SolveOutcome(True, D, witness, stats)
    stats.exhaustive = True
    return SolveOutcome(False, D, None, stats)


def min_max_distortion(instance: ProblemInstance, threads: int = 1):
    """Smallest D for which the instance is feasible, with a witness table.

    Iterates D upward from 0; the ordered construction shows D = k-1 always
    suffices, so the loop terminates.
    """
    for D in range(instance.k):
        outcome = feasible(instance, D, threads=threads)
        if outcome.feasible:
            return D, outcome.witness
    raise AssertionError("unreachable: D = k-1 is always feasible")


def verify_witness(outcome: SolveOutcome) -> bool:
    """Re-check a feasible outcome using core-model operations only."""
    if not outcome.feasible or outcome.witness is None:
        return False
    table = outcome.witness
    if not validate_table(table).ok:
        return False
    if table.domain is None:
        expected = enumerate_demand_vectors(table.instance)
        if sorted(table.entries) != expected:
            return False
    return max_switching_cost(table).max_cost <= outcome.target
