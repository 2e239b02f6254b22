"""Core model: problem instances, demand vectors, assignments and allocation tables.

A demand vector is a length-k tuple of non-negative ints summing to n: entry i
is the number of agents task i requires.  An assignment is a length-n tuple of
task ids: entry a is the task agent a performs.  An allocation table maps every
demand vector of an instance to an assignment realising its counts, and its
quality is the maximum Hamming distance ("switching cost") over adjacent
demand-vector pairs.

Tasks and agents are 0-indexed internally; human-facing output adds 1.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

FULL = "full"
SUBSET = "subset"

# Guard rail: refuse instances whose demand-vector space cannot be held in memory.
MAX_DEMAND_VECTORS = 10_000_000


class CapacityError(Exception):
    """Instance exceeds the in-memory enumeration guard rail."""


class DomainError(Exception):
    """Demand vector outside a (partial) table's domain."""


@dataclass(frozen=True)
class ProblemInstance:
    """Parameters (n agents, k tasks) plus the demand-vector regime.

    The subset regime restricts demand vectors to 0/1 entries (size-n subsets
    of the k tasks); the full regime allows arbitrary multiplicities.
    """

    n: int
    k: int
    regime: str = FULL

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")
        if self.regime not in (FULL, SUBSET):
            raise ValueError(f"unknown regime {self.regime!r}")
        if self.regime == SUBSET and self.n > self.k:
            raise ValueError("subset regime requires n <= k")

    def num_demand_vectors(self) -> int:
        if self.regime == SUBSET:
            return math.comb(self.k, self.n)
        return math.comb(self.n + self.k - 1, self.k - 1)

    def check_capacity(self):
        count = self.num_demand_vectors()
        if count > MAX_DEMAND_VECTORS:
            raise CapacityError(
                f"instance has {count} demand vectors, over the "
                f"{MAX_DEMAND_VECTORS} guard rail"
            )


def _compositions(total, parts):
    # lexicographically ascending compositions of `total` into `parts` parts
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_demand_vectors(instance: ProblemInstance) -> list[tuple[int, ...]]:
    """All demand vectors of the instance, in lexicographic order of counts."""
    instance.check_capacity()
    if instance.regime == SUBSET:
        vectors = []
        for positions in combinations(range(instance.k), instance.n):
            v = [0] * instance.k
            for p in positions:
                v[p] = 1
            vectors.append(tuple(v))
        vectors.sort()
        return vectors
    return list(_compositions(instance.n, instance.k))


def is_valid_demand_vector(instance: ProblemInstance, v: tuple[int, ...]) -> bool:
    if len(v) != instance.k or any(c < 0 for c in v) or sum(v) != instance.n:
        return False
    if instance.regime == SUBSET and any(c > 1 for c in v):
        return False
    return True


@dataclass(frozen=True)
class AdjacencyWitness:
    """One unit of demand moved from task `source` to task `target`."""

    source: int
    target: int
    before: tuple[int, ...]
    after: tuple[int, ...]


def adjacency(v: tuple[int, ...], v2: tuple[int, ...]) -> AdjacencyWitness | None:
    """Witness (s, t) if v2 is v with one unit moved from s to t, else None."""
    if len(v) != len(v2):
        raise ValueError("demand vectors must have equal length")
    source = target = None
    for i, (a, b) in enumerate(zip(v, v2)):
        d = b - a
        if d == 0:
            continue
        if d == -1 and source is None:
            source = i
        elif d == 1 and target is None:
            target = i
        else:
            return None
    if source is None or target is None:
        return None
    return AdjacencyWitness(source, target, tuple(v), tuple(v2))


def neighbors(instance: ProblemInstance, v: tuple[int, ...]):
    """All regime vectors adjacent to v with their witnesses, ordered by (s, t)."""
    out = []
    for s in range(instance.k):
        if v[s] == 0:
            continue
        for t in range(instance.k):
            if t == s:
                continue
            if instance.regime == SUBSET and v[t] != 0:
                continue
            after = list(v)
            after[s] -= 1
            after[t] += 1
            after = tuple(after)
            out.append((AdjacencyWitness(s, t, tuple(v), after), after))
    return out


def switching_cost(a1: tuple[int, ...], a2: tuple[int, ...]) -> int:
    """Hamming distance between two equal-length assignments."""
    if len(a1) != len(a2):
        raise ValueError("assignments must have equal length")
    return sum(1 for x, y in zip(a1, a2) if x != y)


def symmetric_difference_size(m1, m2) -> int:
    """Size of the multiset symmetric difference of two element sequences."""
    c1, c2 = Counter(m1), Counter(m2)
    return sum(abs(c1[x] - c2[x]) for x in set(c1) | set(c2))


def demand_to_multiset(v: tuple[int, ...]) -> tuple[int, ...]:
    """Multiset view of a demand vector, as a sorted tuple of task ids."""
    out = []
    for task, count in enumerate(v):
        out.extend([task] * count)
    return tuple(out)


def multiset_to_demand(multiset, k: int) -> tuple[int, ...]:
    """Demand-vector view of a multiset of task ids in [0, k)."""
    v = [0] * k
    for task in multiset:
        if not 0 <= task < k:
            raise ValueError(f"task id {task} outside [0, {k})")
        v[task] += 1
    return tuple(v)


def assignment_counts(assignment: tuple[int, ...], k: int) -> tuple[int, ...]:
    v = [0] * k
    for task in assignment:
        v[task] += 1
    return tuple(v)


@dataclass
class AllocationTable:
    """Map from demand vectors to assignments for a fixed instance.

    `entries` is keyed by demand vector.  A table is total over its instance's
    regime unless `domain` is set, in which case it is a partial table over
    exactly those vectors (used by the group construction over S_i).
    """

    instance: ProblemInstance
    entries: dict[tuple[int, ...], tuple[int, ...]]
    domain: tuple[tuple[int, ...], ...] | None = None

    def expected_domain(self) -> list[tuple[int, ...]]:
        if self.domain is not None:
            return sorted(self.domain)
        return enumerate_demand_vectors(self.instance)

    def assignment_for(self, v: tuple[int, ...]) -> tuple[int, ...]:
        try:
            return self.entries[tuple(v)]
        except KeyError:
            raise DomainError(f"demand vector {v} not in table domain") from None


@dataclass
class ValidationReport:
    ok: bool
    missing: list = field(default_factory=list)
    unexpected: list = field(default_factory=list)
    bad_entries: list = field(default_factory=list)  # (vector, assignment, reason)


def validate_table(table: AllocationTable) -> ValidationReport:
    """Check totality and per-entry demand satisfaction; violations are data."""
    expected = table.expected_domain()
    expected_set = set(expected)
    report = ValidationReport(ok=True)
    report.missing = [v for v in expected if v not in table.entries]
    report.unexpected = sorted(v for v in table.entries if v not in expected_set)
    for v, a in sorted(table.entries.items()):
        if len(a) != table.instance.n:
            report.bad_entries.append((v, a, "assignment length != n"))
            continue
        if not all(0 <= t < table.instance.k for t in a):
            report.bad_entries.append((v, a, "task id out of range"))
            continue
        if assignment_counts(a, table.instance.k) != v:
            report.bad_entries.append((v, a, "agent counts do not match demand"))
    report.ok = not (report.missing or report.unexpected or report.bad_entries)
    return report


@dataclass
class DistortionReport:
    """Maximum switching cost over adjacent pairs, with one attaining witness."""

    max_cost: int
    witness: AdjacencyWitness | None = None
    moved_agents: tuple[int, ...] = ()


def iter_adjacent_entry_pairs(table: AllocationTable):
    """Unordered adjacent pairs (witness, v, v2) with both endpoints in the table."""
    for v in table.entries:
        for witness, v2 in neighbors(table.instance, v):
            if v2 in table.entries and v < v2:
                yield witness, v, v2


def max_switching_cost(table: AllocationTable) -> DistortionReport:
    report = validate_table(table)
    if not report.ok:
        raise ValueError(f"invalid table: {report}")
    best = DistortionReport(max_cost=0)
    for witness, v, v2 in iter_adjacent_entry_pairs(table):
        a1, a2 = table.entries[v], table.entries[v2]
        moved = tuple(i for i in range(len(a1)) if a1[i] != a2[i])
        if len(moved) > best.max_cost:
            best = DistortionReport(len(moved), witness, moved)
    return best


def restrict_tasks(table: AllocationTable, k2: int) -> AllocationTable:
    """Restrict a table to demand vectors supported on the first k2 tasks.

    The restriction preserves switching costs pairwise, so its maximum
    switching cost never exceeds the original's.
    """
    inst = table.instance
    if not 1 <= k2 < inst.k:
        raise ValueError("k2 must satisfy 1 <= k2 < k")
    new_inst = ProblemInstance(inst.n, k2, inst.regime)
    entries = {}
    for v, a in table.entries.items():
        if all(c == 0 for c in v[k2:]):
            entries[v[:k2]] = a
    new_domain = None
    if table.domain is not None:
        new_domain = tuple(
            v[:k2] for v in table.domain if all(c == 0 for c in v[k2:])
        )
    return AllocationTable(new_inst, entries, new_domain)
