"""Structural analysis of low-cost allocation tables.

Two families of tools live here.

Subset-regime local families: for an anchor set R of characters (task ids),
the assignments of all sets S with R < S and |S| = |R|+1 form a local family.
Freezing (every member places a character at one fixed index) and
semi-freezing (one fixed index per character plus a shared wildcard index)
are the structures a maximum distortion of 2 or 3 forces on such families.
`enumerate_local_families` and `check_local_lemma` brute-force these
properties over every family whose members are pairwise within a Hamming
distance bound, providing independent oracles for the structural lemmas.

Full-regime task typing: on a table with maximum switching cost at most 2,
every unit move into a task costs 1 (type 1) or costs 2 through a common
intermediate task and intermediate agent (type 2).  `classify_task` performs
that classification and `check_table_lemma` checks the consequences on a
concrete table.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations

from .model import (
    AllocationTable,
    CapacityError,
    max_switching_cost,
    switching_cost,
)

FAMILY_SCAN_LIMIT = 10_000_000


@dataclass(frozen=True)
class LocalFamily:
    """Assignments for every extension of an anchor set by one character.

    `members` pairs each set S (sorted tuple of characters) with a permutation
    of S, ordered by S.
    """

    anchor: frozenset
    members: tuple  # ((sorted char tuple), assignment tuple), ...

    def assignments(self):
        return [a for _, a in self.members]


def extensions(R, k: int) -> list[tuple[int, ...]]:
    """All supersets of R inside [k] with one extra element, sorted."""
    R = frozenset(R)
    if not all(0 <= c < k for c in R):
        raise ValueError("anchor characters must lie in [0, k)")
    return [tuple(sorted(R | {e})) for e in range(k) if e not in R]


def make_family(anchor, members: dict) -> LocalFamily:
    anchor = frozenset(anchor)
    ordered = []
    for S, a in sorted(members.items()):
        S = tuple(sorted(S))
        if not anchor < set(S) or len(S) != len(anchor) + 1:
            raise ValueError(f"member {S} is not a one-character extension of the anchor")
        if tuple(sorted(a)) != S:
            raise ValueError(f"assignment {a} is not a permutation of {S}")
        ordered.append((S, tuple(a)))
    return LocalFamily(anchor, tuple(ordered))


def family_from_table(table: AllocationTable, anchor) -> LocalFamily:
    """Extract the local family over an anchor from a subset-regime table."""
    anchor = frozenset(anchor)
    members = {}
    for v, a in table.entries.items():
        support = frozenset(t for t, c in enumerate(v) if c)
        if anchor < support and len(support) == len(anchor) + 1:
            members[tuple(sorted(support))] = a
    return make_family(anchor, members)


def _positions(family: LocalFamily, char) -> set:
    pos = set()
    for _, a in family.members:
        if char in a:
            pos.add(a.index(char))
    return pos


@dataclass
class FreezeReport:
    """Maximal frozen subset of the anchor with its freezing map."""

    frozen: dict  # char -> index

    @property
    def frozen_set(self):
        return frozenset(self.frozen)


def detect_freezing(family: LocalFamily) -> FreezeReport:
    """Anchored characters that occupy one fixed index in every member."""
    frozen = {}
    for char in sorted(family.anchor):
        pos = _positions(family, char)
        if len(pos) == 1:
            frozen[char] = pos.pop()
    return FreezeReport(frozen)


@dataclass
class SemiFreezeReport:
    semi_map: dict  # char -> home index
    wildcard: int


def _semi_freeze_for_wildcard(family: LocalFamily, w: int, n: int):
    """All valid home maps for wildcard index w, lexicographically ordered."""
    chars = sorted(family.anchor)
    forced = {}
    free = []
    for char in chars:
        pos = _positions(family, char) - {w}
        if len(pos) > 1:
            return
        if pos:
            forced[char] = pos.pop()
        else:
            free.append(char)
    used = set(forced.values())
    if w in used or len(used) != len(forced):
        return
    open_indices = [i for i in range(n) if i != w and i not in used]

    def complete(i, remaining):
        if i == len(free):
            yield dict(forced)
            return
        for idx in sorted(remaining):
            forced[free[i]] = idx
            yield from complete(i + 1, remaining - {idx})
        del forced[free[i]]

    yield from complete(0, set(open_indices))


def semi_freeze_witnesses(family: LocalFamily) -> list[SemiFreezeReport]:
    """Every (home map, wildcard) pair satisfying the semi-freeze property."""
    n = len(family.anchor) + 1
    out = []
    for w in range(n):
        for h in _semi_freeze_for_wildcard(family, w, n):
            out.append(SemiFreezeReport(dict(h), w))
    return out


def detect_semi_freeze(family: LocalFamily) -> SemiFreezeReport | None:
    """Canonical semi-freeze witness: smallest wildcard, then least home map."""
    n = len(family.anchor) + 1
    for w in range(n):
        for h in _semi_freeze_for_wildcard(family, w, n):
            return SemiFreezeReport(dict(h), w)
    return None


class Config(Enum):
    CONFIG1 = "config1"
    CONFIG2 = "config2"
    BOTH = "both"
    NEITHER = "neither"


def classify_config(family: LocalFamily):
    """Large-frozen-subset versus semi-frozen classification of a family."""
    n = len(family.anchor) + 1
    freeze = detect_freezing(family)
    semi = detect_semi_freeze(family)
    has1 = len(freeze.frozen) >= n - 3
    has2 = semi is not None
    if has1 and has2:
        config = Config.BOTH
    elif has1:
        config = Config.CONFIG1
    elif has2:
        config = Config.CONFIG2
    else:
        config = Config.NEITHER
    return config, freeze, semi


def enumerate_local_families(n: int, k: int, max_distance: int, anchor_size: int | None = None):
    """All families over the canonical anchor {0..n-2} whose members are
    pairwise within the given Hamming distance.

    Members are the full extension set of the anchor; distances are computed
    on full length-n assignments, so the distinct extension characters of two
    members contribute whenever their slots differ.
    """
    if anchor_size is None:
        anchor_size = n - 1
    if anchor_size != n - 1:
        raise ValueError("local families are defined for anchors of size n-1")
    if n > k:
        raise ValueError("requires n <= k")
    member_sets = extensions(range(n - 1), k)
    if len(member_sets) * math.factorial(n) > FAMILY_SCAN_LIMIT:
        raise CapacityError("local-family scan too large")
    per_member = [sorted(permutations(S)) for S in member_sets]

    chosen = []

    def rec(depth):
        if depth == len(member_sets):
            yield LocalFamily(
                frozenset(range(n - 1)),
                tuple(zip(member_sets, chosen)),
            )
            return
        for cand in per_member[depth]:
            if all(switching_cost(cand, prev) <= max_distance for prev in chosen):
                chosen.append(cand)
                yield from rec(depth + 1)
                chosen.pop()

    yield from rec(0)


@dataclass
class LemmaReport:
    lemma: str
    instances: int = 0
    non_vacuous_passes: int = 0
    vacuous: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, witness=None, vacuous=False):
        self.instances += 1
        if vacuous:
            self.vacuous += 1
        elif passed:
            self.non_vacuous_passes += 1
        else:
            self.failures.append(witness)

    def to_doc(self) -> dict:
        return {
            "lemma": self.lemma,
            "instances": self.instances,
            "non_vacuous_passes": self.non_vacuous_passes,
            "vacuous": self.vacuous,
            "failures": [repr(w) for w in self.failures],
        }


def _check_single_anchor_lemma(lemma_id, n, k):
    distance = {"fix": 2, "exists3": 2, "fix2": 3}[lemma_id]
    report = LemmaReport(lemma_id)
    for family in enumerate_local_families(n, k, distance):
        if lemma_id == "fix":
            ok = len(detect_freezing(family).frozen) >= 1
        elif lemma_id == "exists3":
            ok = len(detect_freezing(family).frozen) >= n - 2
        else:
            config, _, _ = classify_config(family)
            ok = config is not Config.NEITHER
        report.record(ok, witness=family)
    return report


def _two_anchor_families(n, k, max_distance):
    """Joint assignments over U_R and U_R' for the two canonical anchors
    R = Q+{n-2} and R' = Q+{n-1} sharing Q = {0..n-3}.

    Yields (family over U_R, family over U_R'); every pair of member sets
    sharing n-1 characters is constrained to the distance bound.
    """
    Q = tuple(range(n - 2))
    R = frozenset(Q) | {n - 2}
    Rp = frozenset(Q) | {n - 1}
    sets_R = [frozenset(S) for S in extensions(R, k)]
    sets_Rp = [frozenset(S) for S in extensions(Rp, k)]
    # Order: U_R first so the R-side semi-freeze filter prunes early.
    joint = sets_R + [S for S in sets_Rp if S not in sets_R]
    joint_sorted = [tuple(sorted(S)) for S in joint]
    if len(joint) * math.factorial(n) > FAMILY_SCAN_LIMIT:
        raise CapacityError("two-anchor scan too large")
    per_member = [sorted(permutations(S)) for S in joint_sorted]
    constrained = [
        [
            j
            for j in range(i)
            if len(set(joint_sorted[i]) & set(joint_sorted[j])) == n - 1
        ]
        for i in range(len(joint))
    ]
    r_count = len(sets_R)
    chosen = []

    def rec(depth):
        if depth == len(joint):
            by_set = dict(zip(joint_sorted, chosen))
            fam_R = make_family(R, {S: by_set[tuple(sorted(S))] for S in sets_R})
            fam_Rp = make_family(Rp, {S: by_set[tuple(sorted(S))] for S in sets_Rp})
            yield fam_R, fam_Rp
            return
        for cand in per_member[depth]:
            if all(
                switching_cost(cand, chosen[j]) <= max_distance
                for j in constrained[depth]
            ):
                chosen.append(cand)
                if depth == r_count - 1:
                    # All of U_R is placed; skip subtrees where R is not
                    # semi-frozen, since both two-anchor lemmas presume it.
                    by_set = dict(zip(joint_sorted[: r_count], chosen))
                    fam_R = make_family(
                        R, {S: by_set[tuple(sorted(S))] for S in sets_R}
                    )
                    if detect_semi_freeze(fam_R) is not None:
                        yield from rec(depth + 1)
                else:
                    yield from rec(depth + 1)
                chosen.pop()

    yield from rec(0)


def _check_two_anchor_lemma(lemma_id, n, k):
    if n < 4:
        raise ValueError("two-anchor lemmas need n >= 4")
    Q = set(range(n - 2))
    report = LemmaReport(lemma_id)
    for fam_R, fam_Rp in _two_anchor_families(n, k, 3):
        w_R = semi_freeze_witnesses(fam_R)
        w_Rp = semi_freeze_witnesses(fam_Rp)
        if not w_Rp:
            continue
        for wr in w_R:
            for wrp in w_Rp:
                disagree = sorted(
                    q for q in Q if wr.semi_map[q] != wrp.semi_map[q]
                )
                if lemma_id == "pair":
                    report.record(
                        len(disagree) <= 2,
                        witness=(fam_R, fam_Rp, wr, wrp, disagree),
                    )
                    continue
                # spec: only pairs disagreeing on exactly two characters are
                # in the hypothesis
                if len(disagree) != 2:
                    report.record(True, vacuous=True)
                    continue
                ok = _matches_spec_structure(n, wr, wrp, disagree, Q)
                report.record(ok, witness=(fam_R, fam_Rp, wr, wrp, disagree))
    return report


def _matches_spec_structure(n, wr, wrp, disagree, Q):
    """Structure forced on two semi-freezing maps disagreeing on two chars:
    crossed home slots through the two wildcards, agreement elsewhere."""
    r, rp = n - 2, n - 1
    rest = [q for q in Q if q not in disagree]
    for q, qp in (tuple(disagree), tuple(reversed(disagree))):
        item1 = wr.semi_map[q] == wrp.semi_map[rp] and wr.semi_map[r] == wrp.semi_map[qp]
        item2 = wr.semi_map[qp] == wrp.wildcard and wrp.semi_map[q] == wr.wildcard
        item3 = all(wr.semi_map[x] == wrp.semi_map[x] for x in rest)
        if item1 and item2 and item3:
            return True
    return False


def check_local_lemma(lemma_id: str, n: int, k: int) -> LemmaReport:
    """Exhaustively check a subset-regime structural lemma at desk scale."""
    if lemma_id in ("fix", "exists3", "fix2"):
        return _check_single_anchor_lemma(lemma_id, n, k)
    if lemma_id in ("pair", "spec"):
        return _check_two_anchor_lemma(lemma_id, n, k)
    raise ValueError(f"unknown local lemma {lemma_id!r}")


@dataclass
class ConsistencyMaps:
    """Merge of per-anchor partial character-to-index maps.

    A character lands in `mapping` when every contributing map agrees on its
    index; disagreements are recorded in `inconsistencies`, not raised.
    """

    mapping: dict = field(default_factory=dict)
    inconsistencies: list = field(default_factory=list)  # (char, sorted indices)


def _merge(partial_maps) -> ConsistencyMaps:
    values = {}
    for m in partial_maps:
        for char, idx in m.items():
            values.setdefault(char, set()).add(idx)
    out = ConsistencyMaps()
    for char in sorted(values):
        if len(values[char]) == 1:
            out.mapping[char] = values[char].pop()
        else:
            out.inconsistencies.append((char, tuple(sorted(values[char]))))
    return out


def build_consistency_maps(families, kind: str = "freeze") -> ConsistencyMaps:
    """Union of freezing maps (G_Q) or of semi-freezing home maps restricted
    to the shared sub-anchor (h'_Q on T_Q) over families with anchors in U_Q.
    """
    families = list(families)
    if kind == "freeze":
        return _merge(detect_freezing(f).frozen for f in families)
    if kind == "semi":
        if not families:
            return ConsistencyMaps()
        shared = frozenset.intersection(*[f.anchor for f in families])
        partial = []
        for f in families:
            semi = detect_semi_freeze(f)
            if semi is not None:
                partial.append({c: semi.semi_map[c] for c in shared})
        return _merge(partial)
    raise ValueError(f"unknown kind {kind!r}")


def merge_partial_maps(maps) -> ConsistencyMaps:
    """Union of consistency maps one level up (H_P from the h'_Q maps)."""
    return _merge(m.mapping for m in maps)


@dataclass
class IrregularPairReport:
    observed: int | None
    upper_bound: int
    lower_bound: int
    threshold: float
    threshold_exceeded: bool

    @property
    def contradiction(self) -> bool:
        return self.upper_bound < self.lower_bound


def irregular_pair_bounds(n: int, kprime: int, step: str):
    """Counting bounds (upper, lower, threshold) for step 3a or 3b."""
    if step == "3a":
        upper = 2 * math.comb(kprime, n - 2)
        lower = (n - 3) * math.comb(kprime, n - 1)
        threshold = (n * n - 3 * n + 4) / (n - 3)
    elif step == "3b":
        upper = 3 * math.comb(kprime, n - 3)
        lower = (n - 4) * math.comb(kprime, n - 2)
        threshold = (n * n - 4 * n + 6) / (n - 4)
    else:
        raise ValueError(f"unknown step {step!r}")
    return upper, lower, threshold


def count_irregular_pairs(maps_by_anchor: dict, n: int, kprime: int, step: str) -> IrregularPairReport:
    """Observed irregular pairs (anchor, char) with char outside the anchor,
    against the closed-form upper and lower bounds for the step.
    """
    upper, lower, threshold = irregular_pair_bounds(n, kprime, step)
    observed = None
    if maps_by_anchor is not None:
        observed = 0
        for anchor, maps in maps_by_anchor.items():
            anchor = frozenset(anchor)
            observed += sum(1 for char in maps.mapping if char not in anchor)
    return IrregularPairReport(observed, upper, lower, threshold, kprime > threshold)


# --- full-regime task typing -------------------------------------------------


class TaskType(Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"
    UNCLASSIFIED = "unclassified"


@dataclass
class TaskClassification:
    kind: TaskType
    intermediate: int | None = None
    agent: int | None = None
    reason: str | None = None


def move_demand(v, s, t):
    out = list(v)
    out[s] -= 1
    out[t] += 1
    return tuple(out)


def pair_move_info(table: AllocationTable, v, v2):
    """Cost, movers and (for cost 2) the intermediate task of an adjacent move."""
    a1 = table.assignment_for(v)
    a2 = table.assignment_for(v2)
    movers = [
        (agent, a1[agent], a2[agent])
        for agent in range(len(a1))
        if a1[agent] != a2[agent]
    ]
    cost = len(movers)
    intermediate = None
    mobile_agent = None
    if cost == 2:
        # An (s,t)-adjacent cost-2 move is one agent s->i plus one agent i->t.
        (ag1, f1, t1), (ag2, f2, t2) = movers
        if t1 == f2:
            intermediate, mobile_agent = t1, ag2
        elif t2 == f1:
            intermediate, mobile_agent = t2, ag1
    return cost, movers, intermediate, mobile_agent


def _moves_into(table: AllocationTable, v, t):
    out = []
    for s in range(table.instance.k):
        if s == t or v[s] == 0:
            continue
        v2 = move_demand(v, s, t)
        if v2 in table.entries:
            out.append((s, v2))
    return out


def _classify_task(table: AllocationTable, v, task) -> TaskClassification:
    moves = _moves_into(table, v, task)
    if not moves:
        return TaskClassification(TaskType.UNCLASSIFIED, reason="no-source")
    infos = {}
    for s, v2 in moves:
        cost, movers, intermediate, agent = pair_move_info(table, v, v2)
        if cost > 2:
            raise ValueError(
                f"table has a move of cost {cost}; task typing needs max cost <= 2"
            )
        infos[s] = (cost, intermediate, agent)
    if all(cost == 1 for cost, _, _ in infos.values()):
        return TaskClassification(TaskType.TYPE1)
    nonempty_besides = sum(1 for x, c in enumerate(v) if c and x != task)
    if nonempty_besides < 3:
        return TaskClassification(
            TaskType.UNCLASSIFIED, reason="ambiguous-intermediate"
        )
    candidates = []
    for i in range(table.instance.k):
        if i == task:
            continue
        rest = [info for s, info in infos.items() if s != i]
        if not rest:
            continue
        agents = {agent for _, _, agent in rest}
        if (
            all(cost == 2 and inter == i for cost, inter, _ in rest)
            and len(agents) == 1
        ):
            candidates.append((i, agents.pop()))
    if len(candidates) == 1:
        i, agent = candidates[0]
        return TaskClassification(TaskType.TYPE2, intermediate=i, agent=agent)
    if not candidates:
        return TaskClassification(TaskType.UNCLASSIFIED, reason="mixed")
    return TaskClassification(TaskType.UNCLASSIFIED, reason="multiple-candidates")


def classify_task(table: AllocationTable, v, task) -> TaskClassification:
    if max_switching_cost(table).max_cost > 2:
        raise ValueError("task typing is defined for tables of max cost <= 2")
    return _classify_task(table, tuple(v), task)


def _is_type1_direct(table, v, task) -> bool:
    moves = _moves_into(table, v, task)
    return bool(moves) and all(
        pair_move_info(table, v, v2)[0] == 1 for _, v2 in moves
    )


def check_table_lemma(table: AllocationTable, lemma_id: str) -> LemmaReport:
    """Check a cost-2 structural lemma on every instantiation in a table."""
    checkers = {
        "dest2": _lemma_dest2,
        "sw1": _lemma_sw1,
        "tech": _lemma_tech,
        "ss": _lemma_ss,
        "one2": _lemma_one2,
        "all2int": _lemma_all2int,
        "ind": _lemma_ind,
    }
    if lemma_id not in checkers:
        raise ValueError(f"unknown table lemma {lemma_id!r}")
    if max_switching_cost(table).max_cost > 2:
        raise ValueError("table lemmas are defined for tables of max cost <= 2")
    return checkers[lemma_id](table)


def _lemma_dest2(table):
    # A cost-2 move into t pins the intermediate task and mobile agent for
    # every other move into t from outside the intermediate.
    report = LemmaReport("dest2")
    for v in table.entries:
        for t in range(table.instance.k):
            moves = _moves_into(table, v, t)
            for s1, v1 in moves:
                cost, _, i, agent = pair_move_info(table, v, v1)
                if cost != 2 or i is None:
                    continue
                for s2, v2 in moves:
                    if s2 in (s1, i):
                        continue
                    cost2, _, i2, agent2 = pair_move_info(table, v, v2)
                    ok = cost2 == 2 and i2 == i and agent2 == agent
                    report.record(ok, witness=(v, t, s1, s2, i, agent, (cost2, i2, agent2)))
    return report


def _type2_tasks(table, v):
    out = []
    for t in range(table.instance.k):
        c = _classify_task(table, v, t)
        if c.kind is TaskType.TYPE2:
            out.append((t, c.intermediate, c.agent))
    return out


def _lemma_sw1(table):
    # Moving demand from the intermediate task into a type-2 task costs 1.
    report = LemmaReport("sw1")
    for v in table.entries:
        for t, i, _agent in _type2_tasks(table, v):
            others = [s for s, c in enumerate(v) if c and s not in (t, i)]
            if len(others) < 2 or v[i] == 0:
                continue
            v2 = move_demand(v, i, t)
            if v2 not in table.entries:
                continue
            cost = pair_move_info(table, v, v2)[0]
            report.record(cost == 1, witness=(v, t, i, cost))
    return report


def _lemma_tech(table):
    # The intermediate task of a type-2 task is itself of type 1.
    report = LemmaReport("tech")
    for v in table.entries:
        if sum(1 for c in v if c) < 4:
            continue
        for t, i, _agent in _type2_tasks(table, v):
            report.record(_is_type1_direct(table, v, i), witness=(v, t, i))
    return report


def _lemma_ss(table):
    # Two cost-2 moves out of one source cannot involve five distinct tasks.
    report = LemmaReport("ss")
    k = table.instance.k
    for v in table.entries:
        for s in range(k):
            if v[s] == 0:
                continue
            targets = []
            for t in range(k):
                if t == s:
                    continue
                v2 = move_demand(v, s, t)
                if v2 not in table.entries:
                    continue
                cost, _, i, _agent = pair_move_info(table, v, v2)
                if cost == 2 and i is not None:
                    targets.append((t, i))
            for (t1, i1), (t2, i2) in combinations(targets, 2):
                distinct = len({s, i1, t1, i2, t2}) == 5
                report.record(
                    not distinct, witness=(v, s, t1, i1, t2, i2), vacuous=k < 5
                )
    return report


def _lemma_one2(table):
    # Some task must be of type 2 whenever two tasks are non-empty.  The
    # proof needs five distinct tasks, so instances below k = 5 are vacuous.
    report = LemmaReport("one2")
    k = table.instance.k
    for v in table.entries:
        if sum(1 for c in v if c) < 2:
            continue
        if k < 5:
            report.record(True, vacuous=True)
            continue
        kinds = [_classify_task(table, v, t) for t in range(k)]
        if any(c.kind is TaskType.TYPE2 for c in kinds):
            report.record(True, witness=v)
        elif any(c.reason == "ambiguous-intermediate" for c in kinds):
            # Too few non-empty tasks to name an intermediate; cannot decide.
            report.record(True, vacuous=True)
        else:
            report.record(False, witness=(v, kinds))
    return report


def _lemma_all2int(table):
    # At most one type-1 task; the proof needs five distinct tasks, so
    # instances below k = 5 are vacuous.
    report = LemmaReport("all2int")
    k = table.instance.k
    for v in table.entries:
        if sum(1 for c in v if c) < 4:
            continue
        if k < 5:
            report.record(True, vacuous=True)
            continue
        type1 = [
            t for t in range(k) if _classify_task(table, v, t).kind is TaskType.TYPE1
        ]
        report.record(len(type1) <= 1, witness=(v, type1))
    return report


def _lemma_ind(table):
    # After draining one unit from the intermediate into a type-2 task, the
    # task keeps its type and intermediate.  Needs four non-empty tasks beside
    # t, hence at least five tasks: vacuous below k = 5.
    report = LemmaReport("ind")
    k = table.instance.k
    for v in table.entries:
        if sum(1 for c in v if c) < 4:
            continue
        if k < 5:
            report.record(True, vacuous=True)
            continue
        eligible = [
            (t, i)
            for t, i, _agent in _type2_tasks(table, v)
            if sum(1 for x, c in enumerate(v) if c and x != t) >= 4
        ]
        if not eligible:
            report.record(False, witness=(v, "no eligible type-2 task"))
            continue
        for t, i in eligible:
            if v[i] == 0:
                continue
            v2 = move_demand(v, i, t)
            if v2 not in table.entries:
                continue
            c = _classify_task(table, v2, t)
            ok = c.kind is TaskType.TYPE2 and c.intermediate == i
            report.record(ok, witness=(v, t, i, c))
    return report
