"""Structural-machinery tests: freezing, lemma oracles, counting, task typing."""
import math

import pytest

from switchalloc.construct import group_construction, ordered_construction
from switchalloc.model import SUBSET, ProblemInstance
from switchalloc.solver import feasible
from switchalloc.structure import (
    Config,
    ConsistencyMaps,
    TaskType,
    build_consistency_maps,
    check_local_lemma,
    check_table_lemma,
    classify_config,
    classify_task,
    count_irregular_pairs,
    detect_freezing,
    detect_semi_freeze,
    enumerate_local_families,
    extensions,
    family_from_table,
    irregular_pair_bounds,
    make_family,
    merge_partial_maps,
    move_demand,
    pair_move_info,
    semi_freeze_witnesses,
)


ANCHOR4 = (0, 1, 2, 3)


def test_extensions():
    assert extensions((0, 1), 4) == [(0, 1, 2), (0, 1, 3)]
    with pytest.raises(ValueError):
        extensions((0, 5), 4)


def test_make_family_rejects_bad_members():
    with pytest.raises(ValueError, match="extension"):
        make_family((0, 1), {(0, 1): (1, 0)})
    with pytest.raises(ValueError, match="permutation"):
        make_family((0, 1), {(0, 1, 2): (0, 1, 3)})


def test_detect_freezing_planted():
    # Every member keeps anchor characters at their own index: all frozen.
    fam = make_family(
        ANCHOR4,
        {
            (0, 1, 2, 3, 4): (0, 1, 2, 3, 4),
            (0, 1, 2, 3, 5): (0, 1, 2, 3, 5),
        },
    )
    report = detect_freezing(fam)
    assert report.frozen == {0: 0, 1: 1, 2: 2, 3: 3}
    assert report.frozen_set == frozenset(ANCHOR4)


def test_detect_freezing_partial():
    # Character 3 moves between members; the rest stay put.
    fam = make_family(
        ANCHOR4,
        {
            (0, 1, 2, 3, 4): (0, 1, 2, 3, 4),
            (0, 1, 2, 3, 5): (0, 1, 2, 5, 3),
        },
    )
    assert detect_freezing(fam).frozen == {0: 0, 1: 1, 2: 2}


def test_semi_freeze_planted():
    # Home map is the identity, wildcard index 4; each member displaces at
    # most its extension character and one anchor character into the wildcard.
    fam = make_family(
        ANCHOR4,
        {
            (0, 1, 2, 3, 4): (4, 1, 2, 3, 0),  # char 0 visits the wildcard
            (0, 1, 2, 3, 5): (0, 5, 2, 3, 1),  # char 1 visits the wildcard
        },
    )
    semi = detect_semi_freeze(fam)
    assert semi is not None
    assert semi.wildcard == 4
    assert semi.semi_map == {0: 0, 1: 1, 2: 2, 3: 3}
    # the canonical report is the first of all witnesses
    witnesses = semi_freeze_witnesses(fam)
    assert witnesses and witnesses[0].wildcard == semi.wildcard
    assert witnesses[0].semi_map == semi.semi_map


def test_classify_config_cases():
    frozen_fam = make_family(
        ANCHOR4,
        {
            (0, 1, 2, 3, 4): (0, 1, 2, 3, 4),
            (0, 1, 2, 3, 5): (0, 1, 2, 3, 5),
        },
    )
    config, freeze, semi = classify_config(frozen_fam)
    assert config is Config.BOTH  # fully frozen families are also semi-frozen
    assert len(freeze.frozen) == 4

    # No character keeps a fixed index and no wildcard works: Neither.
    wild_fam = make_family(
        ANCHOR4,
        {
            (0, 1, 2, 3, 4): (1, 0, 3, 2, 4),
            (0, 1, 2, 3, 5): (0, 1, 2, 3, 5),
        },
    )
    config, freeze, semi = classify_config(wild_fam)
    assert config is Config.NEITHER
    assert not freeze.frozen and semi is None


def test_enumerate_local_families_distance_extremes():
    # Two members always differ where their distinct extension characters sit,
    # so no family has pairwise distance 0.
    assert sum(1 for _ in enumerate_local_families(3, 5, 0)) == 0
    # At distance 1 only the extension slot may differ: one shared slot choice
    # (3 positions) times the arrangements of the anchor (2) = 6 families.
    fams = list(enumerate_local_families(3, 5, 1))
    assert len(fams) == 6
    for fam in fams:
        assert len(detect_freezing(fam).frozen) == 2  # the whole anchor


def test_enumerate_local_families_args():
    with pytest.raises(ValueError):
        list(enumerate_local_families(3, 5, 2, anchor_size=1))
    with pytest.raises(ValueError):
        list(enumerate_local_families(6, 5, 2))


def test_family_from_table():
    outcome = feasible(ProblemInstance(3, 5, SUBSET), 3)
    assert outcome.feasible
    fam = family_from_table(outcome.witness, (0, 1))
    assert fam.anchor == frozenset((0, 1))
    assert [S for S, _ in fam.members] == [(0, 1, 2), (0, 1, 3), (0, 1, 4)]


def test_lemma_fix_exhaustive_small():
    report = check_local_lemma("fix", 3, 5)
    assert report.ok
    assert report.instances > 0
    assert report.non_vacuous_passes == report.instances


def test_lemma_exists3_small():
    report = check_local_lemma("exists3", 3, 5)
    assert report.ok and report.instances > 0


def test_lemma_pair_and_spec_small():
    pair = check_local_lemma("pair", 4, 5)
    assert pair.ok and pair.instances > 0
    spec = check_local_lemma("spec", 4, 5)
    assert spec.ok and spec.instances > 0


def test_unknown_lemma_rejected():
    with pytest.raises(ValueError):
        check_local_lemma("nope", 3, 5)
    table = ordered_construction(ProblemInstance(2, 2))
    with pytest.raises(ValueError):
        check_table_lemma(table, "nope")


def test_consistency_maps_agree_and_disagree():
    fam_a = make_family(
        (0, 1),
        {(0, 1, 2): (0, 1, 2), (0, 1, 3): (0, 1, 3), (0, 1, 4): (0, 1, 4)},
    )  # freezes 0 -> 0, 1 -> 1
    fam_b = make_family(
        (0, 2),
        {(0, 1, 2): (0, 2, 1), (0, 2, 3): (0, 2, 3), (0, 2, 4): (0, 2, 4)},
    )  # freezes 0 -> 0, 2 -> 1
    merged = build_consistency_maps([fam_a, fam_b], kind="freeze")
    assert merged.mapping == {0: 0, 1: 1, 2: 1}
    assert merged.inconsistencies == []

    fam_c = make_family(
        (0, 1),
        {(0, 1, 2): (1, 0, 2), (0, 1, 3): (1, 0, 3), (0, 1, 4): (1, 0, 4)},
    )  # freezes 0 -> 1, contradicting fam_a
    merged = build_consistency_maps([fam_a, fam_c], kind="freeze")
    assert merged.inconsistencies == [(0, (0, 1)), (1, (0, 1))]
    assert 0 not in merged.mapping


def test_consistency_maps_semi_kind():
    fam = make_family(
        ANCHOR4,
        {
            (0, 1, 2, 3, 4): (0, 1, 2, 3, 4),
            (0, 1, 2, 3, 5): (0, 1, 2, 3, 5),
        },
    )
    merged = build_consistency_maps([fam], kind="semi")
    assert set(merged.mapping) == set(ANCHOR4)
    with pytest.raises(ValueError):
        build_consistency_maps([fam], kind="bogus")


def test_merge_partial_maps():
    a = ConsistencyMaps(mapping={0: 0, 1: 1})
    b = ConsistencyMaps(mapping={0: 0, 2: 2})
    c = ConsistencyMaps(mapping={1: 3})
    merged = merge_partial_maps([a, b, c])
    assert merged.mapping == {0: 0, 2: 2}
    assert merged.inconsistencies == [(1, (1, 3))]


@pytest.mark.parametrize("step", ["3a", "3b"])
@pytest.mark.parametrize("n", range(5, 9))
def test_irregular_pair_formulas(step, n):
    for kprime in range(n, 21):
        upper, lower, threshold = irregular_pair_bounds(n, kprime, step)
        if step == "3a":
            assert upper == 2 * math.comb(kprime, n - 2)
            assert lower == (n - 3) * math.comb(kprime, n - 1)
            assert threshold == (n * n - 3 * n + 4) / (n - 3)
        else:
            assert upper == 3 * math.comb(kprime, n - 3)
            assert lower == (n - 4) * math.comb(kprime, n - 2)
            assert threshold == (n * n - 4 * n + 6) / (n - 4)


def test_irregular_pair_synthetic_count():
    # Give every (n-1)-subset anchor a map naming exactly n-3 characters
    # outside the anchor; the observed count then meets the lower bound.
    from itertools import combinations

    n, kprime = 5, 8
    maps_by_anchor = {}
    for anchor in combinations(range(kprime), n - 1):
        outside = [c for c in range(kprime) if c not in anchor][: n - 3]
        maps_by_anchor[anchor] = ConsistencyMaps(
            mapping={c: i for i, c in enumerate(outside)}
        )
    report = count_irregular_pairs(maps_by_anchor, n, kprime, "3a")
    assert report.observed == (n - 3) * math.comb(kprime, n - 1)
    assert report.lower_bound == report.observed


def test_irregular_pair_threshold_direction():
    report = count_irregular_pairs(None, 5, 12, "3a")
    assert report.threshold_exceeded
    assert report.contradiction  # upper < lower once past the threshold
    below = count_irregular_pairs(None, 5, 5, "3a")
    assert not below.threshold_exceeded


def test_move_demand_and_pair_move_info():
    assert move_demand((1, 1, 1, 3), 1, 2) == (1, 0, 2, 3)
    table = group_construction(ProblemInstance(6, 4), 3)
    cost, movers, intermediate, agent = pair_move_info(
        table, (1, 1, 1, 3), (1, 0, 2, 3)
    )
    assert cost == 2
    assert intermediate == 3  # the special task relays the demand
    assert agent is not None


def test_classify_task_type1_on_cost1_table():
    table = ordered_construction(ProblemInstance(4, 2))
    result = classify_task(table, (2, 2), 0)
    assert result.kind is TaskType.TYPE1


def test_classify_task_type2_on_group_table():
    table = group_construction(ProblemInstance(6, 4), 3)
    interior = (1, 1, 1, 3)  # every non-special task has spare capacity
    for task in (0, 1, 2):
        result = classify_task(table, interior, task)
        assert result.kind is TaskType.TYPE2
        assert result.intermediate == 3


def test_classify_task_unclassified_reasons():
    table = group_construction(ProblemInstance(6, 4), 3)
    # Full non-special tasks leave no in-domain source move.
    result = classify_task(table, (2, 1, 1, 2), 0)
    assert result.kind is TaskType.UNCLASSIFIED and result.reason == "no-source"
    # Fewer than three non-empty tasks besides the target: ambiguous.
    small = ordered_construction(ProblemInstance(3, 3))
    result = classify_task(small, (1, 1, 1), 2)
    assert result.kind is TaskType.UNCLASSIFIED
    assert result.reason == "ambiguous-intermediate"


def test_classify_task_requires_low_cost():
    table = ordered_construction(ProblemInstance(4, 4))  # max cost 3
    with pytest.raises(ValueError):
        classify_task(table, (1, 1, 1, 1), 0)
    with pytest.raises(ValueError):
        check_table_lemma(table, "dest2")


def test_table_lemmas_on_group_table():
    table = group_construction(ProblemInstance(6, 4), 3)
    for lemma in ("dest2", "sw1", "tech"):
        report = check_table_lemma(table, lemma)
        assert report.ok, report.failures
    # five-distinct-task lemmas cannot be instantiated at k = 4
    for lemma in ("ss", "one2", "all2int"):
        report = check_table_lemma(table, lemma)
        assert report.ok
        assert report.non_vacuous_passes == 0
