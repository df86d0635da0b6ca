"""The 36 Baer subquadrangles of the surface and their pair structure."""

from itertools import combinations

import pytest

from srg216.subquadrangles import (
    PairKind,
    PairStructureError,
    classify_pair,
    common_six_partner_count,
    enumerate_subquadrangles,
    rebuild_subquadrangles,
    six_partner_masks,
    triple_through_secant,
)


def test_census(subs):
    assert len(subs) == 36
    assert [w.id for w in subs] == list(range(36))


def test_canonical_order_and_shape(space, surface, subs):
    keys = [w.points for w in subs]
    assert keys == sorted(keys)
    for w in subs:
        assert len(w.points) == 15
        assert list(w.points) == sorted(w.points)
        assert w.point_set <= surface.point_set
        assert space.is_baer_point_set(w.points)
        assert w.mask == sum(
            1 << surface.local_index[p] for p in w.points)


def test_generator_sections(space, surface, subs):
    for w in subs[:6]:
        assert len(w.generators) == 15
        lines = [li for li, _ in w.generators]
        assert len(set(lines)) == 15
        for li, sec in w.generators:
            assert li in surface.generator_set
            assert len(sec) == 3
            assert set(sec) <= w.point_set
            assert set(sec) <= set(space.lines[li].points)


def test_gq_2_2_axioms(space, subs):
    # each subquadrangle is a GQ(2,2): 3 points a line, 3 lines a point
    w = subs[0]
    incidence = {p: 0 for p in w.points}
    for _, sec in w.generators:
        for p in sec:
            incidence[p] += 1
    assert set(incidence.values()) == {3}


def test_pair_meets_split(surface, subs):
    threes = 0
    sixes = 0
    per = {w.id: [0, 0] for w in subs}
    for w1, w2 in combinations(subs, 2):
        pc = classify_pair(surface, w1, w2)
        if pc.kind is PairKind.THREE_ON_GENERATOR:
            threes += 1
            per[w1.id][0] += 1
            per[w2.id][0] += 1
            assert pc.secant_pair is None
        else:
            sixes += 1
            per[w1.id][1] += 1
            per[w2.id][1] += 1
            s, t = pc.secant_pair
            assert surface.polar_line(s) == t
    assert threes + sixes == 630
    # every subquadrangle: 15 partners meeting in 3, 20 meeting in 6
    for a, b in per.values():
        assert (a, b) == (15, 20)
    assert threes == 36 * 15 // 2
    assert sixes == 36 * 20 // 2


def test_classify_pair_rejects_same(surface, subs):
    with pytest.raises(ValueError):
        classify_pair(surface, subs[0], subs[0])


def test_triple_through_every_secant(surface, subs):
    seen_pairs = set()
    for ln in surface.secants:
        ids = triple_through_secant(surface, subs, ln)
        assert len(ids) == 3
        six = set(surface.secant_six(ln))
        for i in ids:
            assert six <= subs[i].point_set
        for pair in combinations(sorted(ids), 2):
            seen_pairs.add((pair, tuple(sorted(six))))
    # each secant pair is counted from both of its lines
    assert len(seen_pairs) == 3 * 120


def test_common_six_partner_counts(surface, subs):
    masks = six_partner_masks(subs)
    for i, m in enumerate(masks):
        assert bin(m).count("1") == 20
        assert not (m >> i) & 1
    for w1, w2 in combinations(subs, 2):
        pc = classify_pair(surface, w1, w2)
        n = common_six_partner_count(masks, w1.id, w2.id)
        if pc.kind is PairKind.THREE_ON_GENERATOR:
            assert n == 12
        else:
            assert n == 10


def test_rebuild_round_trip(surface, subs):
    lists = [list(w.points) for w in subs]
    again = rebuild_subquadrangles(surface, lists)
    assert [w.points for w in again] == [w.points for w in subs]
    assert [w.generators for w in again] == [w.generators for w in subs]


def test_rebuild_validation(surface, subs):
    lists = [list(w.points) for w in subs]
    wrong_order = [lists[1], lists[0]] + lists[2:]
    with pytest.raises((RuntimeError, ValueError)):
        rebuild_subquadrangles(surface, wrong_order)
    with pytest.raises((RuntimeError, ValueError)):
        rebuild_subquadrangles(surface, lists[:-1])
    broken = [list(pts) for pts in lists]
    broken[0][0] = next(
        p for p in range(85) if p not in surface.point_set)
    broken[0].sort()
    with pytest.raises((RuntimeError, ValueError)):
        rebuild_subquadrangles(surface, broken)


def test_enumeration_backend_and_jobs_agree(surface, subs):
    again = enumerate_subquadrangles(surface, backend="pure", jobs=2)
    assert [w.points for w in again] == [w.points for w in subs]
