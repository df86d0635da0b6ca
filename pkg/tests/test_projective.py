"""PG(3,4): censuses against independent brute-force oracles."""

from itertools import combinations

import pytest

from srg216 import gf4
from srg216.projective import (
    LEAD,
    NORM,
    SMUL,
    FrameError,
    RankDeficiencyError,
    dot,
    pack,
    unpack,
)


def test_pack_unpack_round_trip():
    for v in range(256):
        assert pack(unpack(v)) == v


def test_scalar_multiple_table_matches_field():
    for s in range(4):
        for v in range(256):
            expect = pack([gf4.mul(s, c) for c in unpack(v)])
            assert SMUL[s][v] == expect


def test_normalisation_leading_one():
    for v in range(1, 256):
        n = NORM[v]
        coords = unpack(n)
        lead = next(c for c in coords if c)
        assert lead == 1
        # same projective point: n is a scalar multiple of v
        assert n in {SMUL[s][v] for s in (1, 2, 3)}
    assert LEAD[0] == -1


def test_point_census_and_order(space):
    assert len(space.points) == 85
    # (q^4 - 1) / (q - 1) with q = 4
    assert (4**4 - 1) // 3 == 85
    assert space.points[0].coords == (0, 0, 0, 1)
    packed = [p.packed for p in space.points]
    assert packed == sorted(packed)
    assert all(NORM[v] == v for v in packed)


def test_line_census_brute_force(space):
    # oracle: dedupe the spans of all point pairs
    seen = set()
    for i, j in combinations(range(85), 2):
        u = space.points[i].packed
        w = space.points[j].packed
        members = frozenset(
            space.point_index_by_packed[NORM[m]]
            for m in (u, w, u ^ w, u ^ SMUL[2][w], u ^ SMUL[3][w])
        )
        seen.add(members)
    assert len(seen) == 357
    assert len(space.lines) == 357
    assert seen == {frozenset(ln.points) for ln in space.lines}


def test_line_incidences(space):
    for ln in space.lines:
        assert len(ln.points) == 5
        assert list(ln.points) == sorted(ln.points)
    for p in range(85):
        assert len(space.lines_through[p]) == 21
    # two distinct points lie on exactly one common line
    a, b = 0, 84
    common = set(space.lines_through[a]) & set(space.lines_through[b])
    assert len(common) == 1
    assert space.line_through(a, b).index in common
    with pytest.raises(ValueError):
        space.line_through(3, 3)


def test_plane_census(space):
    assert len(space.planes) == 85
    for pl in space.planes:
        assert len(pl.points) == 21
        for p in pl.points:
            assert dot(pack(pl.coeffs), space.points[p].packed) == 0


def test_lines_are_canonically_sorted(space):
    keys = [ln.points for ln in space.lines]
    assert keys == sorted(keys)


def test_span_rank(space):
    e = {space.point_index_by_packed[pack(c)]: c for c in [
        (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]}
    idx = list(e)
    assert space.span_rank(idx) == 4
    assert space.span_rank(idx[:2]) == 2
    ln = space.line_through(idx[0], idx[1])
    assert space.span_rank(ln.points) == 2
    pl = space.planes[0]
    assert space.span_rank(pl.points) == 3
    assert space.span_rank(range(85)) == 4
    with pytest.raises(ValueError):
        space.span_rank([])


def _pt(space, coords):
    return space.point_index_by_packed[NORM[pack(coords)]]


def test_baer_closure_standard_frame(space):
    frame = [
        _pt(space, (1, 0, 0, 0)),
        _pt(space, (0, 1, 0, 0)),
        _pt(space, (0, 0, 1, 0)),
        _pt(space, (0, 0, 0, 1)),
        _pt(space, (1, 1, 1, 1)),
    ]
    sub = space.baer_closure(frame)
    assert len(sub.points) == 15
    # the closure of the standard frame is exactly the 0/1 points
    zero_one = {
        p.index for p in space.points if all(c in (0, 1) for c in p.coords)
    }
    assert set(sub.points) == zero_one
    assert space.is_baer_point_set(sub.points)


def test_baer_closure_scaling_invariance(space):
    f1 = [
        _pt(space, (1, 0, 0, 0)),
        _pt(space, (0, 1, 0, 0)),
        _pt(space, (0, 0, 1, 0)),
        _pt(space, (0, 0, 0, 1)),
        _pt(space, (1, 2, 3, 1)),
    ]
    sub = space.baer_closure(f1)
    assert len(sub.points) == 15
    assert space.is_baer_point_set(sub.points)
    # permuting the frame does not change the closure
    sub2 = space.baer_closure([f1[2], f1[0], f1[3], f1[1], f1[4]])
    assert sub2.points == sub.points


def test_baer_closure_errors(space):
    coplanar = [
        _pt(space, (1, 0, 0, 0)),
        _pt(space, (0, 1, 0, 0)),
        _pt(space, (1, 1, 0, 0)),
        _pt(space, (0, 0, 0, 1)),
        _pt(space, (1, 1, 1, 1)),
    ]
    with pytest.raises(RankDeficiencyError):
        space.baer_closure(coplanar)
    on_face = [
        _pt(space, (1, 0, 0, 0)),
        _pt(space, (0, 1, 0, 0)),
        _pt(space, (0, 0, 1, 0)),
        _pt(space, (0, 0, 0, 1)),
        _pt(space, (1, 1, 1, 0)),  # lies on the face x3 = 0
    ]
    with pytest.raises(FrameError):
        space.baer_closure(on_face)
    with pytest.raises(ValueError):
        space.baer_closure([1, 2, 3, 4])


def test_baer_point_set_rejects_non_baer(space):
    assert not space.is_baer_point_set(range(15))
