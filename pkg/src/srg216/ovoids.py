"""Ovoids of the subquadrangles: the 216 graph vertices.

An ovoid of a subquadrangle is a set of 5 points meeting each of its 15
generator sections exactly once.  Every subquadrangle has exactly 6, so
there are 216 pairs (subquadrangle, ovoid); vertex ids are assigned as
6 * parent_id + k with k the lexicographic rank of the ovoid inside its
parent.
"""

from dataclasses import dataclass
from itertools import combinations

from ._kernels import get_backend


class OvoidCountError(RuntimeError):
    """An ovoid census or uniqueness constraint failed."""


class GeneratorJoinError(ValueError):
    """The two points lie on a common generator section, so no ovoid holds both."""


class OvoidLookupError(KeyError):
    """The given point set is not one of the enumerated ovoids."""


@dataclass(frozen=True)
class OvoidVertex:
    id: int
    parent: int  # subquadrangle id
    points: tuple  # 5 global point indices, sorted
    point_set: frozenset


_COMB5 = None


def _comb_masks():
    global _COMB5
    if _COMB5 is None:
        _COMB5 = tuple(
            sum(1 << i for i in c) for c in combinations(range(15), 5)
        )
    return _COMB5


def enumerate_ovoids(w, backend=None):
    """The ovoids of one subquadrangle as sorted 5-tuples, in lex order."""
    kern = get_backend(backend)
    pos = {p: i for i, p in enumerate(w.points)}
    gen_masks = tuple(
        sum(1 << pos[p] for p in sec) for _, sec in w.generators
    )
    hits = kern.scan_ovoid_masks(gen_masks, _comb_masks())
    ovs = sorted(
        tuple(w.points[i] for i in range(15) if m >> i & 1) for m in hits
    )
    if len(ovs) != 6:
        raise OvoidCountError(
            "subquadrangle %d has %d ovoids, expected 6" % (w.id, len(ovs))
        )
    return ovs


def all_vertices(subs, backend=None):
    """All 216 ovoid vertices, ordered by id."""
    verts = []
    for w in subs:
        for k, pts in enumerate(enumerate_ovoids(w, backend=backend)):
            verts.append(
                OvoidVertex(
                    id=6 * w.id + k,
                    parent=w.id,
                    points=pts,
                    point_set=frozenset(pts),
                )
            )
    return verts


def rebuild_vertices(subs, records):
    """Rebuild validated vertices from cached (id, parent, points) records."""
    verts = []
    for rec_id, parent, points in records:
        if rec_id != len(verts):
            raise OvoidCountError("cached ovoid ids are not consecutive")
        if not 0 <= parent < len(subs):
            raise OvoidCountError("cached ovoid %d has unknown parent %d" % (rec_id, parent))
        w = subs[parent]
        pts = tuple(points)
        if not 6 * parent <= rec_id < 6 * parent + 6:
            raise OvoidCountError("cached ovoid %d is misplaced" % rec_id)
        if len(pts) != 5 or list(pts) != sorted(set(pts)):
            raise OvoidCountError("cached ovoid %d is not a sorted 5-set" % rec_id)
        if not set(pts) <= w.point_set:
            raise OvoidCountError(
                "cached ovoid %d leaves subquadrangle %d" % (rec_id, parent)
            )
        for _, sec in w.generators:
            if sum(1 for p in sec if p in pts) != 1:
                raise OvoidCountError(
                    "cached ovoid %d misses the hitting property" % rec_id
                )
        verts.append(
            OvoidVertex(id=rec_id, parent=parent, points=pts, point_set=frozenset(pts))
        )
    if len(verts) != 6 * len(subs):
        raise OvoidCountError("cached ovoid census is %d" % len(verts))
    for w in subs:
        group = verts[6 * w.id : 6 * w.id + 6]
        if [v.points for v in group] != sorted(v.points for v in group):
            raise OvoidCountError(
                "cached ovoids of subquadrangle %d are not in canonical order" % w.id
            )
    return verts


def ovoid_through_pair(w, w_vertices, p: int, q: int) -> OvoidVertex:
    """The unique ovoid of w containing two non-collinear points of w."""
    if p == q:
        raise ValueError("ovoid_through_pair requires two distinct points")
    if p not in w.point_set or q not in w.point_set:
        raise ValueError("both points must belong to the subquadrangle")
    for _, sec in w.generators:
        if p in sec and q in sec:
            raise GeneratorJoinError(
                "points %d and %d lie on a generator section of subquadrangle %d"
                % (p, q, w.id)
            )
    hits = [v for v in w_vertices if p in v.point_set and q in v.point_set]
    if len(hits) != 1:
        raise OvoidCountError(
            "%d ovoids of subquadrangle %d contain the pair (%d, %d)"
            % (len(hits), w.id, p, q)
        )
    return hits[0]


def parent_of(vertices, points) -> int:
    """Parent subquadrangle id of an enumerated ovoid, given its point set."""
    key = tuple(sorted(points))
    for v in vertices:
        if v.points == key:
            return v.parent
    raise OvoidLookupError("no enumerated ovoid has points %r" % (key,))
