"""Subquadrangles of the surface.

A subquadrangle here is a 15-point Baer subgeometry (a copy of PG(3,2))
entirely contained in the surface; it inherits a generalized-quadrangle
structure of order (2, 2) whose 15 lines are 3-point sections of
generators.  There are exactly 36 of them, and two distinct ones meet in
either 3 points (a generator section) or 6 points (the surface points of
a secant and its polar line).
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from ._kernels import DEFAULT_BACKEND, get_backend
from .hermitian import HermitianSurface
from .projective import NORM, SMUL


class SubquadrangleCountError(RuntimeError):
    """The closure scan did not find exactly 36 subquadrangles."""


class PairStructureError(RuntimeError):
    """A pair or triple of subquadrangles violates the meeting rules."""


class PairKind(Enum):
    THREE_ON_GENERATOR = 3
    SIX_ON_SECANT_PAIR = 6


@dataclass(frozen=True)
class Subquadrangle:
    id: int
    points: tuple  # 15 global point indices, sorted
    point_set: frozenset
    mask: int  # 45-bit mask over surface-local indices
    generators: tuple  # 15 pairs (line index, sorted 3-point section)


@dataclass(frozen=True)
class PairClass:
    kind: PairKind
    meet: tuple  # the common points, sorted
    secant_pair: tuple  # (secant, polar secant), or None for 3-point meets


def kernel_inputs(surface: HermitianSurface):
    """Byte tables consumed by the closure-scan kernels."""
    space = surface.space
    reps = bytes(space.points[g].packed for g in surface.points)
    lidx = bytearray(b"\xff" * 256)
    for v in range(1, 256):
        gi = space.point_index_by_packed[NORM[v]]
        li = surface.local_index.get(gi)
        if li is not None:
            lidx[v] = li
    return reps, bytes(lidx), SMUL[2], SMUL[3]


def _scan_chunk(args):
    backend_name, reps, lidx, smul2, smul3, order, start, end = args
    kern = get_backend(backend_name)
    return kern.scan_baer_closures(reps, lidx, smul2, smul3, order, start, end)


def scan_masks(surface, backend=None, jobs: int = 1, order=None):
    """All Baer-closure masks on the surface, deduplicated and sorted.

    ``order`` permutes the scan order of the outermost point only; the
    result is order-independent.  ``jobs`` > 1 splits the outer loop over
    a process pool.
    """
    reps, lidx, smul2, smul3 = kernel_inputs(surface)
    n = len(reps)
    if order is None:
        order = bytes(range(n))
    else:
        order = bytes(order)
        if sorted(order) != list(range(n)):
            raise ValueError("order must be a permutation of the local indices")
    if backend is None or backend == "auto":
        backend = DEFAULT_BACKEND
    if jobs <= 1:
        kern = get_backend(backend)
        masks = kern.scan_baer_closures(reps, lidx, smul2, smul3, order, 0, n)
        return sorted(set(masks))
    tasks = [
        (backend, reps, lidx, smul2, smul3, order, ia, ia + 1) for ia in range(n)
    ]
    merged = set()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_scan_chunk, tasks):
            merged.update(part)
    return sorted(merged)


def _records_from_masks(surface, masks):
    items = []
    for m in masks:
        pts = tuple(surface.points[i] for i in range(45) if m >> i & 1)
        items.append((pts, m))
    items.sort()
    if len(items) != 36:
        raise SubquadrangleCountError(
            "expected 36 subquadrangles, found %d" % len(items)
        )
    subs = []
    for sid, (pts, m) in enumerate(items):
        pset = frozenset(pts)
        gens = []
        for li in surface.generators:
            sec = tuple(p for p in surface.space.lines[li].points if p in pset)
            if not sec:
                continue
            if len(sec) != 3:
                raise PairStructureError(
                    "generator %d meets subquadrangle %d in %d points"
                    % (li, sid, len(sec))
                )
            gens.append((li, sec))
        if len(gens) != 15:
            raise PairStructureError(
                "subquadrangle %d carries %d generator sections" % (sid, len(gens))
            )
        subs.append(
            Subquadrangle(
                id=sid, points=pts, point_set=pset, mask=m, generators=tuple(gens)
            )
        )
    return subs


def enumerate_subquadrangles(surface, backend=None, jobs: int = 1, order=None):
    """The 36 subquadrangles, ordered lexicographically by point tuple."""
    masks = scan_masks(surface, backend=backend, jobs=jobs, order=order)
    return _records_from_masks(surface, masks)


def rebuild_subquadrangles(surface, point_lists):
    """Rebuild validated subquadrangle records from cached point lists.

    Each list must be a sorted 15-point Baer set on the surface; the
    canonical ordering must match a fresh enumeration's ordering.
    """
    masks = []
    for pts in point_lists:
        pts = tuple(pts)
        if len(pts) != 15 or list(pts) != sorted(set(pts)):
            raise PairStructureError("cached subquadrangle %r is not canonical" % (pts,))
        m = 0
        for p in pts:
            li = surface.local_index.get(p)
            if li is None:
                raise PairStructureError(
                    "cached subquadrangle point %d is not on the surface" % p
                )
            m |= 1 << li
        if not surface.space.is_baer_point_set(pts):
            raise PairStructureError(
                "cached subquadrangle %r is not a Baer point set" % (pts,)
            )
        masks.append(m)
    subs = _records_from_masks(surface, masks)
    for w, pts in zip(subs, point_lists):
        if w.points != tuple(pts):
            raise PairStructureError("cached subquadrangles are not in canonical order")
    return subs


def classify_pair(surface, w1: Subquadrangle, w2: Subquadrangle) -> PairClass:
    """Classify how two distinct subquadrangles meet.

    3 common points: they are a generator section.  6 common points: they
    are the surface points of a secant and its polar line.  Anything else
    is a structure error.
    """
    if w1.id == w2.id:
        raise ValueError("classify_pair requires two distinct subquadrangles")
    common = sorted(w1.point_set & w2.point_set)
    space = surface.space
    if len(common) == 3:
        ln = space.line_through(common[0], common[1])
        if common[2] not in ln.points or ln.index not in surface.generator_set:
            raise PairStructureError(
                "3-point meet of subquadrangles %d and %d is not on a generator"
                % (w1.id, w2.id)
            )
        return PairClass(PairKind.THREE_ON_GENERATOR, tuple(common), None)
    if len(common) == 6:
        cset = set(common)
        lines = set()
        for a, b in combinations(common, 2):
            ln = space.line_through(a, b)
            if sum(1 for p in ln.points if p in cset) == 3:
                lines.add(ln.index)
        if len(lines) != 2:
            raise PairStructureError(
                "6-point meet of subquadrangles %d and %d spans %d trisecant lines"
                % (w1.id, w2.id, len(lines))
            )
        s, t = sorted(lines)
        if s not in surface.secant_set or surface.polar_line(s) != t:
            raise PairStructureError(
                "6-point meet of subquadrangles %d and %d is not a polar secant pair"
                % (w1.id, w2.id)
            )
        if tuple(common) != surface.secant_six(s):
            raise PairStructureError(
                "6-point meet of subquadrangles %d and %d mismatches its secant pair"
                % (w1.id, w2.id)
            )
        return PairClass(PairKind.SIX_ON_SECANT_PAIR, tuple(common), (s, t))
    raise PairStructureError(
        "subquadrangles %d and %d share %d points" % (w1.id, w2.id, len(common))
    )


def triple_through_secant(surface, subs, line_index: int) -> tuple:
    """Ids of the subquadrangles containing the six points of a secant pair."""
    six = set(surface.secant_six(line_index))
    ids = tuple(w.id for w in subs if six <= w.point_set)
    if len(ids) != 3:
        raise PairStructureError(
            "secant %d lies in %d subquadrangles" % (line_index, len(ids))
        )
    return ids


def six_partner_masks(subs) -> tuple:
    """For each subquadrangle, the 36-bit mask of its 6-point partners."""
    n = len(subs)
    out = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if (subs[i].mask & subs[j].mask).bit_count() == 6:
                out[i] |= 1 << j
                out[j] |= 1 << i
    return tuple(out)


def common_six_partner_count(six_masks, i: int, j: int) -> int:
    """How many subquadrangles meet both W_i and W_j in 6 points."""
    return (six_masks[i] & six_masks[j]).bit_count()
