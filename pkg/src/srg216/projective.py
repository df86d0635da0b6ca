"""The projective space PG(3,4).

Points are nonzero coordinate 4-vectors over GF(4) up to scalar, normalised
so that the first nonzero coordinate is 1.  A vector is packed into a single
byte, two bits per coordinate (c0 in the high bits), so that

* lexicographic order on coordinate tuples is numeric order on packed bytes,
* vector addition is XOR of packed bytes,
* scalar multiplication and normalisation are 256-entry lookup tables.

All higher modules store canonical integer indices (points 0..84, lines
0..356, planes 0..84) and never coordinates.
"""

from dataclasses import dataclass
from itertools import combinations

from . import gf4


def pack(coords) -> int:
    c0, c1, c2, c3 = coords
    return (c0 << 6) | (c1 << 4) | (c2 << 2) | c3


def unpack(v: int):
    return ((v >> 6) & 3, (v >> 4) & 3, (v >> 2) & 3, v & 3)


def _build_tables():
    smul = []
    for s in range(4):
        row = bytearray(256)
        for v in range(256):
            row[v] = pack([gf4.mul(s, c) for c in unpack(v)])
        smul.append(bytes(row))
    norm = bytearray(256)
    lead = [-1] * 256
    for v in range(1, 256):
        coords = unpack(v)
        pos = next(i for i, c in enumerate(coords) if c)
        lead[v] = pos
        norm[v] = smul[gf4.inv(coords[pos])][v]
    return tuple(smul), bytes(norm), tuple(lead)


#: SMUL[s][v] = packed vector of s times the vector packed in v.
SMUL, NORM, LEAD = _build_tables()


def dot(u: int, v: int) -> int:
    """Bilinear form sum(u_i * v_i) of two packed vectors."""
    acc = 0
    for uc, vc in zip(unpack(u), unpack(v)):
        acc ^= gf4.MUL[uc][vc]
    return acc


def conj_vector(v: int) -> int:
    """Entrywise conjugation of a packed vector."""
    return pack([gf4.conj(c) for c in unpack(v)])


class RankDeficiencyError(ValueError):
    """The first four frame points do not span PG(3,4)."""


class FrameError(ValueError):
    """The fifth frame point lies on a coordinate face of the first four."""


@dataclass(frozen=True)
class Point:
    index: int
    coords: tuple
    packed: int

    def __str__(self):
        return "(" + ":".join(gf4.name(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Line:
    index: int
    points: tuple  # 5 point indices, sorted
    span_pair: tuple  # lexicographically least generating pair


@dataclass(frozen=True)
class Plane:
    index: int
    coeffs: tuple
    points: tuple  # 21 point indices, sorted
    point_set: frozenset


@dataclass(frozen=True)
class BaerSubgeometry:
    points: tuple  # 15 point indices, sorted
    frame: tuple  # the 5 generating points


def enumerate_points():
    """The 85 points of PG(3,4) in lexicographic coordinate order."""
    pts = []
    for v in range(1, 256):
        if NORM[v] == v:
            pts.append(Point(index=len(pts), coords=unpack(v), packed=v))
    return pts


class ProjectiveSpace:
    """Canonical enumeration of PG(3,4) with incidence lookup tables."""

    def __init__(self):
        self.points = enumerate_points()
        assert len(self.points) == 85
        self.point_index_by_packed = {p.packed: p.index for p in self.points}

        line_pts = {}  # sorted 5-tuple -> generating pair first seen
        for i, j in combinations(range(85), 2):
            key = self._span_points(i, j)
            line_pts.setdefault(key, (i, j))
        self.lines = [
            Line(index=k, points=key, span_pair=line_pts[key])
            for k, key in enumerate(sorted(line_pts))
        ]
        self.line_index_by_points = {ln.points: ln.index for ln in self.lines}
        self._line_of_pair = {}
        self.lines_through = [[] for _ in range(85)]
        for ln in self.lines:
            for a, b in combinations(ln.points, 2):
                self._line_of_pair[(a, b)] = ln.index
            for p in ln.points:
                self.lines_through[p].append(ln.index)

        self.planes = []
        for coeff_pt in self.points:  # plane coefficient vectors normalise like points
            incident = tuple(
                q.index for q in self.points if dot(coeff_pt.packed, q.packed) == 0
            )
            self.planes.append(
                Plane(
                    index=len(self.planes),
                    coeffs=coeff_pt.coords,
                    points=incident,
                    point_set=frozenset(incident),
                )
            )
        self.plane_index_by_coeffs = {pl.coeffs: pl.index for pl in self.planes}

    def _span_points(self, i, j):
        u = self.points[i].packed
        w = self.points[j].packed
        members = [u, w, u ^ w, u ^ SMUL[2][w], u ^ SMUL[3][w]]
        return tuple(sorted(self.point_index_by_packed[NORM[m]] for m in members))

    def line_through(self, p: int, q: int) -> Line:
        """The unique line through two distinct points."""
        if p == q:
            raise ValueError("line_through requires two distinct points")
        a, b = (p, q) if p < q else (q, p)
        return self.lines[self._line_of_pair[(a, b)]]

    def plane_by_coeff_vector(self, packed: int) -> Plane:
        return self.planes[self.plane_index_by_coeffs[unpack(NORM[packed])]]

    def span_rank(self, point_indices) -> int:
        """Rank over GF(4) of the representative vectors, by exact elimination."""
        if not point_indices:
            raise ValueError("span_rank requires a nonempty point set")
        basis = []  # packed vectors with strictly increasing leading positions
        for idx in point_indices:
            v = self._reduce(self.points[idx].packed, basis)
            if v:
                basis.append(NORM[v])
                basis.sort(key=lambda b: LEAD[b])
        return len(basis)

    @staticmethod
    def _reduce(v, basis):
        for b in basis:
            pos = LEAD[b]
            c = (v >> (6 - 2 * pos)) & 3
            if c:
                # b is normalised to leading coefficient 1, so subtract c*b
                v ^= SMUL[c][b]
        return v

    def baer_closure(self, frame) -> BaerSubgeometry:
        """Close a frame of PG(3,4) to its 15-point Baer subgeometry.

        Scales representatives v1..v4 of the first four points so that their
        sum represents the fifth, then returns the normalised points of all
        nonzero GF(2)-combinations of the scaled representatives.
        """
        frame = tuple(frame)
        if len(frame) != 5 or len(set(frame)) != 5:
            raise ValueError("a frame consists of 5 distinct points")
        vs = [self.points[i].packed for i in frame[:4]]
        target = self.points[frame[4]].packed
        lam = self._solve4(vs, target)
        if lam is None:
            raise RankDeficiencyError(
                f"first four frame points {frame[:4]} are projectively dependent"
            )
        if 0 in lam:
            raise FrameError(
                f"point {frame[4]} lies on a coordinate face of {frame[:4]}"
            )
        scaled = [SMUL[lam[i]][vs[i]] for i in range(4)]
        members = set()
        for mask in range(1, 16):
            v = 0
            for i in range(4):
                if mask >> i & 1:
                    v ^= scaled[i]
            members.add(self.point_index_by_packed[NORM[v]])
        assert len(members) == 15
        return BaerSubgeometry(points=tuple(sorted(members)), frame=frame)

    @staticmethod
    def _solve4(cols, rhs):
        """Solve the 4x4 system with the given packed column vectors; None if singular."""
        rows = []
        for pos in range(4):
            shift = 6 - 2 * pos
            rows.append([(c >> shift) & 3 for c in cols] + [(rhs >> shift) & 3])
        for col in range(4):
            piv = next((r for r in range(col, 4) if rows[r][col]), None)
            if piv is None:
                return None
            rows[col], rows[piv] = rows[piv], rows[col]
            ic = gf4.inv(rows[col][col])
            rows[col] = [gf4.mul(ic, x) for x in rows[col]]
            for r in range(4):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [x ^ gf4.mul(f, y) for x, y in zip(rows[r], rows[col])]
        return tuple(rows[i][4] for i in range(4))

    def is_baer_point_set(self, pts) -> bool:
        """Check the Baer property: every joining line meets the set in 3 points."""
        pts = set(pts)
        if len(pts) != 15:
            return False
        for a, b in combinations(sorted(pts), 2):
            line = self.line_through(a, b)
            if sum(1 for x in line.points if x in pts) != 3:
                return False
        return True
