"""The Hermitian surface of PG(3,4) and its polarity.

The form is h(x, y) = sum_i x_i * G[i][j] * conj(y_j) with a hermitian
Gram matrix G (G[i][j] == conj(G[j][i])).  The default G is the identity,
so h(x, x) = 0 exactly when x has an even number of nonzero coordinates.
Every line of the space meets the surface in 1, 3 or 5 points (tangent,
secant, generator); the 45 surface points and 27 generators form a
generalized quadrangle of order (4, 2).
"""

from dataclasses import dataclass

from . import gf4
from .projective import ProjectiveSpace, pack


class SurfaceStructureError(RuntimeError):
    """A census or incidence constraint of the surface failed."""


def _det4(m) -> int:
    """Determinant of a 4x4 matrix over GF(4) by cofactor expansion."""

    def det3(a):
        t = 0
        t ^= gf4.mul(a[0][0], gf4.mul(a[1][1], a[2][2]))
        t ^= gf4.mul(a[0][0], gf4.mul(a[1][2], a[2][1]))
        t ^= gf4.mul(a[0][1], gf4.mul(a[1][0], a[2][2]))
        t ^= gf4.mul(a[0][1], gf4.mul(a[1][2], a[2][0]))
        t ^= gf4.mul(a[0][2], gf4.mul(a[1][0], a[2][1]))
        t ^= gf4.mul(a[0][2], gf4.mul(a[1][1], a[2][0]))
        return t

    total = 0
    for j in range(4):
        minor = [[m[r][c] for c in range(4) if c != j] for r in range(1, 4)]
        total ^= gf4.mul(m[0][j], det3(minor))
    return total


@dataclass(frozen=True)
class UnitaryPolarity:
    """A nondegenerate hermitian form on GF(4)^4, given by its Gram matrix."""

    gram: tuple

    def __post_init__(self):
        if len(self.gram) != 4 or any(len(r) != 4 for r in self.gram):
            raise ValueError("gram matrix must be 4x4")
        for i in range(4):
            for j in range(4):
                if self.gram[i][j] != gf4.conj(self.gram[j][i]):
                    raise ValueError("gram matrix is not hermitian-symmetric")
        if _det4(self.gram) == 0:
            raise ValueError("gram matrix is degenerate")

    @classmethod
    def identity(cls) -> "UnitaryPolarity":
        rows = tuple(
            tuple(gf4.ONE if i == j else gf4.ZERO for j in range(4)) for i in range(4)
        )
        return cls(rows)


def hermitian_eval(pol: UnitaryPolarity, x, y) -> int:
    """h(x, y) for coordinate 4-tuples x, y; sesquilinear in y."""
    total = 0
    for i in range(4):
        xi = x[i]
        if xi == 0:
            continue
        row = pol.gram[i]
        acc = 0
        for j in range(4):
            acc ^= gf4.mul(row[j], gf4.conj(y[j]))
        total ^= gf4.mul(xi, acc)
    return total


def polar_coeffs(pol: UnitaryPolarity, coords) -> tuple:
    """Coefficient vector of the polar plane of a point: G * conj(p)."""
    out = []
    for i in range(4):
        acc = 0
        for j in range(4):
            acc ^= gf4.mul(pol.gram[i][j], gf4.conj(coords[j]))
        out.append(acc)
    return tuple(out)


class HermitianSurface:
    """Point and line classification of the space under a unitary polarity."""

    def __init__(self, space: ProjectiveSpace, polarity: UnitaryPolarity = None):
        if polarity is None:
            polarity = UnitaryPolarity.identity()
        self.space = space
        self.polarity = polarity

        iso = []
        for pt in space.points:
            if hermitian_eval(polarity, pt.coords, pt.coords) == 0:
                iso.append(pt.index)
        self.points = tuple(iso)
        self.point_set = frozenset(iso)
        self.local_index = {g: i for i, g in enumerate(iso)}

        gens, secs, tans = [], [], []
        for ln in space.lines:
            k = sum(1 for p in ln.points if p in self.point_set)
            if k == 5:
                gens.append(ln.index)
            elif k == 3:
                secs.append(ln.index)
            elif k == 1:
                tans.append(ln.index)
            else:
                raise SurfaceStructureError(
                    "line %d meets the surface in %d points" % (ln.index, k)
                )
        self.generators = tuple(gens)
        self.secants = tuple(secs)
        self.tangents = tuple(tans)
        self.generator_set = frozenset(gens)
        self.secant_set = frozenset(secs)

        gthrough = {g: [] for g in iso}
        for li in gens:
            for p in space.lines[li].points:
                gthrough[p].append(li)
        self._generators_through = {p: tuple(v) for p, v in gthrough.items()}

        # collinearity over generators, as 45-bit masks on local indices
        cmask = [0] * len(iso)
        for li in gens:
            pts = [self.local_index[p] for p in space.lines[li].points]
            for a in pts:
                for b in pts:
                    if a != b:
                        cmask[a] |= 1 << b
        self.collinear_mask = tuple(cmask)

        self._polar_line_cache = {}

    def is_isotropic(self, point_index: int) -> bool:
        return point_index in self.point_set

    def polar_plane(self, point_index: int) -> int:
        """Plane index of the polar plane of a point (any point of the space)."""
        coords = self.space.points[point_index].coords
        packed = pack(polar_coeffs(self.polarity, coords))
        return self.space.plane_by_coeff_vector(packed).index

    def generators_through(self, point_index: int) -> tuple:
        if point_index not in self.point_set:
            raise ValueError("point %d is not on the surface" % point_index)
        return self._generators_through[point_index]

    def polar_line(self, line_index: int) -> int:
        """The line polar to a given line: meet of the polar planes of its points."""
        cached = self._polar_line_cache.get(line_index)
        if cached is not None:
            return cached
        ln = self.space.lines[line_index]
        a, b = ln.points[0], ln.points[1]
        sa = self.space.planes[self.polar_plane(a)].point_set
        sb = self.space.planes[self.polar_plane(b)].point_set
        common = sorted(sa & sb)
        if len(common) != 5:
            raise SurfaceStructureError(
                "polar planes of line %d meet in %d points" % (line_index, len(common))
            )
        out = self.space.line_index_by_points[tuple(common)]
        self._polar_line_cache[line_index] = out
        return out

    def secant_six(self, line_index: int) -> tuple:
        """The six surface points on a secant and its polar line, sorted."""
        if line_index not in self.secant_set:
            raise ValueError("line %d is not a secant" % line_index)
        mate = self.polar_line(line_index)
        pts = [
            p
            for p in self.space.lines[line_index].points + self.space.lines[mate].points
            if p in self.point_set
        ]
        if len(pts) != 6 or len(set(pts)) != 6:
            raise SurfaceStructureError(
                "secant %d and its polar line carry %d surface points"
                % (line_index, len(set(pts)))
            )
        return tuple(sorted(pts))
