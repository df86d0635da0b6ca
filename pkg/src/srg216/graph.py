"""The graph on the 216 ovoid vertices and its exact certification.

Vertices are the 216 (subquadrangle, ovoid) pairs; two are adjacent when
their ovoids share exactly one point and their parent subquadrangles share
six points.  Everything here is integer arithmetic on bitmasks and exact
big-integer elimination; no floating point.
"""

import math
from dataclasses import dataclass

import numpy as np


class CertificationError(RuntimeError):
    """A regularity or common-neighbour requirement failed."""


class CaseViolationError(RuntimeError):
    """A vertex pair fell outside the allowed meeting cases."""


class SpectrumError(RuntimeError):
    """Rank, trace, or factored-identity verification failed."""


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def feasible(self) -> bool:
        return self.k * (self.k - self.lam - 1) == (self.v - self.k - 1) * self.mu


@dataclass(frozen=True)
class SrgGraph:
    n: int
    masks: tuple  # per-vertex adjacency bitmasks
    degrees: tuple

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)


@dataclass(frozen=True)
class PairReport:
    """Aggregated census of (|W∩W'|, |E∩E'|, adjacent, common neighbours)."""

    counts: dict

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class SpectrumCertificate:
    eigenvalues: tuple  # (k, r, s)
    multiplicities: tuple  # (1, mult(r), mult(s))
    rank_r: int  # rank of A - r*I


# |W∩W'| = 15 encodes equal parents.  Non-adjacent pairs always have 8
# common neighbours, adjacent pairs 4.
ALLOWED_CASES = frozenset(
    [
        (6, 1, True, 4),
        (6, 0, False, 8),
        (6, 2, False, 8),
        (3, 0, False, 8),
        (3, 1, False, 8),
        (15, 1, False, 8),
    ]
)


def _vertex_masks(surface, subs, vertices):
    loc = surface.local_index
    omask = [0] * len(vertices)
    wmask = [0] * len(vertices)
    for i, v in enumerate(vertices):
        m = 0
        for p in v.points:
            m |= 1 << loc[p]
        omask[i] = m
        wmask[i] = subs[v.parent].mask
    return omask, wmask


def build_graph(surface, subs, vertices) -> SrgGraph:
    """Adjacency: ovoids share exactly 1 point, parents share 6 points."""
    omask, wmask = _vertex_masks(surface, subs, vertices)
    n = len(vertices)
    adj = [0] * n
    for u in range(n):
        ou = omask[u]
        wu = wmask[u]
        for v in range(u + 1, n):
            if (ou & omask[v]).bit_count() == 1 and (wu & wmask[v]).bit_count() == 6:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return SrgGraph(n=n, masks=tuple(adj), degrees=tuple(m.bit_count() for m in adj))


def certify_srg(g: SrgGraph) -> SrgParams:
    """Entrywise check of A^2 = k·I + λ·A + μ·(J − I − A), in integers.

    For the target graph this is A^2 + 4A − 32I = 8J.  Off-diagonal entries
    of A^2 are common-neighbour popcounts; diagonal entries are degrees.
    """
    n = g.n
    k = g.degrees[0]
    for u, d in enumerate(g.degrees):
        if d != k:
            raise CertificationError("vertex %d has degree %d, expected %d" % (u, d, k))
    lam = None
    mu = None
    for u in range(n):
        row = g.masks[u]
        for v in range(u + 1, n):
            c = (row & g.masks[v]).bit_count()
            if row >> v & 1:
                if lam is None:
                    lam = c
                elif c != lam:
                    raise CertificationError(
                        "adjacent pair (%d, %d) has %d common neighbours, expected %d"
                        % (u, v, c, lam)
                    )
            else:
                if mu is None:
                    mu = c
                elif c != mu:
                    raise CertificationError(
                        "non-adjacent pair (%d, %d) has %d common neighbours, expected %d"
                        % (u, v, c, mu)
                    )
    params = SrgParams(n, k, lam, mu)
    if not params.feasible():
        raise CertificationError(
            "feasibility identity k(k-lam-1) = (v-k-1)mu fails for %r" % (params,)
        )
    return params


def pair_case_analysis(g: SrgGraph, surface, subs, vertices) -> PairReport:
    """Census of all C(216,2) pairs against the allowed meeting cases."""
    omask, wmask = _vertex_masks(surface, subs, vertices)
    counts = {}
    for u in range(g.n):
        ou = omask[u]
        wu = wmask[u]
        row = g.masks[u]
        for v in range(u + 1, g.n):
            wmeet = (wu & wmask[v]).bit_count()
            emeet = (ou & omask[v]).bit_count()
            adj = bool(row >> v & 1)
            common = (row & g.masks[v]).bit_count()
            key = (wmeet, emeet, adj, common)
            if key not in ALLOWED_CASES:
                raise CaseViolationError(
                    "pair (%d, %d) falls in case |W meet|=%d |E meet|=%d "
                    "adjacent=%s common=%d" % (u, v, wmeet, emeet, adj, common)
                )
            counts[key] = counts.get(key, 0) + 1
    return PairReport(counts=counts)


def adjacency_matrix(g: SrgGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u in range(g.n):
        row = g.masks[u]
        for v in range(g.n):
            if row >> v & 1:
                a[u, v] = 1
    return a


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free elimination (exact)."""
    m = [[int(x) for x in r] for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        prow = m[rank]
        for r in range(rank + 1, nr):
            row = m[r]
            fr = row[col]
            for c in range(col, nc):
                # exact division: entries stay k x k minors of the input
                row[c] = (pv * row[c] - fr * prow[c]) // prev
        prev = pv
        rank += 1
        if rank == nr:
            break
    return rank


def spectrum_certificate(g: SrgGraph, params: SrgParams) -> SpectrumCertificate:
    """Integer eigenvalues from the parameters, multiplicities from exact rank.

    Verifies (A − rI)(A − sI) = μJ by exact matrix multiplication, computes
    rank(A − rI) by fraction-free elimination, and checks the trace identity
    k + r·mult(r) + s·mult(s) = 0.
    """
    disc = (params.lam - params.mu) ** 2 + 4 * (params.k - params.mu)
    root = math.isqrt(disc)
    if root * root != disc or (params.lam - params.mu + root) % 2:
        raise SpectrumError("eigenvalues are not integers for %r" % (params,))
    r = (params.lam - params.mu + root) // 2
    s = r - root
    n = params.v
    a = adjacency_matrix(g)
    eye = np.eye(n, dtype=np.int64)
    prod = (a - r * eye) @ (a - s * eye)
    if not np.array_equal(prod, np.full((n, n), params.mu, dtype=np.int64)):
        bad = np.argwhere(prod != params.mu)[0]
        raise SpectrumError(
            "factored identity fails at entry (%d, %d)" % (bad[0], bad[1])
        )
    rank = bareiss_rank(a - r * eye)
    mult_r = n - rank
    mult_s = rank - 1
    if params.k + r * mult_r + s * mult_s != 0:
        raise SpectrumError(
            "trace inconsistency: %d + %d*%d + %d*%d != 0"
            % (params.k, r, mult_r, s, mult_s)
        )
    return SpectrumCertificate(
        eigenvalues=(params.k, r, s),
        multiplicities=(1, mult_r, mult_s),
        rank_r=rank,
    )


def triangle_count(g: SrgGraph) -> int:
    total = 0
    for u in range(g.n):
        row_u = g.masks[u]
        rest = row_u >> (u + 1)
        v = u + 1
        while rest:
            if rest & 1:
                total += ((row_u & g.masks[v]) >> (v + 1)).bit_count()
            rest >>= 1
            v += 1
    return total


def is_connected(g: SrgGraph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        u = 0
        rest = frontier
        while rest:
            if rest & 1:
                nxt |= g.masks[u]
            rest >>= 1
            u += 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def neighbor_secant_decomposition(g: SrgGraph, surface, subs, vertices, u: int):
    """Partition the neighbours of u by the joining secants of its ovoid.

    The 5 points of the ovoid E(u) span 10 joining lines, all secants of
    the surface.  A neighbour's parent subquadrangle meets W(u) in the six
    surface points of one of those secants and its polar line; grouping
    neighbours by that secant yields 10 groups of 4.  Returns a dict
    secant line index -> sorted tuple of neighbour vertex ids.
    """
    from itertools import combinations

    vu = vertices[u]
    wu = subs[vu.parent]
    space = surface.space
    sixes = {}
    for a, b in combinations(vu.points, 2):
        s = space.line_through(a, b).index
        if s not in surface.secant_set:
            raise CaseViolationError(
                "ovoid points %d, %d of vertex %d join on a non-secant line"
                % (a, b, u)
            )
        sixes[s] = surface.secant_six(s)
    groups = {s: [] for s in sixes}
    row = g.masks[u]
    for v in range(g.n):
        if not row >> v & 1:
            continue
        common = tuple(sorted(wu.point_set & subs[vertices[v].parent].point_set))
        matches = [s for s, six in sixes.items() if six == common]
        if len(matches) != 1:
            raise CaseViolationError(
                "neighbour %d of vertex %d matches %d secant groups"
                % (v, u, len(matches))
            )
        groups[matches[0]].append(v)
    return {s: tuple(sorted(vs)) for s, vs in groups.items()}
