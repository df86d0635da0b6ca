"""Unitary collineations and their action on the graph.

A collineation is given by an invertible 4x4 matrix M over GF(4) with
conjugate-transpose(M) * gram * M = gram, optionally composed with
entrywise conjugation (the semilinear flag).  Collineations permute the
surface points, hence the subquadrangles, hence the 216 ovoid vertices;
group and stabilizer orders are certified with a stabilizer chain.
"""

import random
from dataclasses import dataclass

from . import gf4
from .projective import NORM, pack


class SearchBudgetError(RuntimeError):
    """The random search exhausted its trial budget."""


class ActionConsistencyError(RuntimeError):
    """An induced map failed to be a bijection of the expected objects."""


@dataclass(frozen=True)
class UnitaryCollineation:
    matrix: tuple  # 4 rows of 4 field elements
    semilinear: bool = False


IDENTITY_MATRIX = tuple(
    tuple(gf4.ONE if i == j else gf4.ZERO for j in range(4)) for i in range(4)
)


def matrix_apply(matrix, coords) -> tuple:
    out = []
    for i in range(4):
        acc = 0
        row = matrix[i]
        for j in range(4):
            acc ^= gf4.MUL[row[j]][coords[j]]
        out.append(acc)
    return tuple(out)


def is_unitary(matrix, gram) -> bool:
    """conj-transpose(M) * gram * M == gram, checked entrywise."""
    gm = [
        [0] * 4 for _ in range(4)
    ]
    for i in range(4):
        for j in range(4):
            acc = 0
            for k in range(4):
                acc ^= gf4.MUL[gram[i][k]][matrix[k][j]]
            gm[i][j] = acc
    for i in range(4):
        for j in range(4):
            acc = 0
            for k in range(4):
                acc ^= gf4.MUL[gf4.CONJ[matrix[k][i]]][gm[k][j]]
            if acc != gram[i][j]:
                return False
    return True


def _fast_unitary_identity_gram(m) -> bool:
    # column norms: sum_k conj(x)x = count of nonzero entries mod 2, must be 1
    for i in range(4):
        nz = 0
        for k in range(4):
            if m[k][i]:
                nz += 1
        if not nz & 1:
            return False
    for i in range(4):
        for j in range(i + 1, 4):
            acc = 0
            for k in range(4):
                acc ^= gf4.MUL[gf4.CONJ[m[k][i]]][m[k][j]]
            if acc:
                return False
    return True


def validate_collineation(pol, g: UnitaryCollineation):
    if not is_unitary(g.matrix, pol.gram):
        raise ValueError("matrix does not satisfy the unitary identity")


def frobenius_collineation() -> UnitaryCollineation:
    return UnitaryCollineation(matrix=IDENTITY_MATRIX, semilinear=True)


def _is_scalar(m) -> bool:
    d = m[0][0]
    return all(m[i][j] == (d if i == j else 0) for i in range(4) for j in range(4))


def iter_unitary_collineations(pol, seed: int, budget: int = 4_000_000):
    """Yield non-scalar unitary collineations from a seeded random stream.

    Deterministic given seed: the k-th yield is the k-th non-scalar
    unitary matrix in the stream.  The iterator is exhausted after
    ``budget`` trials.
    """
    rng = random.Random(seed)
    fast = pol.gram == IDENTITY_MATRIX
    for _ in range(budget):
        bits = rng.getrandbits(32)
        m = tuple(
            tuple((bits >> (2 * (4 * i + j))) & 3 for j in range(4)) for i in range(4)
        )
        if fast:
            if not _fast_unitary_identity_gram(m):
                continue
        elif not is_unitary(m, pol.gram):
            continue
        if _is_scalar(m):
            continue
        yield UnitaryCollineation(matrix=m)


def find_unitary_generators(pol, seed: int, count: int = 2, budget: int = 2_000_000):
    """Seeded random search for unitary matrices; Frobenius appended last.

    Raises SearchBudgetError if the budget runs out before ``count``
    linear generators appear.
    """
    if count < 2:
        raise ValueError("count must be at least 2")
    found = []
    for g in iter_unitary_collineations(pol, seed, budget=budget):
        found.append(g)
        if len(found) == count:
            break
    if len(found) < count:
        raise SearchBudgetError(
            "found %d of %d unitary generators in %d trials"
            % (len(found), count, budget)
        )
    found.append(frobenius_collineation())
    return found


def deterministic_generators(pol):
    """Hand-checkable generators for the identity gram: permutations,
    a diagonal torus element, and two transvections x -> x + h(x,a)a
    with a isotropic."""
    if pol.gram != IDENTITY_MATRIX:
        raise ValueError("deterministic generators assume the identity gram")
    w, w2 = gf4.OMEGA, gf4.OMEGA2
    cycle = (
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
        (1, 0, 0, 0),
    )
    swap = (
        (0, 1, 0, 0),
        (1, 0, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    )
    torus = (
        (w, 0, 0, 0),
        (0, w2, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    )
    gens = [cycle, swap, torus]
    for a in ((1, 1, 1, 1), (1, w, w, 1)):
        conj_a = tuple(gf4.CONJ[c] for c in a)
        t = tuple(
            tuple(
                (gf4.ONE if i == j else gf4.ZERO) ^ gf4.MUL[a[i]][conj_a[j]]
                for j in range(4)
            )
            for i in range(4)
        )
        gens.append(t)
    out = []
    for m in gens:
        g = UnitaryCollineation(matrix=m)
        validate_collineation(pol, g)
        out.append(g)
    out.append(frobenius_collineation())
    return out


def point_permutation(space, g: UnitaryCollineation) -> tuple:
    """Images of the 85 point indices under the collineation."""
    images = []
    for pt in space.points:
        y = matrix_apply(g.matrix, pt.coords)
        if g.semilinear:
            y = tuple(gf4.CONJ[c] for c in y)
        packed = pack(y)
        if packed == 0:
            raise ActionConsistencyError("matrix is singular")
        images.append(space.point_index_by_packed[NORM[packed]])
    if len(set(images)) != len(images):
        raise ActionConsistencyError("collineation does not permute the points")
    return tuple(images)


def preserves_surface(surface, pointperm) -> bool:
    return all(pointperm[p] in surface.point_set for p in surface.points)


def induce_vertex_permutation(space, g, vertices, pointperm=None) -> tuple:
    """The permutation of the 216 ovoid vertices induced by a collineation."""
    if pointperm is None:
        pointperm = point_permutation(space, g)
    index = {v.points: v.id for v in vertices}
    images = []
    for v in vertices:
        img = tuple(sorted(pointperm[p] for p in v.points))
        vid = index.get(img)
        if vid is None:
            raise ActionConsistencyError(
                "image of ovoid %d is not an enumerated ovoid" % v.id
            )
        images.append(vid)
    if sorted(images) != list(range(len(vertices))):
        raise ActionConsistencyError("induced vertex map is not a bijection")
    return tuple(images)


def induce_subquadrangle_permutation(vperm, vertices) -> tuple:
    """The action on parent subquadrangles induced by a vertex permutation."""
    nparents = max(v.parent for v in vertices) + 1
    images = [None] * nparents
    for v in vertices:
        target = vertices[vperm[v.id]].parent
        if images[v.parent] is None:
            images[v.parent] = target
        elif images[v.parent] != target:
            raise ActionConsistencyError(
                "vertex permutation splits parent subquadrangle %d" % v.parent
            )
    if sorted(images) != list(range(nparents)):
        raise ActionConsistencyError("induced parent map is not a bijection")
    return tuple(images)


def is_graph_automorphism(graph, perm) -> bool:
    for u in range(graph.n):
        row = graph.masks[u]
        img = 0
        v = 0
        rest = row
        while rest:
            if rest & 1:
                img |= 1 << perm[v]
            rest >>= 1
            v += 1
        if img != graph.masks[perm[u]]:
            return False
    return True


def verify_transitivity(perms, n: int, start: int = 0) -> int:
    """Size of the orbit of a point under the generated group."""
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for p in perms:
            y = p[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen)


def _mult(p, q):
    return tuple(p[x] for x in q)


def _inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def group_order(perms, base_hint=()) -> int:
    """Exact order of the generated permutation group (stabilizer chain).

    Base points are taken from base_hint first (those actually moved),
    then by least moved point.  At each level the point stabilizer is
    generated by the Schreier generators of the level above.
    """
    if not perms:
        return 1
    n = len(perms[0])
    ident = tuple(range(n))
    gens = sorted(set(p for p in perms if p != ident))
    return _chain_order(gens, n, tuple(base_hint), ident)


def _chain_order(gens, n, base_hint, ident) -> int:
    if not gens:
        return 1
    b = None
    for h in base_hint:
        if any(g[h] != h for g in gens):
            b = h
            break
    if b is None:
        b = next(x for x in range(n) if any(g[x] != x for g in gens))
    trans = {b: ident}
    queue = [b]
    while queue:
        x = queue.pop()
        ux = trans[x]
        for g in gens:
            y = g[x]
            if y not in trans:
                trans[y] = _mult(g, ux)
                queue.append(y)
    stab = set()
    for x, ux in trans.items():
        for g in gens:
            sg = _mult(_inv(trans[g[x]]), _mult(g, ux))
            if sg != ident:
                stab.add(sg)
    return len(trans) * _chain_order(sorted(stab), n, base_hint, ident)


def orbit_size(perms, point: int) -> int:
    return verify_transitivity(perms, len(perms[0]), start=point)


def stabilizer_order(perms, point: int) -> int:
    """Order of the stabilizer of a point, by orbit-stabilizer on the chain."""
    total = group_order(perms, base_hint=(point,))
    orb = orbit_size(perms, point)
    if total % orb:
        raise ActionConsistencyError(
            "orbit size %d does not divide group order %d" % (orb, total)
        )
    return total // orb


def stabilized_order(make_perms, initial: int = 2, attempts: int = 3,
                     max_count: int = 24):
    """Grow a generator set until the chain order is stable.

    ``make_perms(count)`` must return the permutation list induced by the
    first ``count`` generators of a deterministic stream, so the result
    is reproducible.  Returns (order, count_used, perms).
    """
    count = initial
    perms = make_perms(count)
    order = group_order(perms)
    stable = 0
    while stable < attempts:
        if count >= max_count:
            raise SearchBudgetError(
                "group order did not stabilize within %d generators" % max_count
            )
        count += 1
        perms = make_perms(count)
        nxt = group_order(perms)
        if nxt == order:
            stable += 1
        else:
            if nxt % order:
                raise ActionConsistencyError(
                    "group order %d is not a multiple of %d" % (nxt, order)
                )
            order = nxt
            stable = 0
    return order, count, perms
