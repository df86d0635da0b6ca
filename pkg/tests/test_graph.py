"""The graph on the 216 ovoid vertices and its regularity certificates."""

from itertools import combinations

import numpy as np
import pytest

from srg216.graph import (
    ALLOWED_CASES,
    SpectrumError,
    adjacency_matrix,
    bareiss_rank,
    build_graph,
    certify_srg,
    is_connected,
    neighbor_secant_decomposition,
    pair_case_analysis,
    spectrum_certificate,
    triangle_count,
)


def test_adjacency_rule_spot_check(surface, subs, vertices, graph):
    # adjacency means exactly one common ovoid point and the parents
    # meet in 6 surface points
    for u in (0, 17, 99):
        for v in range(u + 1, 216):
            share = len(vertices[u].point_set & vertices[v].point_set)
            wmeet = len(
                subs[vertices[u].parent].point_set
                & subs[vertices[v].parent].point_set
            )
            expect = share == 1 and wmeet == 6
            assert graph.adjacent(u, v) == expect


def test_parameters(graph, srg_params):
    assert (srg_params.v, srg_params.k, srg_params.lam, srg_params.mu) == (
        216, 40, 4, 8)
    assert srg_params.feasible()
    degrees = [bin(m).count("1") for m in graph.masks]
    assert degrees == [40] * 216
    assert sum(degrees) // 2 == 4320


def test_symmetry_of_masks(graph):
    for u in range(216):
        m = graph.masks[u]
        assert not (m >> u) & 1
        for v in range(u + 1, 216):
            assert ((m >> v) & 1) == ((graph.masks[v] >> u) & 1)


def test_same_parent_never_adjacent(vertices, graph):
    for parent in range(36):
        ids = range(6 * parent, 6 * parent + 6)
        for u, v in combinations(ids, 2):
            assert not graph.adjacent(u, v)


def test_matrix_equation_independent(graph):
    # independent oracle: numpy matmul of A^2 + 4A - 32I against 8J
    a = adjacency_matrix(graph)
    assert a.dtype == np.int64
    assert np.array_equal(a, a.T)
    assert int(np.trace(a)) == 0
    lhs = a @ a + 4 * a - 32 * np.eye(216, dtype=np.int64)
    assert np.array_equal(lhs, np.full((216, 216), 8, dtype=np.int64))


def test_common_neighbour_counts(graph):
    a = adjacency_matrix(graph)
    sq = a @ a
    for u in range(0, 216, 31):
        for v in range(u + 1, 216, 17):
            expect = 4 if graph.adjacent(u, v) else 8
            assert sq[u, v] == expect


def test_pair_case_analysis(surface, subs, vertices, graph):
    rep = pair_case_analysis(graph, surface, subs, vertices)
    assert rep.total == 216 * 215 // 2
    assert set(rep.counts) <= ALLOWED_CASES
    assert rep.counts[(6, 1, True, 4)] == 4320
    assert rep.counts[(15, 1, False, 8)] == 540
    assert rep.counts[(6, 0, False, 8)] == 6480
    assert rep.counts[(6, 2, False, 8)] == 2160
    assert rep.counts[(3, 0, False, 8)] == 6480
    assert rep.counts[(3, 1, False, 8)] == 3240
    # consistency: 540 same-parent + 36*20*36/2 six-meets + 36*15*36/2
    # three-meets account for all pairs
    assert sum(
        n for (w, _, _, _), n in rep.counts.items() if w == 6) == 12960
    assert sum(
        n for (w, _, _, _), n in rep.counts.items() if w == 3) == 9720


def test_spectrum_certificate(graph, srg_params):
    cert = spectrum_certificate(graph, srg_params)
    assert cert.eigenvalues == (40, 4, -8)
    assert cert.multiplicities == (1, 140, 75)
    assert cert.rank_r == 76
    # trace balances: 40 + 4*140 - 8*75 = 0
    k, r, s = cert.eigenvalues
    _, mr, ms = cert.multiplicities
    assert k + r * mr + s * ms == 0
    assert 1 + mr + ms == 216


def test_spectrum_against_float_eigenvalues(graph):
    vals = np.linalg.eigvalsh(adjacency_matrix(graph).astype(float))
    rounded = sorted(int(round(x)) for x in vals)
    assert max(abs(v - r) for v, r in zip(sorted(vals), rounded)) < 1e-9
    assert rounded.count(-8) == 75
    assert rounded.count(4) == 140
    assert rounded.count(40) == 1


def test_bareiss_rank_oracles():
    assert bareiss_rank([[1, 0], [0, 1]]) == 2
    assert bareiss_rank([[2, 4], [1, 2]]) == 1
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[0, 1, 0], [0, 0, 1]]) == 2
    # needs the rank-profile column skip: leading zero column
    assert bareiss_rank([[0, 2, 3], [0, 4, 6], [0, 1, 7]]) == 2
    rng = np.random.default_rng(5)
    for _ in range(10):
        m = rng.integers(-9, 10, size=(7, 7))
        assert bareiss_rank(m.tolist()) == np.linalg.matrix_rank(
            m.astype(float))


def test_triangles_and_connectivity(graph):
    assert triangle_count(graph) == 5760
    assert is_connected(graph)
    # every edge lies in exactly lambda = 4 triangles
    u = 0
    row = graph.masks[u]
    for v in range(216):
        if row >> v & 1:
            assert bin(row & graph.masks[v]).count("1") == 4


def test_neighbor_secant_decomposition(surface, subs, vertices, graph):
    for u in (0, 77, 215):
        groups = neighbor_secant_decomposition(graph, surface, subs, vertices, u)
        assert len(groups) == 10
        sizes = sorted(len(v) for v in groups.values())
        assert sizes == [4] * 10
        all_ids = sorted(x for vs in groups.values() for x in vs)
        row = graph.masks[u]
        assert all_ids == [v for v in range(216) if row >> v & 1]
        # group secants really join two points of the ovoid
        pts = set(vertices[u].points)
        for s in groups:
            online = pts & set(surface.space.lines[s].points)
            assert len(online) == 2


def test_build_graph_matches_fixture(surface, subs, vertices, graph):
    again = build_graph(surface, subs, vertices)
    assert again.masks == graph.masks


def test_certify_rejects_irregular():
    from srg216.graph import CertificationError, SrgGraph

    # path on 3 vertices is not regular
    masks = (0b010, 0b101, 0b010)
    with pytest.raises(CertificationError):
        certify_srg(SrgGraph(n=3, masks=masks, degrees=(1, 2, 1)))


def test_spectrum_rejects_wrong_params(graph, srg_params):
    from srg216.graph import SrgParams

    bad = SrgParams(v=216, k=40, lam=4, mu=9)
    with pytest.raises((SpectrumError, ValueError)):
        spectrum_certificate(graph, bad)
