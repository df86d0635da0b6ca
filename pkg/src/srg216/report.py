"""Certification report: one record per quantitative claim.

Each record carries a claim id, a plain-language description, the
expected and computed values, a pass flag, and the runtime in integer
milliseconds.  The report passes iff every record passes.  Values are
integers, lists, and dicts of integers (plus booleans); no floats.
"""

import json
import time
from dataclasses import dataclass
from itertools import combinations

from . import cliques as cliques_mod
from . import exports, graph, ovoids, subquadrangles, symmetry

DEFAULT_SEED = 7


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    description: str
    expected: object
    computed: object
    passed: bool
    runtime_ms: int


@dataclass(frozen=True)
class CertificationReport:
    records: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)


def _distinct(values):
    return sorted(set(values))


def _claim_surface_census(build):
    surface = build.surface
    meets = []
    for ln in build.space.lines:
        meets.append(sum(1 for p in ln.points if p in surface.point_set))
    computed = {
        "points": len(surface.points),
        "generators": len(surface.generators),
        "tangents": len(surface.tangents),
        "secants": len(surface.secants),
        "line_meet_sizes": _distinct(meets),
    }
    expected = {
        "points": 45,
        "generators": 27,
        "tangents": 90,
        "secants": 240,
        "line_meet_sizes": [1, 3, 5],
    }
    return expected, computed


def _gq_axiom_scan(points, lines):
    """Violation counts for the three GQ axioms on an abstract point-line
    geometry given as (point list, list of point-tuples)."""
    pos = {p: i for i, p in enumerate(points)}
    lmasks = []
    for ln in lines:
        m = 0
        for p in ln:
            m |= 1 << pos[p]
        lmasks.append(m)
    coll = [0] * len(points)
    pair_violations = 0
    for i, m in enumerate(lmasks):
        for a, b in combinations([pos[p] for p in lines[i]], 2):
            if coll[a] >> b & 1:
                pair_violations += 1  # two points on two common lines
            coll[a] |= 1 << b
            coll[b] |= 1 << a
    line_sizes = _distinct(len(ln) for ln in lines)
    degrees = _distinct(
        sum(1 for m in lmasks if m >> i & 1) for i in range(len(points))
    )
    partner_violations = 0
    for i in range(len(points)):
        for m in lmasks:
            if m >> i & 1:
                continue
            if (coll[i] & m).bit_count() != 1:
                partner_violations += 1
    return {
        "line_sizes": line_sizes,
        "point_degrees": degrees,
        "pair_violations": pair_violations,
        "partner_violations": partner_violations,
    }


def _claim_gq_axioms(build):
    surface = build.surface
    big = _gq_axiom_scan(
        list(surface.points),
        [build.space.lines[li].points for li in surface.generators],
    )
    small_sizes = set()
    small_degrees = set()
    pair_v = 0
    partner_v = 0
    for w in build.subquadrangles:
        scan = _gq_axiom_scan(list(w.points), [sec for _, sec in w.generators])
        small_sizes.update(scan["line_sizes"])
        small_degrees.update(scan["point_degrees"])
        pair_v += scan["pair_violations"]
        partner_v += scan["partner_violations"]
    computed = {
        "surface": big,
        "subquadrangles": {
            "line_sizes": sorted(small_sizes),
            "point_degrees": sorted(small_degrees),
            "pair_violations": pair_v,
            "partner_violations": partner_v,
        },
    }
    expected = {
        "surface": {
            "line_sizes": [5],
            "point_degrees": [3],
            "pair_violations": 0,
            "partner_violations": 0,
        },
        "subquadrangles": {
            "line_sizes": [3],
            "point_degrees": [3],
            "pair_violations": 0,
            "partner_violations": 0,
        },
    }
    return expected, computed


def _claim_subquadrangle_census(build):
    subs = build.subquadrangles
    surface = build.surface
    meet_sizes = set()
    three_counts = []
    six_counts = []
    for w in subs:
        three = 0
        six = 0
        for x in subs:
            if x.id == w.id:
                continue
            k = (w.mask & x.mask).bit_count()
            meet_sizes.add(k)
            if k == 3:
                three += 1
            elif k == 6:
                six += 1
        three_counts.append(three)
        six_counts.append(six)
    triple_sizes = set()
    for s in surface.secants:
        triple_sizes.add(len(subquadrangles.triple_through_secant(surface, subs, s)))
    computed = {
        "count": len(subs),
        "pair_meet_sizes": sorted(meet_sizes),
        "three_point_partners": _distinct(three_counts),
        "six_point_partners": _distinct(six_counts),
        "secant_triple_sizes": sorted(triple_sizes),
    }
    expected = {
        "count": 36,
        "pair_meet_sizes": [3, 6],
        "three_point_partners": [15],
        "six_point_partners": [20],
        "secant_triple_sizes": [3],
    }
    return expected, computed


def _claim_common_partner_counts(build):
    subs = build.subquadrangles
    six_masks = subquadrangles.six_partner_masks(subs)
    three_vals = set()
    six_vals = set()
    pairs = 0
    for i in range(len(subs)):
        for j in range(i + 1, len(subs)):
            k = (subs[i].mask & subs[j].mask).bit_count()
            c = subquadrangles.common_six_partner_count(six_masks, i, j)
            if k == 3:
                three_vals.add(c)
            else:
                six_vals.add(c)
            pairs += 1
    computed = {
        "pairs_checked": pairs,
        "three_point_pairs": sorted(three_vals),
        "six_point_pairs": sorted(six_vals),
    }
    expected = {
        "pairs_checked": 630,
        "three_point_pairs": [12],
        "six_point_pairs": [10],
    }
    return expected, computed


def _claim_ovoid_census(build):
    subs = build.subquadrangles
    verts = build.vertices
    per = [0] * len(subs)
    for v in verts:
        per[v.parent] += 1
    same_meets = set()
    valid_pairs = []
    unique = True
    for w in subs:
        group = [v for v in verts if v.parent == w.id]
        for a, b in combinations(group, 2):
            same_meets.add(len(a.point_set & b.point_set))
        sections = set()
        for _, sec in w.generators:
            for pair in combinations(sec, 2):
                sections.add(pair)
        valid = [
            pair
            for pair in combinations(w.points, 2)
            if pair not in sections
        ]
        valid_pairs.append(len(valid))
        for p, q in valid:
            # raises unless exactly one ovoid of w contains the pair
            ovoids.ovoid_through_pair(w, group, p, q)
    computed = {
        "per_subquadrangle": _distinct(per),
        "total": len(verts),
        "same_parent_meets": sorted(same_meets),
        "valid_pairs_per_subquadrangle": _distinct(valid_pairs),
        "each_valid_pair_on_unique_ovoid": unique,
    }
    expected = {
        "per_subquadrangle": [6],
        "total": 216,
        "same_parent_meets": [1],
        "valid_pairs_per_subquadrangle": [60],
        "each_valid_pair_on_unique_ovoid": True,
    }
    return expected, computed


def _claim_srg(build):
    g = build.graph
    params = graph.certify_srg(g)
    computed = {
        "params": [params.v, params.k, params.lam, params.mu],
        "degrees": _distinct(g.degrees),
        "feasible": params.feasible(),
    }
    expected = {
        "params": [216, 40, 4, 8],
        "degrees": [40],
        "feasible": True,
    }
    return expected, computed


def _claim_pair_cases(build):
    rep = graph.pair_case_analysis(
        build.graph, build.surface, build.subquadrangles, build.vertices
    )
    total_15 = sum(c for k, c in rep.counts.items() if k[0] == 15)
    total_3 = sum(c for k, c in rep.counts.items() if k[0] == 3)
    total_6 = sum(c for k, c in rep.counts.items() if k[0] == 6)
    adjacent = sum(c for k, c in rep.counts.items() if k[2])
    computed = {
        "pairs": rep.total,
        "same_parent_pairs": total_15,
        "three_meet_pairs": total_3,
        "six_meet_pairs": total_6,
        "adjacent_pairs": adjacent,
        "cases_allowed": True,  # pair_case_analysis raises otherwise
    }
    expected = {
        "pairs": 23220,
        "same_parent_pairs": 540,
        "three_meet_pairs": 9720,
        "six_meet_pairs": 12960,
        "adjacent_pairs": 4320,
        "cases_allowed": True,
    }
    return expected, computed


def _claim_spectrum(build):
    params = graph.certify_srg(build.graph)
    cert = graph.spectrum_certificate(build.graph, params)
    computed = {
        "eigenvalues": list(cert.eigenvalues),
        "multiplicities": list(cert.multiplicities),
        "rank": cert.rank_r,
    }
    expected = {
        "eigenvalues": [40, 4, -8],
        "multiplicities": [1, 140, 75],
        "rank": 76,
    }
    return expected, computed


def _claim_cliques(build):
    tris = cliques_mod.enumerate_maximal_cliques(build.graph)
    records, census = cliques_mod.classify_cliques(
        tris, build.subquadrangles, build.vertices
    )
    edge_counts = cliques_mod.edge_triangle_counts(build.graph)
    computed = {
        "total": len(records),
        "census": {str(k): v for k, v in sorted(census.items())},
        "triangles_per_edge": _distinct(edge_counts.values()),
    }
    expected = {
        "total": 5760,
        "census": {"2": 4320, "6": 1440},
        "triangles_per_edge": [4],
    }
    return expected, computed


def _claim_symmetry(build, seed: int):
    space = build.space
    verts = build.vertices

    stream = symmetry.iter_unitary_collineations(build.polarity, seed)
    lin_cache = []

    def lin_perms(count):
        while len(lin_cache) < count:
            g = next(stream)
            lin_cache.append(symmetry.induce_vertex_permutation(space, g, verts))
        return list(lin_cache[:count])

    frob_perm = symmetry.induce_vertex_permutation(
        space, symmetry.frobenius_collineation(), verts
    )

    order_lin, _, perms_lin = symmetry.stabilized_order(lin_perms)
    order_full, _, perms_full = symmetry.stabilized_order(
        lambda c: lin_perms(c) + [frob_perm]
    )
    all_auto = all(symmetry.is_graph_automorphism(build.graph, p) for p in perms_full)
    orbit = symmetry.verify_transitivity(perms_lin, build.graph.n)
    stab_vertex = symmetry.stabilizer_order(perms_full, 0)
    sub_perms = [
        symmetry.induce_subquadrangle_permutation(p, verts) for p in perms_full
    ]
    sub_orbit = symmetry.verify_transitivity(sub_perms, len(build.subquadrangles))
    # orbit-stabilizer in the full group acting on the 36 subquadrangles
    stab_sub = order_full // sub_orbit if order_full % sub_orbit == 0 else -1
    computed = {
        "order_linear": order_lin,
        "order_full": order_full,
        "vertex_orbit": orbit,
        "vertex_stabilizer": stab_vertex,
        "subquadrangle_orbit": sub_orbit,
        "subquadrangle_stabilizer": stab_sub,
        "all_automorphisms": all_auto,
    }
    expected = {
        "order_linear": 25920,
        "order_full": 51840,
        "vertex_orbit": 216,
        "vertex_stabilizer": 240,
        "subquadrangle_orbit": 36,
        "subquadrangle_stabilizer": 1440,
        "all_automorphisms": True,
    }
    return expected, computed


def _claim_determinism(build, backend):
    from .pipeline import build_all

    fresh = build_all(backend=backend)
    same = True
    for fmt in exports.FORMATS:
        if exports.export_graph(build.graph, fmt) != exports.export_graph(
            fresh.graph, fmt
        ):
            same = False
    from .cache import canonical_dump, sections_from_build

    if canonical_dump(sections_from_build(build)) != canonical_dump(
        sections_from_build(fresh)
    ):
        same = False
    computed = {"identical_rebuild": same}
    expected = {"identical_rebuild": True}
    return expected, computed


def group_summary(build, seed: int = DEFAULT_SEED):
    """Expected and computed group-action facts (the C10 claim body)."""
    return _claim_symmetry(build, seed)


_CLAIMS = (
    ("C1", "surface census: 45 points, 27 generators, 90 tangents, 240 secants"),
    ("C2", "generalized quadrangle axioms for the surface and all subquadrangles"),
    ("C3", "36 subquadrangles; partner split 15/20; secant triples of size 3"),
    ("C4", "common 6-point partners: 12 per 3-point pair, 10 per 6-point pair"),
    ("C5", "ovoid census 6 per subquadrangle, 216 total; 60 valid pairs each"),
    ("C6", "strongly regular parameters (216, 40, 4, 8), exact integer identity"),
    ("C7", "pairwise case analysis over all 23220 vertex pairs"),
    ("C8", "spectrum multiplicities (1, 140, 75) via exact rank 76"),
    ("C9", "maximal cliques: all size 3; census 1440 + 4320 = 5760"),
    ("C10", "group orders 25920/51840; stabilizers 240/1440; orbits 216/36"),
    ("C11", "determinism: identical exports on rebuild"),
)


def run_certification(build, seed: int = DEFAULT_SEED, backend=None) -> CertificationReport:
    checks = {
        "C1": lambda: _claim_surface_census(build),
        "C2": lambda: _claim_gq_axioms(build),
        "C3": lambda: _claim_subquadrangle_census(build),
        "C4": lambda: _claim_common_partner_counts(build),
        "C5": lambda: _claim_ovoid_census(build),
        "C6": lambda: _claim_srg(build),
        "C7": lambda: _claim_pair_cases(build),
        "C8": lambda: _claim_spectrum(build),
        "C9": lambda: _claim_cliques(build),
        "C10": lambda: _claim_symmetry(build, seed),
        "C11": lambda: _claim_determinism(build, backend),
    }
    records = []
    for cid, desc in _CLAIMS:
        start = time.perf_counter()
        try:
            expected, computed = checks[cid]()
            passed = expected == computed
        except Exception as exc:  # a raised invariant is a failed claim
            expected, computed = "no error", "error: %s" % exc
            passed = False
        ms = int((time.perf_counter() - start) * 1000)
        records.append(
            ClaimRecord(
                claim_id=cid,
                description=desc,
                expected=expected,
                computed=computed,
                passed=passed,
                runtime_ms=ms,
            )
        )
    return CertificationReport(records=tuple(records))


def render_text(report: CertificationReport) -> str:
    lines = []
    for r in report.records:
        lines.append(
            "%-4s %-4s %5d ms  %s"
            % (r.claim_id, "PASS" if r.passed else "FAIL", r.runtime_ms, r.description)
        )
        if not r.passed:
            lines.append("      expected: %r" % (r.expected,))
            lines.append("      computed: %r" % (r.computed,))
    lines.append("overall: %s" % ("PASS" if report.passed else "FAIL"))
    return "\n".join(lines) + "\n"


def render_json(report: CertificationReport) -> str:
    payload = {
        "overall_pass": report.passed,
        "claims": [
            {
                "claim_id": r.claim_id,
                "description": r.description,
                "expected": r.expected,
                "computed": r.computed,
                "pass": r.passed,
                "runtime_ms": r.runtime_ms,
            }
            for r in report.records
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"
