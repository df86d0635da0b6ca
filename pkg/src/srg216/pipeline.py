"""One-call construction of the whole object stack."""

from dataclasses import dataclass

from .graph import SrgGraph, build_graph
from .hermitian import HermitianSurface, UnitaryPolarity
from .ovoids import all_vertices
from .projective import ProjectiveSpace
from .subquadrangles import enumerate_subquadrangles


@dataclass
class Build:
    space: ProjectiveSpace
    polarity: UnitaryPolarity
    surface: HermitianSurface
    subquadrangles: list
    vertices: list
    graph: SrgGraph


def build_all(backend=None, jobs: int = 1, subquadrangle_points=None,
              ovoid_records=None) -> Build:
    """Build space, surface, subquadrangles, ovoids, and the graph.

    ``subquadrangle_points`` / ``ovoid_records`` short-circuit the two
    enumerations with previously validated data (used by the cache path).
    """
    space = ProjectiveSpace()
    polarity = UnitaryPolarity.identity()
    surface = HermitianSurface(space, polarity)
    if subquadrangle_points is None:
        subs = enumerate_subquadrangles(surface, backend=backend, jobs=jobs)
    else:
        from .subquadrangles import rebuild_subquadrangles

        subs = rebuild_subquadrangles(surface, subquadrangle_points)
    if ovoid_records is None:
        vertices = all_vertices(subs, backend=backend)
    else:
        from .ovoids import rebuild_vertices

        vertices = rebuild_vertices(subs, ovoid_records)
    graph = build_graph(surface, subs, vertices)
    return Build(
        space=space,
        polarity=polarity,
        surface=surface,
        subquadrangles=subs,
        vertices=vertices,
        graph=graph,
    )
