"""Maximal cliques of the graph.

All maximal cliques are triangles; they split by the size of the triple
intersection of their parent subquadrangles into 1440 cliques with
triple meet 6 and 4320 with triple meet 2.
"""

from dataclasses import dataclass


class CliqueStructureError(RuntimeError):
    """A clique violates the size-3 or classification constraints."""


@dataclass(frozen=True)
class CliqueRecord:
    vertices: tuple  # sorted triple of vertex ids
    triple_meet: int  # |W ∩ W' ∩ W''|


def enumerate_maximal_cliques(g):
    """All triangles of g, certified maximal, as sorted vertex triples.

    Raises if any triangle extends to a 4-clique or any edge lies in no
    triangle.
    """
    triangles = []
    for u in range(g.n):
        row_u = g.masks[u]
        rest_v = row_u >> (u + 1)
        v = u + 1
        while rest_v:
            if rest_v & 1:
                common = row_u & g.masks[v]
                if common == 0:
                    raise CliqueStructureError(
                        "edge (%d, %d) lies in no triangle" % (u, v)
                    )
                rest_w = common >> (v + 1)
                w = v + 1
                while rest_w:
                    if rest_w & 1:
                        if common & g.masks[w]:
                            x = (common & g.masks[w]).bit_length() - 1
                            raise CliqueStructureError(
                                "4-clique {%d, %d, %d, %d}" % (u, v, w, x)
                            )
                        triangles.append((u, v, w))
                    rest_w >>= 1
                    w += 1
            rest_v >>= 1
            v += 1
    return triangles


def classify_cliques(triangles, subs, vertices):
    """CliqueRecords plus the census {6: count, 2: count} by triple meet."""
    records = []
    census = {}
    for tri in triangles:
        wa, wb, wc = (subs[vertices[x].parent] for x in tri)
        meet = (wa.mask & wb.mask & wc.mask).bit_count()
        if meet not in (6, 2):
            raise CliqueStructureError(
                "clique %r has parent triple meet %d" % (tri, meet)
            )
        records.append(CliqueRecord(vertices=tri, triple_meet=meet))
        census[meet] = census.get(meet, 0) + 1
    return records, census


def edge_triangle_counts(g):
    """Number of triangles through each edge, keyed by sorted pair."""
    out = {}
    for u in range(g.n):
        row_u = g.masks[u]
        rest = row_u >> (u + 1)
        v = u + 1
        while rest:
            if rest & 1:
                out[(u, v)] = (row_u & g.masks[v]).bit_count()
            rest >>= 1
            v += 1
    return out
