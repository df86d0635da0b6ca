"""Graph export in standard exchange formats.

Supported formats: graph6 (single line, bit-exact per the published
encoding), DIMACS edge format, edge CSV, and JSON.  All outputs are
deterministic under the canonical vertex order.
"""

import json


class UnsupportedFormatError(ValueError):
    pass


FORMATS = ("graph6", "dimacs", "edge-csv", "json")


def edge_list(g):
    """Sorted list of (u, v) with u < v."""
    edges = []
    for u in range(g.n):
        rest = g.masks[u] >> (u + 1)
        v = u + 1
        while rest:
            if rest & 1:
                edges.append((u, v))
            rest >>= 1
            v += 1
    return edges


def _graph6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise UnsupportedFormatError("graph too large for this graph6 encoder")


def to_graph6(g) -> bytes:
    """graph6 line: size field, then upper-triangle bits column-major."""
    out = bytearray(_graph6_size(g.n))
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        col = g.masks[v]
        for u in range(v):
            acc = (acc << 1) | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    out.append(10)
    return bytes(out)


def parse_graph6(data: bytes):
    """Decode a graph6 line to (n, adjacency masks); inverse of to_graph6."""
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if data[0] == 126:
        if data[1] == 126:
            raise UnsupportedFormatError("graph6 sizes beyond 258047 unsupported")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    bits = []
    for b in body:
        if not 63 <= b <= 126:
            raise UnsupportedFormatError("invalid graph6 byte %d" % b)
        bits.extend((b - 63) >> (5 - i) & 1 for i in range(6))
    masks = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            idx += 1
    return n, tuple(masks)


def to_dimacs(g) -> bytes:
    edges = edge_list(g)
    lines = ["p edge %d %d" % (g.n, len(edges))]
    lines.extend("e %d %d" % (u + 1, v + 1) for u, v in edges)
    return ("\n".join(lines) + "\n").encode("ascii")


def to_edge_csv(g) -> bytes:
    return (
        "".join("%d,%d\n" % (u, v) for u, v in edge_list(g))
    ).encode("ascii")


def to_json(g) -> bytes:
    payload = {
        "n": g.n,
        "edges": [[u, v] for u, v in edge_list(g)],
    }
    return (json.dumps(payload, sort_keys=True, indent=1) + "\n").encode("ascii")


def export_graph(g, fmt: str) -> bytes:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "dimacs":
        return to_dimacs(g)
    if fmt == "edge-csv":
        return to_edge_csv(g)
    if fmt == "json":
        return to_json(g)
    raise UnsupportedFormatError("unsupported export format %r" % (fmt,))
