"""Small named graphs used as fixtures and CLI shortcuts."""

from __future__ import annotations

from threecolor.graph import Graph


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def wheel(rim: int) -> Graph:
    """Cycle on ``0..rim-1`` plus hub ``rim`` adjacent to all of it."""
    return Graph(rim + 1, cycle(rim).edges() + [(i, rim) for i in range(rim)])


def cube() -> Graph:
    """Q3 on bit-vectors 0..7; vertices differing in one bit are adjacent."""
    return Graph(8, [(u, u ^ b) for u in range(8) for b in (1, 2, 4) if u < u ^ b])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def mycielski(g: Graph) -> Graph:
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges += [(u, n + v), (v, n + u)]
    edges += [(n + v, 2 * n) for v in range(n)]
    return Graph(2 * n + 1, edges)


def grotzsch() -> Graph:
    """Mycielskian of C5: 11 vertices, 20 edges, triangle-free, 4-chromatic."""
    return mycielski(cycle(5))


def dodecahedron() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    # middle 10-cycle on 5..14, inner pentagon 15..19
    middle = [(5 + i, 5 + (i + 1) % 10) for i in range(10)]
    spokes = [(i, 5 + 2 * i) for i in range(5)]
    inner_spokes = [(5 + 2 * i + 1, 15 + i) for i in range(5)]
    inner = [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    return Graph(20, outer + spokes + middle + inner_spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph(offset, edges)


NAMED = {
    "K4": lambda: complete(4),
    "K5": lambda: complete(5),
    "C5": lambda: cycle(5),
    "Q3": cube,
    "petersen": petersen,
    "grotzsch": grotzsch,
    "dodecahedron": dodecahedron,
    "W5": lambda: wheel(5),
}
