"""Tightness constructions and their checks.

The fixture files under ``data/`` hold the hand-built base pieces in the
embedding text format; designated vertices are given on ``# @name: ...``
comment lines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources

from threecolor.colorer import enumerate_3_colorings
from threecolor.embedding import RotationEmbedding, parse_embedding
from threecolor.graph import Graph, identify

GADGET_VARIANTS = ("a", "b", "c", "d")


@dataclass(frozen=True)
class GadgetInstance:
    graph: Graph
    designated: dict[str, tuple] = field(default_factory=dict)
    embedding: RotationEmbedding | None = None

    def to_json(self) -> dict:
        from threecolor.graph import write_graph6

        return {
            "graph6": write_graph6(self.graph),
            "n": self.graph.n,
            "e": self.graph.edge_count,
            "designated": {k: [list(x) if isinstance(x, tuple) else x for x in v]
                           for k, v in self.designated.items()},
        }


def load_fixture(name: str) -> tuple[RotationEmbedding, dict[str, tuple[int, ...]]]:
    text = resources.files("threecolor").joinpath("data", name).read_text()
    notes = {}
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("# @"):
            key, _, vals = line[3:].partition(":")
            notes[key.strip()] = tuple(int(x) for x in vals.split())
    return parse_embedding(text), notes


def thomas_walls(k: int) -> GadgetInstance:
    """k-th member of a chain of K4 blocks glued by Hajos joins.

    Member 1 is K4. Member k+1 takes a diagonal edge pq of the newest
    diamond (two triangles on a common edge), deletes it, deletes an edge
    xy of a fresh K4, identifies p with x and joins q to y. Every member is
    4-critical with exactly four triangles, lying in two diamonds; deleting
    the two diamond diagonals (``designated['edges']``) leaves a planar
    triangle-free graph.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    block, _ = load_fixture("thomas_walls_block.emb")
    g = block.graph
    # K4 = diamond on diagonal (0, 1) with tips 2, 3, and diagonal (2, 3)
    old_diag, new_diag = (0, 1), (2, 3)
    for _ in range(k - 1):
        p, q = new_diag
        n = g.n
        # fresh K4 on n..n+3 minus edge (n, n+1); n is glued onto p
        fresh = [(n, n + 2), (n, n + 3), (n + 1, n + 2), (n + 1, n + 3), (n + 2, n + 3)]
        edges = [e for e in g.edges() if e != (min(p, q), max(p, q))] + fresh + [(q, n + 1)]
        joined = Graph(n + 4, edges)
        g, mapping = identify(joined, p, n)
        old_diag = tuple(sorted(mapping[x] for x in old_diag))
        new_diag = (mapping[n + 2], mapping[n + 3])
    return GadgetInstance(g, {"edges": (old_diag, tuple(sorted(new_diag)))})


def forcing_gadget(variant: str) -> GadgetInstance:
    """Graph in which a small constraint forces (1,2,3,1,2,3) on a hexagon.

    Variants a-c: precoloring the triple ``designated['precolored']`` with
    1, 2, 3 forces the pattern on ``designated['outer']``. Variant d: an
    extra apex of degree 5 (``designated['apex']``) forces it in every
    3-coloring.
    """
    if variant not in GADGET_VARIANTS:
        raise ValueError(f"unknown gadget variant {variant!r}")
    emb, notes = load_fixture(f"gadget_{variant}.emb")
    designated: dict[str, tuple] = {"outer": notes["outer"]}
    g = emb.graph
    if variant == "d":
        apex = g.n
        g = g.add_vertex(notes["apex_neighbors"])
        designated["apex"] = (apex,)
    else:
        designated["precolored"] = notes["precolored"]
    return GadgetInstance(g, designated, emb)


def has_forced_pattern(colors, hexagon) -> bool:
    """Opposite hexagon vertices agree and three consecutive ones differ,
    i.e. the hexagon reads (1,2,3,1,2,3) up to renaming colors."""
    c = [colors[v] for v in hexagon]
    return all(c[i] == c[i + 3] for i in range(3)) and len({c[0], c[1], c[2]}) == 3


def verify_forcing(
    gi: GadgetInstance, constrained: bool = True, budget: int | None = None
) -> bool:
    """Every admissible 3-coloring shows the pattern, and one exists."""
    pre = {}
    if constrained and "precolored" in gi.designated:
        pre = {v: i + 1 for i, v in enumerate(gi.designated["precolored"])}
    g = gi.graph
    if not constrained and "apex" in gi.designated:
        g, _ = g.subgraph(v for v in g.vertices() if v not in gi.designated["apex"])
    seen = False
    for c in enumerate_3_colorings(g, pre, budget):
        seen = True
        if not has_forced_pattern(c.colors, gi.designated["outer"]):
            return False
    return seen


def hexagonal_quadrangulation(rings: int) -> GadgetInstance:
    """Plane graph with one hexagonal face and all other faces 4-faces.

    ``rings`` concentric hexagons joined by radial edges; the innermost is
    closed by a center adjacent to every second vertex. The outer hexagon
    (vertices 0..5) is the designated 6-face.
    """
    if rings < 1:
        raise ValueError("rings must be at least 1")
    n = 6 * rings + 1
    center = n - 1
    edges = []
    coords = {}
    for r in range(rings):
        radius = rings - r
        for j in range(6):
            v = 6 * r + j
            edges.append((v, 6 * r + (j + 1) % 6))
            if r + 1 < rings:
                edges.append((v, v + 6))
            angle = math.pi * j / 3
            coords[v] = (radius * math.cos(angle), radius * math.sin(angle))
    inner = 6 * (rings - 1)
    edges += [(inner + j, center) for j in (0, 2, 4)]
    coords[center] = (0.0, 0.0)
    g = Graph(n, edges)

    def angle(v, w):
        (x0, y0), (x1, y1) = coords[v], coords[w]
        return math.atan2(y1 - y0, x1 - x0)

    rotation = tuple(tuple(sorted(g.neighbors(v), key=lambda w: angle(v, w))) for v in g.vertices())
    emb = RotationEmbedding(g, rotation)
    return GadgetInstance(g, {"outer": tuple(range(6))}, emb)


def k4_projective(variant: str) -> RotationEmbedding:
    """K4 in the projective plane: ``quad_faces`` gives three 4-faces,
    ``mixed_faces`` two 3-faces and one 6-face."""
    files = {"quad_faces": "k4_projective_quad.emb", "mixed_faces": "k4_projective_mixed.emb"}
    if variant not in files:
        raise ValueError(f"unknown K4 embedding variant {variant!r}")
    return load_fixture(files[variant])[0]


def glue_on_hexagon(outer: GadgetInstance, inner: GadgetInstance) -> Graph:
    """Identify ``inner``'s designated hexagon with ``outer``'s, vertex by vertex.

    ``outer``'s vertex ids are kept; ``inner``'s other vertices are appended.
    """
    ho, hi = outer.designated["outer"], inner.designated["outer"]
    where = {hi[i]: ho[i] for i in range(6)}
    n = outer.graph.n
    for v in inner.graph.vertices():
        if v not in where:
            where[v] = n
            n += 1
    edges = outer.graph.edges() + [(where[u], where[v]) for u, v in inner.graph.edges()]
    return Graph(n, edges)
