"""4-face analysis and the identify-and-lift reduction engine.

Identifying the two ends of a diagonal of a 4-face keeps a plane graph
planar. If neither diagonal can be identified without adding a triangle,
a triangle sits on a side of the face and both diagonals are joined by
3-paths through its apex; ``analyze_quad_face`` returns that structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from threecolor.colorer import Coloring
from threecolor.embedding import (
    Face,
    RotationEmbedding,
    embed_planar,
    faces,
)
from threecolor.graph import Graph, VertexMap, identify, triangle_count


class ReductionError(RuntimeError):
    pass


@dataclass(frozen=True)
class SafeIdentify:
    """Identify corners ``axis`` and ``axis + 2`` (axis 0 or 1)."""

    axis: int


@dataclass(frozen=True)
class Witness:
    """Triangle ``v_i v_{i+1} z`` with paths ``v_{i+1} z x v_{i-1}`` and
    ``v_i z y v_{i+2}`` (corner indices mod 4); ``x`` may equal ``y``."""

    i: int
    z: int
    x: int
    y: int


QuadFaceAnalysis = Union[SafeIdentify, Witness]


@dataclass(frozen=True)
class Identification:
    u: int
    v: int
    mapping: VertexMap


@dataclass(frozen=True)
class EdgeAdded:
    u: int
    v: int


@dataclass(frozen=True)
class ApexAdded:
    vertex: int
    neighbors: tuple[int, ...]


Step = Union[Identification, EdgeAdded, ApexAdded]


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[Step, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def then(self, other: "ReductionTrace | Iterable[Step]") -> "ReductionTrace":
        more = other.steps if isinstance(other, ReductionTrace) else tuple(other)
        return ReductionTrace(self.steps + more)

    def replay(self, g: Graph) -> Graph:
        for step in self.steps:
            if isinstance(step, Identification):
                g, mapping = identify(g, step.u, step.v)
                if mapping != step.mapping:
                    raise ReductionError("trace does not replay: vertex maps differ")
            elif isinstance(step, EdgeAdded):
                if not g.has_edge(step.u, step.v):
                    g = g.add_edge(step.u, step.v)
            else:
                if step.vertex != g.n:
                    raise ReductionError("apex id must be the next free vertex")
                g = g.add_vertex(step.neighbors)
        return g

    def to_json(self) -> list:
        out = []
        for s in self.steps:
            if isinstance(s, Identification):
                out.append({"identify": [s.u, s.v]})
            elif isinstance(s, EdgeAdded):
                out.append({"add_edge": [s.u, s.v]})
            else:
                out.append({"add_apex": s.vertex, "neighbors": list(s.neighbors)})
        return out


def identification_creates_triangle(g: Graph, u: int, v: int) -> bool:
    """True iff identifying u and v raises the triangle count."""
    if g.has_edge(u, v):
        raise ValueError(f"{u} and {v} are adjacent")
    h, _ = identify(g, u, v)
    return triangle_count(h) > triangle_count(g)


def quad_corners(f: Face) -> tuple[int, int, int, int]:
    vs = f.vertices
    if len(vs) != 4 or len(set(vs)) != 4:
        raise ValueError("face is not a 4-cycle")
    return vs  # type: ignore[return-value]


def _three_paths(g: Graph, a: int, b: int, avoid: set[int]) -> list[tuple[int, int]]:
    """Pairs (p, q) with a-p-q-b a path and p, q outside ``avoid``."""
    out = []
    for p in sorted(g.neighbors(a) - avoid):
        for q in sorted(g.neighbors(p) & g.neighbors(b) - avoid):
            out.append((p, q))
    return out


def analyze_quad_face(g: Graph, emb: RotationEmbedding, f: Face) -> QuadFaceAnalysis:
    """Decide which diagonal of a 4-face (with non-edge diagonals) is safe,
    or return the triangle structure that blocks both."""
    if emb.graph != g:
        raise ValueError("embedding belongs to a different graph")
    v = quad_corners(f)
    if g.has_edge(v[0], v[2]) or g.has_edge(v[1], v[3]):
        raise ValueError("the face has a diagonal edge")
    for axis in (0, 1):
        if not identification_creates_triangle(g, v[axis], v[axis + 2]):
            return SafeIdentify(axis)
    # both identifications add triangles: find 3-paths across both diagonals
    # that share a vertex
    corners = set(v)
    p0 = _three_paths(g, v[0], v[2], corners)
    p1 = _three_paths(g, v[1], v[3], corners)
    for a, b in p0:  # v0 a b v2
        for c, d in p1:  # v1 c d v3
            if a == c:
                return Witness(0, a, d, b)
            if b == c:
                return Witness(1, b, a, d)
            if b == d:
                return Witness(2, b, c, a)
            if a == d:
                return Witness(3, a, b, c)
    raise ReductionError(
        "both diagonals create triangles but no crossing 3-paths exist; "
        "the face is not a face of a plane embedding"
    )


def check_witness(g: Graph, corners, w: Witness) -> bool:
    """Every edge the witness claims is present in ``g``."""
    v = corners
    i = w.i
    need = [
        (v[i], v[(i + 1) % 4]),
        (v[i], w.z),
        (v[(i + 1) % 4], w.z),
        (w.z, w.x),
        (w.x, v[(i - 1) % 4]),
        (w.z, w.y),
        (w.y, v[(i + 2) % 4]),
    ]
    outside = {w.z, w.x, w.y}.isdisjoint(v)
    return outside and all(g.has_edge(a, b) for a, b in need)


def _plane(g: Graph) -> RotationEmbedding:
    emb = embed_planar(g)
    if not isinstance(emb, RotationEmbedding):
        raise ReductionError("graph is not planar")
    return emb


def quad_faces(g: Graph, emb: RotationEmbedding) -> list[Face]:
    """4-faces with four distinct corners and no diagonal edge, in tracing order."""
    out = []
    for f in faces(emb):
        vs = f.vertices
        if len(vs) == 4 and len(set(vs)) == 4:
            if not g.has_edge(vs[0], vs[2]) and not g.has_edge(vs[1], vs[3]):
                out.append(f)
    return out


def reduce_quad_faces(
    g: Graph, protected: Iterable[int] = (), triangle_budget: int = 0
) -> tuple[Graph, ReductionTrace]:
    """Identify diagonals of 4-faces while that adds no triangle.

    Each round re-embeds the current graph, takes the first 4-face (in
    tracing order) with a legal safe diagonal and identifies it; axis 0-2
    wins ties. Two protected vertices are never merged with each other.
    Stops when no 4-face admits a safe step; this need not be 4-face-free.
    """
    if triangle_count(g) > triangle_budget:
        raise ValueError("input already exceeds the triangle budget")
    prot = set(protected)
    steps: list[Step] = []
    while True:
        emb = _plane(g)
        step = None
        for f in quad_faces(g, emb):
            v = f.vertices
            analysis = analyze_quad_face(g, emb, f)
            if not isinstance(analysis, SafeIdentify):
                continue
            axes = [analysis.axis] + ([1] if analysis.axis == 0 else [])
            for axis in axes:
                a, b = v[axis], v[axis + 2]
                if a in prot and b in prot:
                    continue
                if axis != analysis.axis and identification_creates_triangle(g, a, b):
                    continue
                step = (a, b)
                break
            if step:
                break
        if step is None:
            return g, ReductionTrace(tuple(steps))
        a, b = step
        g, mapping = identify(g, a, b)
        steps.append(Identification(a, b, mapping))
        prot = {mapping[p] for p in prot}
        if triangle_count(g) > triangle_budget:
            raise ReductionError("identification exceeded the triangle budget")


def lift_coloring(trace: ReductionTrace, c: Coloring, final: Graph | None = None) -> Coloring:
    """Pull a coloring of the reduced graph back to the original graph.

    Identified vertices share the merged vertex's color; added apices are
    dropped and added edges ignored. With ``final`` given, ``c`` is first
    checked to be proper on it.
    """
    if final is not None and not c.is_proper(final):
        raise ValueError("coloring is not proper on the reduced graph")
    colors = list(c.colors)
    for step in reversed(trace.steps):
        if isinstance(step, Identification):
            colors = [colors[step.mapping[w]] for w in range(len(step.mapping))]
        elif isinstance(step, ApexAdded):
            if step.vertex != len(colors) - 1:
                raise ReductionError("apex is not the last vertex")
            colors = colors[:-1]
    return Coloring(tuple(colors))
