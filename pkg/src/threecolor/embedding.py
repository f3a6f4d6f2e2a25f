"""Signed rotation systems for the plane and the projective plane.

A rotation system fixes a cyclic order of neighbors around every vertex;
edge signs of -1 mark edges along which the local orientation flips. Face
tracing then recovers the faces, the Euler characteristic tells the
surface apart (2 = sphere, 1 = projective plane), and the sign product of a
cycle decides contractibility in the projective plane: a simple closed
curve there bounds a disk exactly when it is two-sided.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import networkx as nx

from threecolor.graph import Graph, cycles_up_to_length

Dart = tuple[int, int]


class EmbeddingError(ValueError):
    pass


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class RotationEmbedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    signs: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        g = self.graph
        if len(self.rotation) != g.n:
            raise EmbeddingError("one rotation per vertex required")
        for v, rot in enumerate(self.rotation):
            if len(rot) != len(set(rot)) or set(rot) != g.neighbors(v):
                raise EmbeddingError(f"rotation at {v} is not a permutation of N({v})")
        normalized = {}
        for (u, v), s in self.signs.items():
            if s not in (1, -1):
                raise EmbeddingError(f"edge sign must be +1 or -1, got {s}")
            if not g.has_edge(u, v):
                raise EmbeddingError(f"signed pair ({u}, {v}) is not an edge")
            e = _edge(u, v)
            if normalized.get(e, s) != s:
                raise EmbeddingError(f"conflicting signs for edge {e}")
            normalized[e] = s
        # keep only the -1 entries; +1 is the default
        object.__setattr__(self, "signs", {e: s for e, s in sorted(normalized.items()) if s < 0})
        object.__setattr__(
            self, "_pos", tuple({w: i for i, w in enumerate(rot)} for rot in self.rotation)
        )

    def sign(self, u: int, v: int) -> int:
        return self.signs.get(_edge(u, v), 1)

    def succ(self, v: int, w: int) -> int:
        rot = self.rotation[v]
        return rot[(self._pos[v][w] + 1) % len(rot)]

    def pred(self, v: int, w: int) -> int:
        rot = self.rotation[v]
        return rot[(self._pos[v][w] - 1) % len(rot)]

    def twisted(self, u: int, v: int) -> "RotationEmbedding":
        """Same rotation with the sign of edge uv flipped."""
        signs = dict(self.signs)
        signs[_edge(u, v)] = -self.sign(u, v)
        return RotationEmbedding(self.graph, self.rotation, signs)


@dataclass(frozen=True)
class Face:
    """A face as the closed walk of darts bounding it."""

    darts: tuple[Dart, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d[0] for d in self.darts)

    def __len__(self) -> int:
        return len(self.darts)

    @property
    def is_simple(self) -> bool:
        vs = self.vertices
        return len(set(vs)) == len(vs)


@dataclass(frozen=True)
class EmbeddingStats:
    n: int
    e: int
    f: int

    @property
    def euler_characteristic(self) -> int:
        return self.n - self.e + self.f


@dataclass(frozen=True)
class NonplanarWitness:
    """Edges of a Kuratowski subdivision; ``kind`` is 'K5' or 'K3,3'."""

    edges: tuple[tuple[int, int], ...]
    kind: str


@dataclass(frozen=True)
class CycleRecord:
    cycle: tuple[int, ...]
    length: int
    contractible: bool


def faces(emb: RotationEmbedding) -> list[Face]:
    """Trace all faces, starting from vertex 0 in rotation order.

    The walk state is (tail, head, orientation); after crossing an edge the
    orientation is multiplied by the edge sign and the next neighbor is the
    rotation successor (orientation +1) or predecessor (-1) of the tail.
    Every face is found twice, once per direction; only the first is kept.
    """
    g = emb.graph
    states = []
    for s in (1, -1):
        for v in g.vertices():
            for w in emb.rotation[v]:
                states.append((v, w, s))

    def step(state):
        v, w, s = state
        s = s * emb.sign(v, w)
        u = emb.succ(w, v) if s > 0 else emb.pred(w, v)
        return (w, u, s)

    orbit_of: dict[tuple[int, int, int], int] = {}
    orbits: list[list[tuple[int, int, int]]] = []
    for start in states:
        if start in orbit_of:
            continue
        orbit = []
        st = start
        while st not in orbit_of:
            orbit_of[st] = len(orbits)
            orbit.append(st)
            st = step(st)
        if st != start:
            raise EmbeddingError("face tracing did not close; rotation system is invalid")
        orbits.append(orbit)

    def reverse(state):
        v, w, s = state
        return (w, v, -s * emb.sign(v, w))

    taken: set[int] = set()
    out = []
    for start in states:
        oid = orbit_of[start]
        if oid in taken:
            continue
        mirror = {orbit_of[reverse(st)] for st in orbits[oid]}
        if len(mirror) != 1 or oid in mirror:
            raise EmbeddingError("face orbits do not pair up; rotation system is invalid")
        taken.add(oid)
        taken |= mirror
        out.append(Face(tuple((v, w) for v, w, _ in orbits[oid])))
    return out


def stats(emb: RotationEmbedding) -> EmbeddingStats:
    return EmbeddingStats(emb.graph.n, emb.graph.edge_count, len(faces(emb)))


def euler_characteristic(emb: RotationEmbedding) -> int:
    return stats(emb).euler_characteristic


def face_lengths(emb: RotationEmbedding) -> list[int]:
    return sorted(len(f) for f in faces(emb))


def embed_planar(g: Graph) -> RotationEmbedding | NonplanarWitness:
    """A plane rotation system for ``g``, or a Kuratowski witness.

    The planarity test itself is networkx's left-right algorithm; the result
    is re-checked here by tracing faces (Euler characteristic per component).
    """
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices())
    nxg.add_edges_from(g.edges())
    planar, cert = nx.check_planarity(nxg, counterexample=True)
    if not planar:
        edges = tuple(sorted(_edge(u, v) for u, v in cert.edges()))
        branch = [v for v in cert.nodes() if cert.degree(v) >= 3]
        kind = "K5" if len(branch) == 5 else "K3,3"
        return NonplanarWitness(edges, kind)
    rotation = tuple(tuple(cert.neighbors_cw_order(v)) for v in g.vertices())
    emb = RotationEmbedding(g, rotation)
    components = nx.number_connected_components(nxg)
    isolated = sum(1 for v in g.vertices() if g.degree(v) == 0)
    # isolated vertices have no darts and so no traced face
    expected = 2 * components - isolated
    if euler_characteristic(emb) != expected:
        raise EmbeddingError("planarity embedding failed its Euler check")
    return emb


def is_planar(g: Graph) -> bool:
    return isinstance(embed_planar(g), RotationEmbedding)


def _check_cycle(g: Graph, cycle: Sequence[int]) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise EmbeddingError(f"{tuple(cycle)} is not a simple cycle")
    for i, v in enumerate(cycle):
        if not g.has_edge(v, cycle[(i + 1) % len(cycle)]):
            raise EmbeddingError(f"{tuple(cycle)} is not a cycle of the graph")


def sign_product(emb: RotationEmbedding, cycle: Sequence[int]) -> int:
    prod = 1
    for i, v in enumerate(cycle):
        prod *= emb.sign(v, cycle[(i + 1) % len(cycle)])
    return prod


def is_contractible(
    emb: RotationEmbedding, cycle: Sequence[int], chi: int | None = None
) -> bool:
    _check_cycle(emb.graph, cycle)
    if chi is None:
        chi = euler_characteristic(emb)
    if chi == 2:
        return True
    if chi == 1:
        return sign_product(emb, cycle) == 1
    raise EmbeddingError(f"contractibility needs the sphere or projective plane, chi={chi}")


def short_cycle_census(emb: RotationEmbedding, max_length: int) -> list[CycleRecord]:
    if max_length > 6:
        raise ValueError("census is limited to cycles of length <= 6")
    chi = euler_characteristic(emb)
    if chi not in (1, 2):
        raise EmbeddingError(f"census needs the sphere or projective plane, chi={chi}")
    return [
        CycleRecord(c, len(c), is_contractible(emb, c, chi))
        for c in cycles_up_to_length(emb.graph, max_length)
    ]


def from_faces(g: Graph, walks: Iterable[Sequence[int]]) -> RotationEmbedding:
    """Signed rotation system whose faces are the given closed walks.

    The walks must use every edge twice and the corners at each vertex must
    link up into a single cycle. Requires minimum degree 3.
    """
    walks = [tuple(w) for w in walks]
    links: list[dict[int, list[int]]] = [dict() for _ in g.vertices()]
    for w in walks:
        k = len(w)
        for i, v in enumerate(w):
            a, b = w[i - 1], w[(i + 1) % k]
            links[v].setdefault(a, []).append(b)
            links[v].setdefault(b, []).append(a)
    rotation = []
    for v in g.vertices():
        if g.degree(v) < 3:
            raise EmbeddingError("from_faces requires minimum degree 3")
        link = links[v]
        if set(link) != g.neighbors(v) or any(len(x) != 2 for x in link.values()):
            raise EmbeddingError(f"corners at {v} do not form a cycle")
        start = min(link)
        rot = [start]
        prev, cur = start, min(link[start])
        while cur != start:
            rot.append(cur)
            a, b = link[cur]
            prev, cur = cur, (b if a == prev else a)
        if len(rot) != g.degree(v):
            raise EmbeddingError(f"corners at {v} form more than one cycle")
        rotation.append(tuple(rot))
    base = RotationEmbedding(g, tuple(rotation))
    signs: dict[tuple[int, int], int] = {}
    for w in walks:
        k = len(w)
        for i, u in enumerate(w):
            p, v, q = w[i - 1], w[(i + 1) % k], w[(i + 2) % k]
            t_u = 1 if base.succ(u, p) == v else -1
            t_v = 1 if base.succ(v, u) == q else -1
            e = _edge(u, v)
            s = t_u * t_v
            if signs.setdefault(e, s) != s:
                raise EmbeddingError(f"inconsistent sign for edge {e}")
    emb = RotationEmbedding(g, tuple(rotation), signs)
    if sorted(len(f) for f in faces(emb)) != sorted(len(w) for w in walks):
        raise EmbeddingError("traced faces differ from the requested ones")
    return emb


# text format: "n m chi", n rotation lines, m signed edge lines; '#' comments


def format_embedding(emb: RotationEmbedding) -> str:
    g = emb.graph
    lines = [f"{g.n} {g.edge_count} {euler_characteristic(emb)}"]
    for v in g.vertices():
        lines.append(" ".join(str(x) for x in (v, *emb.rotation[v])))
    for u, v in g.edges():
        lines.append(f"{u} {v} {emb.sign(u, v):+d}")
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> RotationEmbedding:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 3:
        raise EmbeddingError("header must be 'n m chi'")
    n, m, chi = (int(x) for x in rows[0])
    if len(rows) != 1 + n + m:
        raise EmbeddingError(f"expected {1 + n + m} data lines, got {len(rows)}")
    rotation: list[tuple[int, ...]] = [()] * n
    for row in rows[1:1 + n]:
        v, *nbrs = (int(x) for x in row)
        if not 0 <= v < n or rotation[v]:
            raise EmbeddingError(f"bad or repeated rotation line for vertex {v}")
        rotation[v] = tuple(nbrs)
    edges = []
    signs = {}
    for row in rows[1 + n:]:
        if len(row) != 3:
            raise EmbeddingError("edge lines must be 'u v sign'")
        u, v, s = int(row[0]), int(row[1]), int(row[2])
        edges.append((u, v))
        signs[(u, v)] = s
    g = Graph(n, edges)
    if g.edge_count != m:
        raise EmbeddingError("repeated edge lines")
    emb = RotationEmbedding(g, tuple(rotation), signs)
    if euler_characteristic(emb) != chi:
        raise EmbeddingError(f"declared chi={chi}, traced {euler_characteristic(emb)}")
    return emb
