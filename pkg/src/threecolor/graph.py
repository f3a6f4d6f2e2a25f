"""Simple undirected graphs over dense vertex ids, identification, short
cycles, graph6 interchange and canonical keys."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from threecolor import _kernels

__all__ = [
    "Graph",
    "Graph6Error",
    "VertexMap",
    "identify",
    "triangle_count",
    "triangles",
    "common_neighbors",
    "cycles_up_to_length",
    "parse_graph6",
    "write_graph6",
    "canonical_key",
    "is_connected",
]

GRAPH6_MAX_N = 62


class Graph6Error(ValueError):
    pass


class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    Edges are unordered pairs; loops and parallel edges are rejected.
    Every operation returning a graph builds a new object.
    """

    __slots__ = ("_adj", "_masks", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks: tuple[int, ...] | None = None
        self._hash: int | None = None

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> "Graph":
        n = len(adjacency)
        edges = [(u, v) for u, nbrs in enumerate(adjacency) for v in nbrs if u < v]
        g = cls(n, edges)
        for u, nbrs in enumerate(adjacency):
            if set(nbrs) != g._adj[u]:
                raise ValueError("adjacency is not symmetric")
        return g

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    n = vertex_count

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def vertices(self) -> range:
        return range(len(self._adj))

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs in increasing (u, v) order."""
        return [(u, v) for u in range(len(self._adj)) for v in sorted(self._adj[u]) if u < v]

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u, v in combinations(range(len(self._adj)), 2)
            if v not in self._adj[u]
        ]

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit ``w`` set iff ``w`` adjacent)."""
        if self._masks is None:
            self._masks = tuple(sum(1 << w for w in s) for s in self._adj)
        return self._masks

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges() + [(u, v)])

    def remove_edge(self, u: int, v: int) -> "Graph":
        if v not in self._adj[u]:
            raise ValueError(f"({u}, {v}) is not an edge")
        e = (min(u, v), max(u, v))
        return Graph(self.n, [f for f in self.edges() if f != e])

    def add_vertex(self, neighbors: Iterable[int] = ()) -> "Graph":
        """New graph with an extra vertex ``n`` joined to ``neighbors``."""
        n = self.n
        return Graph(n + 1, self.edges() + [(v, n) for v in set(neighbors)])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices``, compacted.

        Returns the new graph and the list of original ids (position = new id).
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph(len(keep), edges), keep

    def without_isolated(self) -> tuple["Graph", list[int]]:
        return self.subgraph(v for v in self.vertices() if self._adj[v])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()})"


# mapping[old] = new for one identification
VertexMap = tuple[int, ...]


def identify(g: Graph, u: int, v: int) -> tuple[Graph, VertexMap]:
    """Identify non-adjacent vertices ``u`` and ``v``.

    The merged vertex takes id ``min(u, v)``; ids above ``max(u, v)`` shift
    down by one. Returns the new graph and the vertex map old -> new.
    """
    if u == v:
        raise ValueError("cannot identify a vertex with itself")
    if g.has_edge(u, v):
        raise ValueError(f"cannot identify adjacent vertices {u} and {v}")
    lo, hi = min(u, v), max(u, v)
    mapping = tuple(lo if w == hi else (w - 1 if w > hi else w) for w in range(g.n))
    edges = {tuple(sorted((mapping[a], mapping[b]))) for a, b in g.edges()}
    return Graph(g.n - 1, edges), mapping


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for a in g.vertices():
        for b in g.neighbors(a):
            if b <= a:
                continue
            for c in g.neighbors(a) & g.neighbors(b):
                if c > b:
                    out.append((a, b, c))
    return out


def triangle_count(g: Graph) -> int:
    masks = g.masks
    total = 0
    for a, b in g.edges():
        total += bin(masks[a] & masks[b]).count("1")
    return total // 3


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    return g.neighbors(u) & g.neighbors(v)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def cycles_up_to_length(g: Graph, max_length: int) -> list[tuple[int, ...]]:
    """All simple cycles of length 3..max_length, each reported once.

    A cycle is reported starting at its smallest vertex, with the smaller of
    the two neighbors of that vertex second.
    """
    if max_length < 3:
        raise ValueError("cycle length bound must be at least 3")
    if max_length > 8:
        raise ValueError("cycle enumeration is limited to length 8")
    out: list[tuple[int, ...]] = []
    for s in g.vertices():
        path = [s]
        on_path = {s}

        def extend(v: int) -> None:
            for w in sorted(g.neighbors(v)):
                if w < s:
                    continue
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif w not in on_path and len(path) < max_length:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    out.sort(key=lambda c: (len(c), c))
    return out


def _decode_n(data: str) -> tuple[int, str]:
    if not data:
        raise Graph6Error("empty graph6 string")
    first = ord(data[0])
    if first == 126:
        raise Graph6Error("graph6 orders above 62 are not supported")
    if not 63 <= first <= 125:
        raise Graph6Error(f"malformed length byte {data[0]!r}")
    return first - 63, data[1:]


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[10:]
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"non-graph6 character {ch!r}")
    n, body = _decode_n(line)
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"graph6 output supports n <= {GRAPH6_MAX_N}, got {n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def canonical_key(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic.

    Canonical labeling is done by equitable-partition refinement followed by
    an individualization search that keeps the lexicographically largest
    adjacency certificate; transpositions of twin vertices prune the search.
    """
    order = _kernels.canonical_order(g.n, g.masks)
    return _certificate_bytes(g, order)


def _certificate_bytes(g: Graph, order: Sequence[int]) -> bytes:
    n = g.n
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * n
    for u, v in g.edges():
        a, b = pos[u], pos[v]
        if a < b:
            a, b = b, a
        rows[a] |= 1 << b
    width = max(1, (n + 7) // 8)
    return bytes([n]) + b"".join(r.to_bytes(width, "big") for r in rows)
