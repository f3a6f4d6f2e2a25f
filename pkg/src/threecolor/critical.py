"""4-criticality, critical-subgraph extraction and the Kostochka-Yancey
edge bound for 4-critical graphs."""

from __future__ import annotations

from dataclasses import dataclass

from threecolor.colorer import Coloring, find_k_coloring
from threecolor.graph import Graph


class BoundViolation(AssertionError):
    """A 4-critical graph with fewer edges than the proven lower bound."""


def ky_bound(n: int) -> int:
    """Least edge count of a 4-critical graph on ``n`` vertices: ceil((5n-2)/3)."""
    if n < 4:
        raise ValueError("no 4-critical graph has fewer than 4 vertices")
    return -(-(5 * n - 2) // 3)


@dataclass(frozen=True)
class Subgraph:
    """A subgraph given by its compacted graph and the original vertex ids."""

    graph: Graph
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class CriticalityReport:
    is_4_critical: bool
    n: int
    e: int
    ky_bound: int | None
    ky_satisfied: bool | None
    witness: Subgraph | Coloring | None = None

    def to_json(self) -> dict:
        out = {
            "is_4_critical": self.is_4_critical,
            "n": self.n,
            "e": self.e,
            "ky_bound": self.ky_bound,
            "ky_satisfied": self.ky_satisfied,
        }
        if isinstance(self.witness, Coloring):
            out["witness"] = {"coloring": list(self.witness.colors)}
        elif isinstance(self.witness, Subgraph):
            out["witness"] = {
                "subgraph_vertices": list(self.witness.vertices),
                "subgraph_edges": [
                    [self.witness.vertices[u], self.witness.vertices[v]]
                    for u, v in self.witness.graph.edges()
                ],
            }
        return out


def _colorable(g: Graph) -> bool:
    return find_k_coloring(g, 3) is not None


def is_4_critical(g: Graph) -> CriticalityReport:
    """Decide 4-criticality.

    Deleting edges suffices: every proper subgraph lies inside some ``g - e``
    or ``g - v``, and ``g - v`` lies inside ``g - e`` for any edge ``e`` at
    ``v``. Isolated vertices have no such edge and are checked directly.
    """
    n, e = g.n, g.edge_count
    bound = ky_bound(n) if n >= 4 else None
    coloring = find_k_coloring(g, 3)
    if coloring is not None:
        return CriticalityReport(False, n, e, bound, _bound_ok(e, bound), coloring)
    critical = all(g.degree(v) > 0 for v in g.vertices()) and all(
        _colorable(g.remove_edge(u, v)) for u, v in g.edges()
    )
    if not critical:
        sub, ids = _extract(g)
        return CriticalityReport(
            False, n, e, bound, _bound_ok(e, bound), Subgraph(sub, tuple(ids))
        )
    ok = _bound_ok(e, bound)
    if not ok:
        raise BoundViolation(f"4-critical graph with n={n}, e={e} < {bound}")
    return CriticalityReport(True, n, e, bound, ok)


def _bound_ok(e: int, bound: int | None) -> bool | None:
    return None if bound is None else e >= bound


def _extract(g: Graph) -> tuple[Graph, list[int]]:
    if _colorable(g):
        raise ValueError("graph is 3-colorable; it has no 4-critical subgraph")
    current = g
    for u, v in g.edges():
        trial = current.remove_edge(u, v)
        if not _colorable(trial):
            current = trial
    return current.without_isolated()


def extract_4_critical_subgraph(g: Graph) -> Graph:
    """Greedily drop edges (in increasing order) while the graph stays
    non-3-colorable, then drop isolated vertices."""
    return _extract(g)[0]


def extract_with_ids(g: Graph) -> Subgraph:
    sub, ids = _extract(g)
    return Subgraph(sub, tuple(ids))
