"""Exact k-coloring by backtracking with forward checking.

This is the ground-truth oracle behind every theorem procedure. The search
is deterministic: free vertices are branched in reverse smallest-last
(degeneracy) order, ties broken by vertex id, and colors are tried in
increasing order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Mapping

from threecolor import _kernels
from threecolor.graph import Graph

DEFAULT_ENUM_BUDGET = 3**16
BUDGET_ENV = "THREECOLOR_ENUM_BUDGET"

# vertex -> color for a subset of vertices
Precoloring = Mapping[int, int]


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Colors ``1..k`` indexed by vertex id."""

    colors: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def is_proper(self, g: Graph) -> bool:
        return len(self.colors) == g.n and all(
            self.colors[u] != self.colors[v] for u, v in g.edges()
        )

    def agrees_with(self, pre: Precoloring) -> bool:
        return all(self.colors[v] == c for v, c in pre.items())

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def renamed(self, perm: Mapping[int, int]) -> "Coloring":
        return Coloring(tuple(perm[c] for c in self.colors))


def is_proper_coloring(g: Graph, colors) -> bool:
    """Independent properness check on a plain sequence of colors."""
    if len(colors) != g.n:
        return False
    for u in g.vertices():
        for w in g.neighbors(u):
            if colors[u] == colors[w]:
                return False
    return True


def degeneracy_order(g: Graph) -> list[int]:
    """Vertices in reverse smallest-last order (ties by smallest id)."""
    deg = [g.degree(v) for v in g.vertices()]
    removed = [False] * g.n
    removal = []
    for _ in range(g.n):
        v = min((v for v in g.vertices() if not removed[v]), key=lambda v: (deg[v], v))
        removed[v] = True
        removal.append(v)
        for w in g.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
    return removal[::-1]


def _fixed(g: Graph, pre: Precoloring, k: int) -> list[int]:
    fixed = [-1] * g.n
    for v, c in pre.items():
        if not 0 <= v < g.n:
            raise ValueError(f"precolored vertex {v} out of range")
        if not 1 <= c <= k:
            raise ValueError(f"color {c} outside 1..{k}")
        fixed[v] = c - 1
    for v, c in pre.items():
        for w in g.neighbors(v):
            if w in pre and pre[w] == c:
                raise ValueError(f"precoloring is improper on edge ({v}, {w})")
    return fixed


def find_k_coloring(g: Graph, k: int) -> Coloring | None:
    """A proper coloring with colors ``1..k``, or None if none exists."""
    if k < 1:
        raise ValueError("k must be at least 1")
    order = degeneracy_order(g)
    found = _kernels.find_coloring(g.masks, k, order, [-1] * g.n, True)
    if found is None:
        return None
    return Coloring(tuple(c + 1 for c in found))


def extend_precoloring(g: Graph, pre: Precoloring, k: int) -> Coloring | None:
    """Complete ``pre`` to a proper k-coloring, or None if impossible."""
    if k < 1:
        raise ValueError("k must be at least 1")
    fixed = _fixed(g, pre, k)
    order = [v for v in degeneracy_order(g) if fixed[v] < 0]
    found = _kernels.find_coloring(g.masks, k, order, fixed, False)
    if found is None:
        return None
    return Coloring(tuple(c + 1 for c in found))


def is_k_colorable(g: Graph, k: int) -> bool:
    return find_k_coloring(g, k) is not None


def _budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_ENUM_BUDGET


def enumerate_colorings(
    g: Graph, k: int = 3, pre: Precoloring | None = None, budget: int | None = None
) -> Iterator[Coloring]:
    """Every proper k-coloring (extending ``pre``), each exactly once.

    Raises BudgetExceeded when the search would visit more than ``budget``
    assignments (default 3**16, or the THREECOLOR_ENUM_BUDGET variable).
    """
    pre = pre or {}
    fixed = _fixed(g, pre, k)
    order = [v for v in degeneracy_order(g) if fixed[v] < 0]
    limit = _budget(budget)
    found = _kernels.all_colorings(g.masks, k, order, fixed, limit)
    if found is None:
        raise BudgetExceeded(f"more than {limit} assignments explored")
    for colors in found:
        yield Coloring(tuple(c + 1 for c in colors))


def enumerate_3_colorings(
    g: Graph, pre: Precoloring | None = None, budget: int | None = None
) -> Iterator[Coloring]:
    return enumerate_colorings(g, 3, pre, budget)


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = 1
    while not is_k_colorable(g, k):
        k += 1
    return k
