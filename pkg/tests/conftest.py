"""Shared brute-force oracles and hypothesis strategies.

Nothing here calls into the package's solvers; these are the independent
references the tests compare against.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from threecolor.graph import Graph


def brute_colorings(g: Graph, k: int = 3, pre=None) -> list[tuple[int, ...]]:
    pre = pre or {}
    out = []
    for colors in itertools.product(range(1, k + 1), repeat=g.n):
        if any(colors[v] != c for v, c in pre.items()):
            continue
        if all(colors[u] != colors[v] for u, v in g.edges()):
            out.append(colors)
    return out


def brute_triangle_count(g: Graph) -> int:
    return sum(
        1
        for a, b, c in itertools.combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )


def chromatic_polynomial_at(edges: frozenset, n: int, k: int) -> int:
    """P(G, k) by deletion-contraction on an edge set over vertices 0..n-1."""
    if not edges:
        return k**n
    u, v = min(edges)
    deleted = edges - {(u, v)}
    # contract v into u; vertex ids above v shift down
    def m(w):
        if w == v:
            w = u
        return w - 1 if w > v else w

    contracted = frozenset(
        tuple(sorted((m(a), m(b)))) for a, b in deleted if m(a) != m(b)
    )
    return chromatic_polynomial_at(deleted, n, k) - chromatic_polynomial_at(contracted, n - 1, k)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    target = set(h.edges())
    for perm in itertools.permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges()):
            return True
    return False


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@pytest.fixture
def oracle():
    class O:
        colorings = staticmethod(brute_colorings)
        triangles = staticmethod(brute_triangle_count)
        chromatic_polynomial = staticmethod(chromatic_polynomial_at)
        isomorphic = staticmethod(brute_isomorphic)

    return O


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
