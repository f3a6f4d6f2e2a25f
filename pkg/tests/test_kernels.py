"""The compiled and pure-Python kernels must agree exactly."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threecolor import _kernels, _pykernels
from threecolor.colorer import degeneracy_order

from conftest import graphs

ckernels = pytest.importorskip("threecolor._ckernels")


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9), st.integers(1, 4), st.booleans())
def test_find_coloring_parity(g, k, sym):
    order = degeneracy_order(g)
    fixed = [-1] * g.n
    a = ckernels.find_coloring(g.masks, k, order, fixed, sym)
    b = _pykernels.find_coloring(g.masks, k, order, fixed, sym)
    assert (None if a is None else list(a)) == (None if b is None else list(b))


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=7), st.data())
def test_all_colorings_parity_with_precoloring(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    fixed = [-1] * g.n
    fixed[v] = data.draw(st.integers(0, 2))
    order = [w for w in degeneracy_order(g) if w != v]
    a = ckernels.all_colorings(g.masks, 3, order, fixed, 10**6)
    b = _pykernels.all_colorings(g.masks, 3, order, fixed, 10**6)
    assert [list(x) for x in a] == [list(x) for x in b]


def test_all_colorings_budget_parity():
    masks = tuple(0 for _ in range(12))  # empty graph: 3**12 colorings
    order = list(range(12))
    fixed = [-1] * 12
    assert ckernels.all_colorings(masks, 3, order, fixed, 1000) is None
    assert _pykernels.all_colorings(masks, 3, order, fixed, 1000) is None


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_canonical_order_parity(g):
    assert list(ckernels.canonical_order(g.n, g.masks)) == list(
        _pykernels.canonical_order(g.n, g.masks)
    )


def test_backend_selected():
    assert _kernels.BACKEND in ("cython", "python")
