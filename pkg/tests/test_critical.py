import pytest

from threecolor.colorer import Coloring, find_k_coloring
from threecolor.critical import (
    BoundViolation,
    Subgraph,
    extract_4_critical_subgraph,
    extract_with_ids,
    is_4_critical,
    ky_bound,
)
from threecolor.graph import Graph
from threecolor.named import complete, cycle, disjoint_union, grotzsch, wheel


@pytest.mark.parametrize("n, bound", [(4, 6), (5, 8), (6, 10), (7, 11), (11, 18)])
def test_ky_bound_values(n, bound):
    assert ky_bound(n) == bound


def test_ky_bound_domain():
    with pytest.raises(ValueError):
        ky_bound(3)


@pytest.mark.parametrize("g, n, e", [(complete(4), 4, 6), (wheel(5), 6, 10), (grotzsch(), 11, 20)])
def test_known_4_critical_graphs(g, n, e):
    rep = is_4_critical(g)
    assert rep.is_4_critical and (rep.n, rep.e) == (n, e)
    assert rep.ky_satisfied and rep.e >= rep.ky_bound


def test_tight_cases():
    assert is_4_critical(complete(4)).ky_bound == 6
    assert is_4_critical(wheel(5)).ky_bound == 10
    assert is_4_critical(grotzsch()).ky_bound == 18


def test_three_colorable_graph_gets_coloring_witness():
    rep = is_4_critical(cycle(5))
    assert not rep.is_4_critical
    assert isinstance(rep.witness, Coloring) and rep.witness.is_proper(cycle(5))
    assert rep.to_json()["witness"]["coloring"] == list(rep.witness.colors)


def test_non_critical_4_chromatic_graph_gets_subgraph_witness():
    g = complete(4).add_vertex([0, 1])  # K4 plus a pendant-ish vertex
    rep = is_4_critical(g)
    assert not rep.is_4_critical
    assert isinstance(rep.witness, Subgraph)
    sub = rep.witness
    assert sub.graph.n == 4 and sub.graph.edge_count == 6
    assert sub.vertices == (0, 1, 2, 3)
    assert rep.to_json()["witness"]["subgraph_vertices"] == [0, 1, 2, 3]


def test_isolated_vertex_breaks_criticality():
    g = disjoint_union(complete(4), Graph(1))
    assert not is_4_critical(g).is_4_critical


def test_wheel_with_even_rim_is_not_4_chromatic():
    assert not is_4_critical(wheel(6)).is_4_critical


def test_extraction_yields_critical_subgraph():
    g = disjoint_union(grotzsch(), cycle(5)).add_edge(0, 11)
    sub = extract_4_critical_subgraph(g)
    assert is_4_critical(sub).is_4_critical
    ids = extract_with_ids(g).vertices
    assert all(v < 11 for v in ids)


def test_extraction_refuses_colorable_graph():
    with pytest.raises(ValueError):
        extract_4_critical_subgraph(cycle(6))


def test_bound_violation_is_an_assertion():
    assert issubclass(BoundViolation, AssertionError)


def test_every_critical_graph_is_not_3_colorable():
    for g in (complete(4), wheel(5), wheel(7), grotzsch()):
        assert find_k_coloring(g, 3) is None
        assert is_4_critical(g).is_4_critical


def test_extraction_documented_cases():
    pendant = complete(4).add_vertex([0])
    sub = extract_4_critical_subgraph(pendant)
    assert sub.n == 4 and sub.edge_count == 6
    assert is_4_critical(extract_4_critical_subgraph(complete(5))).is_4_critical
    assert extract_4_critical_subgraph(grotzsch()) == grotzsch()
