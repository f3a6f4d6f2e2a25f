import itertools

import pytest

from threecolor.embedding import embed_planar, euler_characteristic, is_planar
from threecolor.graph import (
    Graph,
    canonical_key,
    is_connected,
    parse_graph6,
    triangle_count,
    write_graph6,
)
from threecolor.harness import (
    CorpusSpec,
    GuaranteeViolation,
    SuiteReport,
    _Tally,
    enumerate_graphs,
    enumerate_up_to,
    normalize_theorem,
    run_suite,
    twisted_embeddings,
)
from threecolor.named import cube, wheel
from threecolor.theorems import TheoremVerdict

from conftest import brute_isomorphic


def brute_classes(n, connected=False):
    """Isomorphism classes on n vertices by brute force over all edge sets."""
    pairs = list(itertools.combinations(range(n), 2))
    reps: list[Graph] = []
    for bits in range(1 << len(pairs)):
        g = Graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
        if connected and not is_connected(g):
            continue
        if not any(brute_isomorphic(g, h) for h in reps):
            reps.append(g)
    return reps


def test_counts_on_4_vertices():
    assert len(list(enumerate_graphs(CorpusSpec(4)))) == 11
    assert len(list(enumerate_graphs(CorpusSpec(4, connected=True)))) == 6


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_match_brute_force(n):
    assert len(list(enumerate_graphs(CorpusSpec(n)))) == len(brute_classes(n))
    assert len(list(enumerate_graphs(CorpusSpec(n, connected=True)))) == len(
        brute_classes(n, True)
    )


def test_counts_match_known_sequence():
    got = [len(list(enumerate_graphs(CorpusSpec(n)))) for n in range(1, 8)]
    assert got == [1, 2, 4, 11, 34, 156, 1044]


def test_no_isomorphic_repeats():
    keys = [canonical_key(g) for g in enumerate_graphs(CorpusSpec(6))]
    assert len(keys) == len(set(keys))


def test_filters_hold():
    spec = CorpusSpec(6, connected=True, planar=True, triangle_free=True)
    gs = list(enumerate_up_to(spec))
    assert gs and all(is_connected(g) and triangle_count(g) == 0 and is_planar(g) for g in gs)
    assert [g.n for g in gs] == sorted(g.n for g in gs)
    assert all(triangle_count(g) <= 2 for g in enumerate_graphs(CorpusSpec(6, max_triangles=2)))


def test_filtered_class_complete_against_unfiltered():
    spec = CorpusSpec(6, connected=True, planar=True, triangle_free=True)
    full = [g for g in enumerate_graphs(CorpusSpec(6, connected=True))
            if triangle_count(g) == 0 and is_planar(g)]
    assert {canonical_key(g) for g in enumerate_graphs(spec)} == {canonical_key(g) for g in full}


def test_enumeration_is_deterministic():
    a = [write_graph6(g) for g in enumerate_graphs(CorpusSpec(5))]
    b = [write_graph6(g) for g in enumerate_graphs(CorpusSpec(5))]
    assert a == b


@pytest.mark.parametrize("bad", [0, 11])
def test_spec_guards(bad):
    with pytest.raises(ValueError):
        CorpusSpec(bad)
    with pytest.raises(ValueError):
        CorpusSpec(3, max_triangles=-1)


def test_theorem_ids():
    assert normalize_theorem("3") == "grotzsch"
    assert normalize_theorem("KY") == "1"
    with pytest.raises(ValueError):
        normalize_theorem("10")


def test_twisted_embeddings_are_projective():
    emb = embed_planar(cube())
    twists = list(twisted_embeddings(emb))
    assert len(twists) == 12
    assert all(euler_characteristic(e) == 1 for _, e in twists)


def test_bridges_are_not_twisted():
    tree = Graph(3, [(0, 1), (1, 2)])
    assert list(twisted_embeddings(embed_planar(tree))) == []


def test_ky_suite_small():
    rep = run_suite("1", CorpusSpec(6, connected=True))
    assert rep.ok and rep.hypothesis_ok == 2
    tight = {r[0] for r in rep.details["tight"]}
    assert write_graph6(Graph(4, itertools.combinations(range(4), 2))) in tight
    assert any(brute_isomorphic(wheel(5), parse_graph6(g)) for g in tight)


def test_suite_parallel_matches_serial():
    spec = CorpusSpec(6, True, True, True)
    a = run_suite("2", spec, parallelism=1).to_json()
    b = run_suite("2", spec, parallelism=2).to_json()
    for key in ("graphs", "instances", "hypothesis_ok", "guarantee_held", "failures"):
        assert a[key] == b[key]


def test_suite_report_shape():
    rep = run_suite("grotzsch", CorpusSpec(5, True, True, True))
    out = rep.to_json()
    assert isinstance(rep, SuiteReport)
    assert out["instances"] == out["hypothesis_ok"] == out["guarantee_held"] == out["graphs"]
    assert out["failures"] == []


def test_failure_bundle(monkeypatch):
    def broken(theorem, g6):
        t = _Tally()
        t.add(TheoremVerdict(theorem, True, guarantee_held=False), Graph(1), {"h": [0, 1]})
        return t

    monkeypatch.setattr("threecolor.harness._check_graph", broken)
    with pytest.raises(GuaranteeViolation) as err:
        run_suite("2", CorpusSpec(2))
    bundle = err.value.bundle
    assert bundle["graph6"] == "@" and bundle["params"] == {"h": [0, 1]}
    assert "verify-theorem 2" in bundle["repro"]
    rep = run_suite("2", CorpusSpec(2), fail_fast=False)
    # one graph on 1 vertex, two on 2 vertices
    assert len(rep.failures) == 3 and not rep.ok
