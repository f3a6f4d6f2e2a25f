import pytest

from threecolor.colorer import enumerate_3_colorings, extend_precoloring, find_k_coloring
from threecolor.critical import is_4_critical
from threecolor.embedding import embed_planar, euler_characteristic, face_lengths, faces, is_planar
from threecolor.generators import (
    GADGET_VARIANTS,
    forcing_gadget,
    glue_on_hexagon,
    has_forced_pattern,
    hexagonal_quadrangulation,
    k4_projective,
    load_fixture,
    thomas_walls,
    verify_forcing,
)
from threecolor.graph import triangle_count
from threecolor.named import grotzsch, petersen

from conftest import brute_triangle_count


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_thomas_walls_shape(k):
    gi = thomas_walls(k)
    g = gi.graph
    assert (g.n, g.edge_count) == (3 * k + 1, 5 * k + 1)
    assert brute_triangle_count(g) == 4
    h = g
    for e in gi.designated["edges"]:
        assert g.has_edge(*e)
        h = h.remove_edge(*e)
    assert triangle_count(h) == 0
    assert is_planar(h)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_thomas_walls_critical(k):
    assert is_4_critical(thomas_walls(k).graph).is_4_critical


def test_thomas_walls_rejects_zero():
    with pytest.raises(ValueError):
        thomas_walls(0)


@pytest.mark.parametrize("variant", GADGET_VARIANTS)
def test_gadgets_force_pattern(variant):
    gi = forcing_gadget(variant)
    assert verify_forcing(gi)
    outer = gi.designated["outer"]
    assert len(outer) == 6
    assert all(gi.graph.has_edge(outer[i], outer[(i + 1) % 6]) for i in range(6))


@pytest.mark.parametrize("variant", GADGET_VARIANTS)
def test_gadgets_need_their_constraint(variant):
    assert not verify_forcing(forcing_gadget(variant), constrained=False)


@pytest.mark.parametrize("variant", "abc")
def test_gadgets_abc_plane_triangle_free(variant):
    gi = forcing_gadget(variant)
    assert triangle_count(gi.graph) == 0
    assert euler_characteristic(embed_planar(gi.graph)) == 2
    assert len(gi.designated["precolored"]) == 3


def test_gadget_d_apex_degree_five():
    gi = forcing_gadget("d")
    (apex,) = gi.designated["apex"]
    assert gi.graph.degree(apex) == 5
    base, _ = gi.graph.subgraph(v for v in gi.graph.vertices() if v != apex)
    assert triangle_count(base) == 0 and euler_characteristic(embed_planar(base)) == 2


def test_gadget_unknown_variant():
    with pytest.raises(ValueError):
        forcing_gadget("e")


def test_pattern_helper():
    assert has_forced_pattern((1, 2, 3, 1, 2, 3), range(6))
    assert has_forced_pattern((2, 3, 1, 2, 3, 1), range(6))
    assert not has_forced_pattern((1, 2, 1, 2, 1, 3), range(6))


@pytest.mark.parametrize("rings", [1, 2, 3, 4])
def test_hexagonal_quadrangulation(rings):
    gi = hexagonal_quadrangulation(rings)
    emb = gi.embedding
    assert face_lengths(emb) == [4] * (6 * rings - 3) + [6]
    assert euler_characteristic(emb) == 2
    six = [f for f in faces(emb) if len(f) == 6]
    assert set(six[0].vertices) == set(gi.designated["outer"])
    outer = gi.designated["outer"]
    pre = dict(zip(outer, (1, 2, 3, 1, 2, 3)))
    assert extend_precoloring(gi.graph, pre, 3) is None


def test_hexquad_other_precoloring_recorded():
    # no claim is made about this pattern; the value is whatever the solver says
    gi = hexagonal_quadrangulation(2)
    pre = dict(zip(gi.designated["outer"], (1, 2, 1, 2, 1, 3)))
    c = extend_precoloring(gi.graph, pre, 3)
    assert c is None or (c.agrees_with(pre) and c.is_proper(gi.graph))


def test_hexquad_rejects_zero():
    with pytest.raises(ValueError):
        hexagonal_quadrangulation(0)


def test_k4_projective_variants():
    assert face_lengths(k4_projective("quad_faces")) == [4, 4, 4]
    assert face_lengths(k4_projective("mixed_faces")) == [3, 3, 6]
    for v in ("quad_faces", "mixed_faces"):
        assert euler_characteristic(k4_projective(v)) == 1
    with pytest.raises(ValueError):
        k4_projective("other")


def test_projective_fixtures():
    pet, _ = load_fixture("petersen_projective.emb")
    assert pet.graph == petersen() and face_lengths(pet) == [5] * 6
    grz, _ = load_fixture("grotzsch_projective.emb")
    assert grz.graph == grotzsch() and face_lengths(grz) == [4] * 10
    assert euler_characteristic(pet) == euler_characteristic(grz) == 1


def test_gadget_d_glued_to_hexquad_is_not_3_colorable():
    g = glue_on_hexagon(forcing_gadget("d"), hexagonal_quadrangulation(1))
    assert find_k_coloring(g, 3) is None


def test_gadget_a_precoloring_does_not_extend_over_hexquad():
    gi = forcing_gadget("a")
    g = glue_on_hexagon(gi, hexagonal_quadrangulation(2))
    pre = {v: i + 1 for i, v in enumerate(gi.designated["precolored"])}
    assert extend_precoloring(g, pre, 3) is None
    # without the precoloring the glued graph is still 3-colorable
    assert find_k_coloring(g, 3) is not None


def test_to_json():
    out = thomas_walls(2).to_json()
    assert out["n"] == 7 and out["designated"]["edges"] == [[0, 1], [5, 6]]
    assert next(iter(enumerate_3_colorings(forcing_gadget("b").graph)), None) is not None
