import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threecolor.colorer import Coloring, find_k_coloring
from threecolor.embedding import embed_planar, faces
from threecolor.graph import Graph, identify, triangle_count
from threecolor.harness import CorpusSpec, enumerate_up_to
from threecolor.named import cube, cycle, dodecahedron, path
from threecolor.reductions import (
    ApexAdded,
    EdgeAdded,
    Identification,
    ReductionError,
    ReductionTrace,
    SafeIdentify,
    Witness,
    analyze_quad_face,
    check_witness,
    identification_creates_triangle,
    lift_coloring,
    quad_corners,
    quad_faces,
    reduce_quad_faces,
)

from conftest import brute_triangle_count

# 4-face 0123 with triangle 0-1-4 and paths 4-5-3, 4-6-2
BLOCKED = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (4, 5), (5, 3), (4, 6), (6, 2)])

PLANE_TF = [g for g in enumerate_up_to(CorpusSpec(7, True, True, True)) if g.n >= 4]


def test_creates_triangle():
    assert not identification_creates_triangle(cycle(4), 0, 2)
    assert identification_creates_triangle(path(4), 0, 3)
    assert not identification_creates_triangle(path(5), 0, 4)
    assert identification_creates_triangle(cycle(5), 0, 2)
    with pytest.raises(ValueError):
        identification_creates_triangle(cycle(4), 0, 1)


def test_safe_face_on_cube():
    emb = embed_planar(cube())
    for f in quad_faces(cube(), emb):
        assert analyze_quad_face(cube(), emb, f) == SafeIdentify(0)


def test_witness_structure():
    emb = embed_planar(BLOCKED)
    face = next(f for f in quad_faces(BLOCKED, emb) if set(f.vertices) == {0, 1, 2, 3})
    w = analyze_quad_face(BLOCKED, emb, face)
    assert isinstance(w, Witness)
    assert check_witness(BLOCKED, face.vertices, w)
    # edge-by-edge, independently of check_witness
    v, i = face.vertices, w.i
    assert BLOCKED.has_edge(v[i], w.z) and BLOCKED.has_edge(v[(i + 1) % 4], w.z)
    assert BLOCKED.has_edge(w.z, w.x) and BLOCKED.has_edge(w.x, v[(i - 1) % 4])
    assert BLOCKED.has_edge(w.z, w.y) and BLOCKED.has_edge(w.y, v[(i + 2) % 4])
    assert w.z == 4 and {w.x, w.y} == {5, 6}


def test_witness_checker_rejects_bogus():
    v = (0, 1, 2, 3)
    assert not check_witness(BLOCKED, v, Witness(0, 4, 6, 5))
    assert not check_witness(BLOCKED, v, Witness(0, 2, 5, 6))


def test_analyze_rejects_non_faces():
    emb = embed_planar(cube())
    tri = faces(embed_planar(Graph(3, [(0, 1), (1, 2), (0, 2)])))[0]
    with pytest.raises(ValueError):
        quad_corners(tri)
    with pytest.raises(ValueError):
        analyze_quad_face(cycle(4), emb, faces(emb)[0])
    k4 = Graph(4, list(itertools.combinations(range(4), 2)))
    e4 = embed_planar(k4.remove_edge(0, 2))
    quad = next((f for f in faces(e4) if len(f) == 4), None)
    if quad is not None:
        with pytest.raises(ValueError):
            analyze_quad_face(k4.remove_edge(0, 2), e4, quad)


def test_quad_faces_excludes_faces_with_diagonals():
    g = cycle(4).add_edge(0, 2)
    assert quad_faces(g, embed_planar(g)) == []


@pytest.mark.parametrize("g", [cube(), dodecahedron(), cycle(4), cycle(6)])
def test_reduce_and_lift_named(g):
    reduced, trace = reduce_quad_faces(g)
    assert triangle_count(reduced) == 0
    assert trace.replay(g) == reduced
    c = find_k_coloring(reduced, 3)
    lifted = lift_coloring(trace, c, reduced)
    assert lifted.is_proper(g)


def test_cube_reduces_to_fewer_vertices():
    reduced, trace = reduce_quad_faces(cube())
    assert reduced.n == 8 - len(trace) and len(trace) > 0


@pytest.mark.parametrize("g", PLANE_TF, ids=lambda g: f"n{g.n}e{g.edge_count}")
def test_reduce_corpus(g):
    reduced, trace = reduce_quad_faces(g)
    assert brute_triangle_count(reduced) == 0
    c = find_k_coloring(reduced, 3)
    assert c is not None
    assert lift_coloring(trace, c, reduced).is_proper(g)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(PLANE_TF), st.data())
def test_protected_pair_never_merged(g, data):
    non = g.non_edges()
    if not non:
        return
    u, v = data.draw(st.sampled_from(non))
    _, trace = reduce_quad_faces(g, (u, v))
    a, b = u, v
    for step in trace.steps:
        a, b = step.mapping[a], step.mapping[b]
        assert a != b


def test_budget_respected_and_checked():
    with pytest.raises(ValueError):
        reduce_quad_faces(BLOCKED, triangle_budget=0)
    reduced, _ = reduce_quad_faces(BLOCKED, triangle_budget=1)
    assert triangle_count(reduced) <= 1


def test_reduce_refuses_nonplanar():
    k33 = Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    with pytest.raises(ReductionError):
        reduce_quad_faces(k33)


def test_trace_replay_and_json():
    g = cycle(4)
    h, m = identify(g, 0, 2)
    trace = ReductionTrace((Identification(0, 2, m),)).then([EdgeAdded(1, 2), ApexAdded(3, (0, 1))])
    out = trace.replay(g)
    assert out.n == 4 and out.has_edge(1, 2) and out.neighbors(3) == {0, 1}
    assert trace.to_json() == [
        {"identify": [0, 2]}, {"add_edge": [1, 2]}, {"add_apex": 3, "neighbors": [0, 1]},
    ]
    bad = ReductionTrace((Identification(0, 2, (0, 1, 0, 3)),))
    with pytest.raises(ReductionError):
        bad.replay(g)
    with pytest.raises(ReductionError):
        ReductionTrace((ApexAdded(7, (0,)),)).replay(g)


def test_lift_drops_apex_and_expands_identifications():
    g = cycle(4)
    _, m = identify(g, 0, 2)
    trace = ReductionTrace((Identification(0, 2, m), ApexAdded(3, (0,))))
    lifted = lift_coloring(trace, Coloring((1, 2, 2, 3)))
    assert lifted.colors == (1, 2, 1, 2)
    with pytest.raises(ValueError):
        lift_coloring(trace, Coloring((1, 1, 2, 3)), trace.replay(g))


def test_creates_triangle_documented_cases():
    # C4 plus a path v0-a-b-v2 with a, b new
    g = Graph(6, cycle(4).edges() + [(0, 4), (4, 5), (5, 2)])
    assert identification_creates_triangle(g, 0, 2)
    assert not identification_creates_triangle(cube(), 0, 3)
    # antipodal vertices of C6: both common-neighbor pairs become triangles
    h, _ = identify(cycle(6), 0, 3)
    assert brute_triangle_count(h) == 2
    assert identification_creates_triangle(cycle(6), 0, 3)


def test_prism_witness_with_x_equal_y():
    # triangles 0-1-4 and 2-3-5, joined by 0-3, 1-2, 4-5
    prism = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 5), (3, 5), (4, 5)])
    emb = embed_planar(prism)
    face = next(f for f in quad_faces(prism, emb) if set(f.vertices) == {0, 1, 2, 3})
    w = analyze_quad_face(prism, emb, face)
    assert isinstance(w, Witness) and w.x == w.y
    assert check_witness(prism, face.vertices, w)


def test_small_fixpoints():
    g, trace = reduce_quad_faces(cycle(5))
    assert g == cycle(5) and len(trace) == 0
    g, trace = reduce_quad_faces(cycle(4))
    assert len(trace) == 1 and g.n == 3 and g.edge_count == 2
    lifted = lift_coloring(trace, Coloring((1, 2, 2)))
    assert lifted.is_proper(cycle(4))
    assert lift_coloring(ReductionTrace(), Coloring((1, 2))).colors == (1, 2)
