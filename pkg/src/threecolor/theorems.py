"""Certified 3-coloring procedures, one per theorem.

Each procedure checks its hypotheses (never assumes them), runs the
identification moves of the matching proof, solves the reduced instance
exactly and lifts the coloring back. The theorems promise that the reduced
instance is 3-colorable; a failed base solve is reported as
``guarantee_held=False``, which would mean a bug (or a false theorem).

The degree-3 apex theorem is covered by ``color_plus_apex``, which accepts
any apex of degree at most four.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from threecolor.colorer import Coloring, extend_precoloring, find_k_coloring
from threecolor.embedding import (
    Face,
    RotationEmbedding,
    embed_planar,
    euler_characteristic,
    faces,
    short_cycle_census,
)
from threecolor.graph import Graph, cycles_up_to_length, identify, triangle_count, triangles
from threecolor.reductions import (
    ApexAdded,
    EdgeAdded,
    Identification,
    ReductionTrace,
    lift_coloring,
    reduce_quad_faces,
)

COLORS = (1, 2, 3)


@dataclass
class TheoremVerdict:
    theorem: str
    hypothesis_ok: bool
    reasons: tuple[str, ...] = ()
    coloring: Coloring | None = None
    certificate: ReductionTrace = field(default_factory=ReductionTrace)
    guarantee_held: bool = True
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypothesis_ok": self.hypothesis_ok,
            "reasons": list(self.reasons),
            "coloring": list(self.coloring.colors) if self.coloring else None,
            "trace_length": len(self.certificate),
            "guarantee_held": self.guarantee_held,
            "elapsed_s": round(self.elapsed, 6),
            "details": self.details,
        }


def _plane_triangle_free(g: Graph) -> list[str]:
    reasons = []
    if not isinstance(embed_planar(g), RotationEmbedding):
        reasons.append("not planar")
    t = triangle_count(g)
    if t:
        reasons.append(f"has {t} triangle(s)")
    return reasons


def _unmet(theorem: str, g: Graph, reasons: list[str], start: float) -> TheoremVerdict:
    # hypotheses fail: nothing is promised, but report what the exact solver says
    c = find_k_coloring(g, 3)
    return TheoremVerdict(
        theorem,
        False,
        tuple(reasons),
        c,
        details={"exact_3_colorable": c is not None},
        elapsed=time.perf_counter() - start,
    )


def _solve_and_lift(
    theorem: str, g: Graph, target: Graph, trace: ReductionTrace, start: float,
    extra: Mapping | None = None,
) -> TheoremVerdict:
    """Exact-solve ``trace.replay(g)``, lift to ``g`` and verify on ``target``.

    ``target`` may carry an apex beyond ``g``; its color is taken from the
    apex of the reduced graph.
    """
    base = trace.replay(g)
    c = find_k_coloring(base, 3)
    details = dict(extra or {})
    details["reduced_n"] = base.n
    if c is None:
        return TheoremVerdict(
            theorem, True, (), None, trace, False, details, time.perf_counter() - start
        )
    colors = lift_coloring(trace, c, base).colors
    if target.n == g.n + 1:
        colors = colors + (c.colors[-1],)
    lifted = Coloring(colors)
    ok = lifted.is_proper(target)
    return TheoremVerdict(
        theorem, True, (), lifted, trace, ok, details, time.perf_counter() - start
    )


def _image(trace: ReductionTrace, v: int) -> int:
    for step in trace.steps:
        if isinstance(step, Identification):
            v = step.mapping[v]
    return v


def grotzsch_color(g: Graph) -> TheoremVerdict:
    """3-color a planar triangle-free graph."""
    start = time.perf_counter()
    reasons = _plane_triangle_free(g)
    if reasons:
        return _unmet("grotzsch", g, reasons, start)
    _, trace = reduce_quad_faces(g, (), 0)
    return _solve_and_lift("grotzsch", g, g, trace, start)


def color_plus_edge(g: Graph, h: tuple[int, int]) -> TheoremVerdict:
    """3-color ``g + h`` for planar triangle-free ``g``.

    The ends of ``h`` are protected so that no 4-face step merges them.
    """
    start = time.perf_counter()
    u, v = h
    reasons = _plane_triangle_free(g)
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        reasons.append("h is not a pair of distinct vertices")
    elif g.has_edge(u, v):
        reasons.append("h is already an edge")
    if reasons:
        target = g.add_edge(u, v) if u != v and 0 <= min(u, v) and max(u, v) < g.n else g
        return _unmet("2", target, reasons, start)
    _, red = reduce_quad_faces(g, (u, v), 0)
    trace = red.then([EdgeAdded(_image(red, u), _image(red, v))])
    return _solve_and_lift("2", g, g.add_edge(u, v), trace, start)


def color_plus_apex(g: Graph, s: Iterable[int]) -> TheoremVerdict:
    """3-color ``g`` plus a new vertex joined to ``s`` (at most 4 vertices).

    The apex is vertex ``g.n`` of the returned coloring.
    """
    start = time.perf_counter()
    s = tuple(sorted(set(s)))
    reasons = _plane_triangle_free(g)
    if any(not 0 <= x < g.n for x in s):
        raise ValueError("apex neighbors must be vertices of g")
    if len(s) > 4:
        reasons.append(f"apex degree {len(s)} exceeds 4")
    target = g.add_vertex(s)
    if reasons:
        return _unmet("4", target, reasons, start)
    reduced, red = reduce_quad_faces(g, (), 0)
    image = tuple(sorted({_image(red, x) for x in s}))
    trace = red.then([ApexAdded(reduced.n, image)])
    return _solve_and_lift("4", g, target, trace, start)


def _rename(inner: Coloring, pairs: Iterable[tuple[int, int]]) -> Coloring | None:
    """Permute colors so that each vertex in ``pairs`` gets its color."""
    perm: dict[int, int] = {}
    for v, want in pairs:
        have = inner[v]
        if perm.setdefault(have, want) != want:
            return None
    if len(set(perm.values())) != len(perm):
        return None
    free_src = [c for c in COLORS if c not in perm]
    free_dst = [c for c in COLORS if c not in perm.values()]
    perm.update(zip(free_src, free_dst))
    return inner.renamed(perm)


def _find_face(emb: RotationEmbedding, f: Face | int) -> Face | None:
    traced = faces(emb)
    if isinstance(f, int):
        return traced[f] if 0 <= f < len(traced) else None
    want = f.vertices
    k = len(want)
    variants = set()
    for seq in (want, want[::-1]):
        variants.update(seq[r:] + seq[:r] for r in range(k))
    for t in traced:
        if t.vertices in variants:
            return t
    return None


def extend_face_precoloring(
    emb: RotationEmbedding, f: Face | int, pre: Mapping[int, int]
) -> TheoremVerdict:
    """Extend a 3-coloring of a face of length at most 5.

    4-face with both diagonals monochromatic: add an apex over the face and
    use ``color_plus_apex``. 4-face with one monochromatic diagonal: join the
    other diagonal and use ``color_plus_edge``. 5-face: rotate so that the
    color used once is last, then apex over the other four. The inner
    coloring is renamed to match ``pre``. Faces whose boundary is not a
    cycle fall back to the exact solver.
    """
    start = time.perf_counter()
    g = emb.graph
    reasons = []
    if euler_characteristic(emb) != 2:
        reasons.append("embedding is not plane")
    if triangle_count(g):
        reasons.append("graph has triangles")
    face = _find_face(emb, f)
    if face is None:
        raise ValueError("f is not a face of the embedding")
    vs = face.vertices
    if len(vs) > 5:
        raise ValueError(f"face length {len(vs)} exceeds 5")
    if set(pre) != set(vs):
        raise ValueError("precoloring must color exactly the face vertices")
    if any(c not in COLORS for c in pre.values()):
        raise ValueError("precoloring uses colors outside 1..3")
    for i, v in enumerate(vs):
        if pre[v] == pre[vs[(i + 1) % len(vs)]]:
            raise ValueError("precoloring is not proper on the face")
    if reasons:
        v = _unmet("5", g, reasons, start)
        v.coloring = extend_precoloring(g, pre, 3)
        return v

    if not face.is_simple:
        c = extend_precoloring(g, pre, 3)
        return TheoremVerdict(
            "5", True, (), c, ReductionTrace(), c is not None and c.is_proper(g),
            {"route": "exact", "face": list(vs)}, time.perf_counter() - start,
        )

    route: str
    if len(vs) == 4:
        v0, v1, v2, v3 = vs
        if pre[v0] == pre[v2] and pre[v1] == pre[v3]:
            inner, route = color_plus_apex(g, vs), "apex"
        elif pre[v0] == pre[v2]:
            inner, route = color_plus_edge(g, (v1, v3)), "edge"
        else:
            inner, route = color_plus_edge(g, (v0, v2)), "edge"
    else:
        counts = {c: sum(1 for v in vs if pre[v] == c) for c in set(pre.values())}
        j = next(i for i, v in enumerate(vs) if counts[pre[v]] == 1)
        w = vs[j + 1:] + vs[:j + 1]
        inner, route = color_plus_apex(g, w[:4]), "apex"

    details = {"route": route, "face": list(vs), "inner": inner.to_json()}
    if inner.coloring is None or not inner.guarantee_held:
        return TheoremVerdict(
            "5", True, (), None, inner.certificate, False, details,
            time.perf_counter() - start,
        )
    base = Coloring(inner.coloring.colors[: g.n])
    renamed = _rename(base, ((v, pre[v]) for v in vs))
    ok = renamed is not None and renamed.is_proper(g) and renamed.agrees_with(pre)
    return TheoremVerdict(
        "5", True, (), renamed, inner.certificate, ok, details, time.perf_counter() - start
    )


def extend_two_vertex_precoloring(
    g: Graph, u: int, v: int, cu: int, cv: int
) -> TheoremVerdict:
    """Extend colors ``cu``, ``cv`` on non-adjacent ``u``, ``v``.

    Different colors: add the edge uv and use ``color_plus_edge``. Equal
    colors: identify u and v, reduce 4-faces when the result is still plane
    and triangle-free, otherwise hand the identified graph to the exact
    solver.
    """
    start = time.perf_counter()
    if u == v:
        raise ValueError("u and v must be distinct")
    if g.has_edge(u, v):
        raise ValueError(f"{u} and {v} are adjacent")
    if cu not in COLORS or cv not in COLORS:
        raise ValueError("colors must be in 1..3")
    pre = {u: cu, v: cv}
    reasons = _plane_triangle_free(g)
    if reasons:
        verdict = _unmet("6", g, reasons, start)
        verdict.coloring = extend_precoloring(g, pre, 3)
        return verdict

    if cu != cv:
        inner = color_plus_edge(g, (u, v))
        details = {"route": "edge", "inner": inner.to_json()}
        trace = inner.certificate
        base = inner.coloring
    else:
        g1, mapping = identify(g, u, v)
        trace = ReductionTrace((Identification(u, v, mapping),))
        route = "identify+exact"
        if triangle_count(g1) == 0 and isinstance(embed_planar(g1), RotationEmbedding):
            _, red = reduce_quad_faces(g1, (), 0)
            trace = trace.then(red)
            route = "identify+reduce"
        reduced = trace.replay(g)
        c = find_k_coloring(reduced, 3)
        details = {"route": route, "reduced_n": reduced.n}
        base = lift_coloring(trace, c, reduced) if c is not None else None
    if base is None:
        return TheoremVerdict(
            "6", True, (), None, trace, False, details, time.perf_counter() - start
        )
    renamed = _rename(base, pre.items())
    ok = renamed is not None and renamed.is_proper(g) and renamed.agrees_with(pre)
    return TheoremVerdict("6", True, (), renamed, trace, ok, details, time.perf_counter() - start)


def color_three_triangles(g: Graph) -> TheoremVerdict:
    """3-color a planar graph with at most three triangles."""
    start = time.perf_counter()
    reasons = []
    if not isinstance(embed_planar(g), RotationEmbedding):
        reasons.append("not planar")
    t = triangle_count(g)
    if t > 3:
        reasons.append(f"has {t} triangles (more than 3)")
    if reasons:
        return _unmet("7", g, reasons, start)
    _, trace = reduce_quad_faces(g, (), 3)
    return _solve_and_lift("7", g, g, trace, start, {"triangles": t})


def projective_census(emb: RotationEmbedding) -> dict:
    """Contractible 3- and 4-cycles, plus 3- and 4-face counts."""
    census = short_cycle_census(emb, 4)
    lengths = [len(f) for f in faces(emb)]
    return {
        "contractible_3_cycles": sum(1 for r in census if r.contractible and r.length == 3),
        "contractible_4_cycles": sum(1 for r in census if r.contractible and r.length == 4),
        "noncontractible_short_cycles": sum(1 for r in census if not r.contractible),
        "faces_3": lengths.count(3),
        "faces_4": lengths.count(4),
    }


def verify_projective(emb: RotationEmbedding) -> TheoremVerdict:
    """Projective-plane graphs with few contractible short cycles are
    3-colorable: at most two contractible 4-cycles and no contractible
    triangle, or at most one contractible triangle and no contractible
    4-cycle."""
    start = time.perf_counter()
    chi = euler_characteristic(emb)
    if chi != 1:
        raise ValueError(f"embedding is not projective-planar (chi={chi})")
    g = emb.graph
    census = projective_census(emb)
    c3, c4 = census["contractible_3_cycles"], census["contractible_4_cycles"]
    hyp = (c3 == 0 and c4 <= 2) or (c3 <= 1 and c4 == 0)
    c = find_k_coloring(g, 3)
    census["exact_3_colorable"] = c is not None
    reasons = () if hyp else (f"{c3} contractible 3-cycles and {c4} contractible 4-cycles",)
    held = (not hyp) or (c is not None and c.is_proper(g))
    return TheoremVerdict("8", hyp, reasons, c, ReductionTrace(), held, census,
                          time.perf_counter() - start)


def verify_456(emb: RotationEmbedding) -> TheoremVerdict:
    """A 4-chromatic plane or projective-plane graph in which every vertex
    lies in at most one triangle has a cycle of length 4, 5 or 6."""
    start = time.perf_counter()
    chi = euler_characteristic(emb)
    if chi not in (1, 2):
        raise ValueError(f"embedding must be plane or projective (chi={chi})")
    g = emb.graph
    per_vertex = [0] * g.n
    for tri in triangles(g):
        for x in tri:
            per_vertex[x] += 1
    reasons = []
    crowded = [v for v in g.vertices() if per_vertex[v] > 1]
    if crowded:
        reasons.append(f"vertices in several triangles: {crowded}")
    three = find_k_coloring(g, 3)
    if three is not None:
        reasons.append("3-colorable, so not 4-chromatic")
    elif find_k_coloring(g, 4) is None:
        reasons.append("not 4-colorable, so not 4-chromatic")
    details: dict = {}
    if reasons:
        return TheoremVerdict("9", False, tuple(reasons), three, ReductionTrace(), True,
                              details, time.perf_counter() - start)
    found = next((c for c in cycles_up_to_length(g, 6) if len(c) >= 4), None)
    details["cycle"] = list(found) if found else None
    return TheoremVerdict("9", True, (), None, ReductionTrace(), found is not None,
                          details, time.perf_counter() - start)
