"""Small-graph enumeration and corpus-wide theorem checks.

Graphs are generated one vertex at a time: every graph on n vertices is
some graph on n-1 vertices plus a vertex joined to a subset of it, and
canonical keys remove isomorphic repeats. All filters are closed under
deleting a vertex (connectivity too, if the deleted vertex is not a cut
vertex, and every connected graph has one that is not), so filtering each
level keeps the construction complete.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterator

from threecolor import theorems
from threecolor.critical import BoundViolation, is_4_critical, ky_bound
from threecolor.embedding import (
    RotationEmbedding,
    embed_planar,
    euler_characteristic,
    faces,
    is_planar,
)
from threecolor.graph import (
    Graph,
    canonical_key,
    is_connected,
    parse_graph6,
    triangle_count,
    write_graph6,
)
from threecolor.reductions import (
    SafeIdentify,
    Witness,
    analyze_quad_face,
    check_witness,
    identification_creates_triangle,
    quad_faces,
)

MAX_N = 10


class GuaranteeViolation(AssertionError):
    """A theorem procedure failed on an instance meeting its hypotheses."""

    def __init__(self, theorem: str, bundle: dict):
        super().__init__(f"theorem {theorem}: guarantee violated: {json.dumps(bundle)}")
        self.theorem = theorem
        self.bundle = bundle


@dataclass(frozen=True)
class CorpusSpec:
    max_n: int
    connected: bool = False
    planar: bool = False
    triangle_free: bool = False
    max_triangles: int | None = None

    def __post_init__(self):
        if not 1 <= self.max_n <= MAX_N:
            raise ValueError(f"max_n must be in 1..{MAX_N}")
        if self.max_triangles is not None and self.max_triangles < 0:
            raise ValueError("max_triangles must be non-negative")

    def accepts(self, g: Graph) -> bool:
        if self.connected and not is_connected(g):
            return False
        limit = 0 if self.triangle_free else self.max_triangles
        if limit is not None and triangle_count(g) > limit:
            return False
        return not self.planar or is_planar(g)


@lru_cache(maxsize=None)
def _level(n: int, connected: bool, planar: bool, limit: int | None) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    spec = CorpusSpec(n, connected, planar, False, limit)
    seen: set[bytes] = set()
    out = []
    for g in _level(n - 1, connected, planar, limit):
        verts = list(g.vertices())
        for r in range(1 if connected else 0, n):
            for nbrs in itertools.combinations(verts, r):
                h = g.add_vertex(nbrs)
                key = canonical_key(h)
                if key in seen:
                    continue
                seen.add(key)
                if spec.accepts(h):
                    out.append(h)
    return tuple(out)


def enumerate_graphs(spec: CorpusSpec) -> Iterator[Graph]:
    """One graph per isomorphism class on exactly ``spec.max_n`` vertices."""
    limit = 0 if spec.triangle_free else spec.max_triangles
    yield from _level(spec.max_n, spec.connected, spec.planar, limit)


def enumerate_up_to(spec: CorpusSpec, min_n: int = 1) -> Iterator[Graph]:
    """Graphs on ``min_n`` to ``spec.max_n`` vertices, by order."""
    for n in range(min_n, spec.max_n + 1):
        yield from enumerate_graphs(
            CorpusSpec(n, spec.connected, spec.planar, spec.triangle_free, spec.max_triangles)
        )


THEOREM_IDS = ("1", "grotzsch", "2", "4", "5", "6", "7", "8", "9", "quadface")

DEFAULT_SPECS = {
    "1": CorpusSpec(7, connected=True),
    "grotzsch": CorpusSpec(8, connected=True, planar=True, triangle_free=True),
    "2": CorpusSpec(6, connected=True, planar=True, triangle_free=True),
    "4": CorpusSpec(6, connected=True, planar=True, triangle_free=True),
    "5": CorpusSpec(7, connected=True, planar=True, triangle_free=True),
    "6": CorpusSpec(6, connected=True, planar=True, triangle_free=True),
    "7": CorpusSpec(7, connected=True, planar=True, max_triangles=3),
    "8": CorpusSpec(6, connected=True, planar=True),
    "9": CorpusSpec(6, connected=True, planar=True),
    "quadface": CorpusSpec(8, connected=True, planar=True),
}

ALIASES = {"3": "grotzsch", "ky": "1"}


def normalize_theorem(theorem: str) -> str:
    t = ALIASES.get(str(theorem).lower(), str(theorem).lower())
    if t not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem!r}; choose from {THEOREM_IDS}")
    return t


@dataclass
class SuiteReport:
    theorem: str
    spec: CorpusSpec
    graphs: int = 0
    instances: int = 0
    hypothesis_ok: int = 0
    guarantee_held: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "spec": asdict(self.spec),
            "graphs": self.graphs,
            "instances": self.instances,
            "hypothesis_ok": self.hypothesis_ok,
            "guarantee_held": self.guarantee_held,
            "failures": self.failures,
            "elapsed_s": round(self.elapsed, 3),
            "details": self.details,
        }


@dataclass
class _Tally:
    instances: int = 0
    hypothesis_ok: int = 0
    guarantee_held: int = 0
    failures: list = field(default_factory=list)
    found: list = field(default_factory=list)

    def add(self, verdict, g: Graph, params: dict) -> None:
        self.instances += 1
        if verdict.hypothesis_ok:
            self.hypothesis_ok += 1
            if verdict.guarantee_held:
                self.guarantee_held += 1
        if not verdict.guarantee_held:
            self.failures.append(
                {"graph6": write_graph6(g), "params": params, "verdict": verdict.to_json()}
            )


def twisted_embeddings(emb: RotationEmbedding) -> Iterator[tuple[tuple[int, int], RotationEmbedding]]:
    """Projective embeddings from a plane one: flip the sign of one edge
    whose two sides lie on different faces (this merges the two faces)."""
    face_of: dict[tuple[int, int], int] = {}
    for i, f in enumerate(faces(emb)):
        for d in f.darts:
            face_of[d] = i
    for u, v in emb.graph.edges():
        if face_of[(u, v)] != face_of[(v, u)]:
            yield (u, v), emb.twisted(u, v)


def _proper_face_colorings(g: Graph, vs) -> Iterator[dict[int, int]]:
    distinct = list(dict.fromkeys(vs))
    for colors in itertools.product(theorems.COLORS, repeat=len(distinct)):
        pre = dict(zip(distinct, colors))
        if all(pre[vs[i]] != pre[vs[(i + 1) % len(vs)]] for i in range(len(vs))):
            yield pre


def _quadface_oracle(g: Graph, emb: RotationEmbedding, f) -> dict | None:
    """Compare one quad-face analysis against triangle counting; return a
    failure record or None."""
    v = f.vertices
    creates = [identification_creates_triangle(g, v[a], v[a + 2]) for a in (0, 1)]
    got = analyze_quad_face(g, emb, f)
    if isinstance(got, SafeIdentify):
        ok = not creates[got.axis] and (got.axis == 0 or creates[0])
    else:
        ok = all(creates) and isinstance(got, Witness) and check_witness(g, v, got)
    if ok:
        return None
    return {"face": list(v), "creates": creates, "analysis": repr(got)}


def _check_graph(theorem: str, g6: str) -> _Tally:
    g = parse_graph6(g6)
    t = _Tally()
    if theorem == "1":
        if g.n < 4:
            return t
        t.instances += 1
        try:
            rep = is_4_critical(g)
        except BoundViolation as exc:
            t.failures.append({"graph6": g6, "params": {}, "error": str(exc)})
            return t
        if rep.is_4_critical:
            t.hypothesis_ok += 1
            t.guarantee_held += 1
            t.found.append([g6, g.n, g.edge_count, ky_bound(g.n)])
        return t
    if theorem == "grotzsch":
        t.add(theorems.grotzsch_color(g), g, {})
    elif theorem == "2":
        for h in g.non_edges():
            t.add(theorems.color_plus_edge(g, h), g, {"h": list(h)})
    elif theorem == "4":
        for r in range(0, 5):
            for s in itertools.combinations(g.vertices(), r):
                t.add(theorems.color_plus_apex(g, s), g, {"s": list(s)})
    elif theorem == "5":
        emb = embed_planar(g)
        for i, f in enumerate(faces(emb)):
            if not 0 < len(f) <= 5:
                continue
            for pre in _proper_face_colorings(g, f.vertices):
                verdict = theorems.extend_face_precoloring(emb, f, pre)
                t.add(verdict, g, {"face": i, "precoloring": {str(k): c for k, c in pre.items()}})
    elif theorem == "6":
        for u, v in g.non_edges():
            for cu, cv in itertools.product(theorems.COLORS, repeat=2):
                verdict = theorems.extend_two_vertex_precoloring(g, u, v, cu, cv)
                t.add(verdict, g, {"u": u, "v": v, "cu": cu, "cv": cv})
    elif theorem == "7":
        t.add(theorems.color_three_triangles(g), g, {})
    elif theorem in ("8", "9"):
        emb = embed_planar(g)
        embeddings = [(None, emb)] if theorem == "9" else []
        embeddings += list(twisted_embeddings(emb))
        for twist, e in embeddings:
            if theorem == "8":
                verdict = theorems.verify_projective(e)
            else:
                verdict = theorems.verify_456(e)
            t.add(verdict, g, {"twisted_edge": list(twist) if twist else None,
                               "chi": euler_characteristic(e)})
    elif theorem == "quadface":
        emb = embed_planar(g)
        for f in quad_faces(g, emb):
            t.instances += 1
            t.hypothesis_ok += 1
            bad = _quadface_oracle(g, emb, f)
            if bad is None:
                t.guarantee_held += 1
            else:
                t.failures.append({"graph6": g6, "params": bad})
    return t


def run_suite(
    theorem: str,
    spec: CorpusSpec | None = None,
    parallelism: int = 1,
    fail_fast: bool = True,
    min_n: int = 1,
) -> SuiteReport:
    """Feed every corpus graph (and every parameter choice) to a theorem
    procedure and aggregate the verdicts.

    With ``fail_fast`` a failure raises ``GuaranteeViolation`` carrying a
    reproduction bundle; otherwise failures are listed in the report.
    """
    theorem = normalize_theorem(theorem)
    spec = spec or DEFAULT_SPECS[theorem]
    start = time.perf_counter()
    g6s = [write_graph6(g) for g in enumerate_up_to(spec, min_n)]
    report = SuiteReport(theorem, spec, graphs=len(g6s))
    if parallelism > 1 and len(g6s) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            chunk = max(1, len(g6s) // (parallelism * 8))
            tallies = list(pool.map(_check_graph, itertools.repeat(theorem), g6s, chunksize=chunk))
    else:
        tallies = [_check_graph(theorem, s) for s in g6s]
    found = []
    for tally in tallies:
        report.instances += tally.instances
        report.hypothesis_ok += tally.hypothesis_ok
        report.guarantee_held += tally.guarantee_held
        report.failures.extend(tally.failures)
        found.extend(tally.found)
    if theorem == "1":
        report.details["critical"] = found
        report.details["tight"] = [r for r in found if r[2] == r[3]]
    report.elapsed = time.perf_counter() - start
    if report.failures and fail_fast:
        bundle = dict(report.failures[0])
        bundle["theorem"] = theorem
        bundle["repro"] = f"threecolor verify-theorem {theorem} --graph '{bundle['graph6']}'"
        raise GuaranteeViolation(theorem, bundle)
    return report
