"""Regenerate the embedding fixtures under src/threecolor/data.

Run from the repository root:  python scripts/build_fixtures.py
"""

from __future__ import annotations

import itertools
from pathlib import Path

from threecolor.embedding import (
    RotationEmbedding,
    embed_planar,
    face_lengths,
    format_embedding,
    from_faces,
)
from threecolor.graph import Graph, cycles_up_to_length
from threecolor.named import complete, grotzsch, petersen

DATA = Path(__file__).resolve().parents[1] / "src" / "threecolor" / "data"


def cover_twice(g: Graph, length: int, count: int):
    """Search ``count`` cycles of ``length`` using every edge exactly twice
    whose corners form one cycle at every vertex (a closed surface)."""
    cycles = [c for c in cycles_up_to_length(g, length) if len(c) == length]
    edge_cycles = {e: [] for e in g.edges()}
    for i, c in enumerate(cycles):
        for j, v in enumerate(c):
            w = c[(j + 1) % length]
            edge_cycles[(min(v, w), max(v, w))].append(i)
    use = {e: 0 for e in g.edges()}
    chosen: list[int] = []

    def surface_ok():
        walks = [cycles[i] for i in chosen]
        try:
            from_faces(g, walks)
        except ValueError:
            return False
        return True

    def rec(start):
        if len(chosen) == count:
            return all(u == 2 for u in use.values()) and surface_ok()
        # branch on the first edge still needing a face
        e = next((e for e in g.edges() if use[e] < 2), None)
        if e is None:
            return False
        for i in edge_cycles[e]:
            if i in chosen:
                continue
            c = cycles[i]
            es = [(min(c[j], c[(j + 1) % length]), max(c[j], c[(j + 1) % length])) for j in range(length)]
            if any(use[x] >= 2 for x in es):
                continue
            for x in es:
                use[x] += 1
            chosen.append(i)
            if rec(i):
                return True
            chosen.pop()
            for x in es:
                use[x] -= 1
        return False

    if not rec(0):
        raise RuntimeError("no face set found")
    return [cycles[i] for i in chosen]


def hexagon_face_embedding(g: Graph, hexagon) -> RotationEmbedding:
    # a temporary hub over the hexagon forces it to bound a face
    hub = g.n
    emb = embed_planar(g.add_vertex(hexagon))
    assert isinstance(emb, RotationEmbedding), "gadget with hub must be planar"
    rotation = tuple(tuple(w for w in emb.rotation[v] if w != hub) for v in range(g.n))
    return RotationEmbedding(g, rotation)


def write(name: str, emb: RotationEmbedding, notes: list[str]) -> None:
    text = "".join(f"# {line}\n" for line in notes) + format_embedding(emb)
    (DATA / name).write_text(text)
    print(name, face_lengths(emb))


def main() -> None:
    k4 = complete(4)
    rot = tuple(tuple(sorted(k4.neighbors(v))) for v in range(4))
    write(
        "k4_projective_quad.emb",
        RotationEmbedding(k4, rot, {(0, 2): -1, (1, 3): -1}),
        ["K4 in the projective plane with three 4-faces"],
    )
    write(
        "k4_projective_mixed.emb",
        RotationEmbedding(k4, rot, {(0, 1): -1, (0, 3): -1, (1, 2): -1}),
        ["K4 in the projective plane with two 3-faces and one 6-face"],
    )
    pet = petersen()
    write(
        "petersen_projective.emb",
        from_faces(pet, cover_twice(pet, 5, 6)),
        ["Petersen graph in the projective plane, six pentagonal faces"],
    )
    gr = grotzsch()
    write(
        "grotzsch_projective.emb",
        from_faces(gr, cover_twice(gr, 4, 10)),
        ["Grotzsch graph quadrangulating the projective plane"],
    )
    write(
        "thomas_walls_block.emb",
        embed_planar(k4),
        ["base block of the Thomas-Walls chain: K4", "@designated: 0 1 2 3"],
    )

    # forcing gadgets: hexagon c0..c5 = vertices 0..5
    hexagon = list(range(6))
    ring = [(i, (i + 1) % 6) for i in range(6)]
    # a: A=6, B=7, C=8 off the hexagon
    ga = Graph(9, ring + [(6, 2), (6, 4), (7, 0), (7, 2), (8, 0), (8, 4)])
    write(
        "gadget_a.emb",
        hexagon_face_embedding(ga, hexagon),
        ["three precolored vertices off the hexagon",
         "@outer: 0 1 2 3 4 5", "@precolored: 6 7 8"],
    )
    # b: the precolored triple sits on alternate hexagon vertices
    gb = Graph(6, ring)
    write(
        "gadget_b.emb",
        hexagon_face_embedding(gb, hexagon),
        ["precolored triple on alternate hexagon vertices",
         "@outer: 0 1 2 3 4 5", "@precolored: 0 4 2"],
    )
    # c: c0 precolored, B=6, C=7 precolored; D=8, E=9, F=10 relay colors
    gc = Graph(11, ring + [(8, 6), (8, 7), (8, 2), (8, 4), (9, 0), (9, 7), (9, 2),
                           (10, 0), (10, 6), (10, 4)])
    write(
        "gadget_c.emb",
        hexagon_face_embedding(gc, hexagon),
        ["one precolored vertex on the hexagon, two off it",
         "@outer: 0 1 2 3 4 5", "@precolored: 0 6 7"],
    )
    # d: R=6 joins c0 and c3; the degree-5 apex is added by the generator
    gd = Graph(7, ring + [(6, 0), (6, 3)])
    write(
        "gadget_d.emb",
        hexagon_face_embedding(gd, hexagon),
        ["hexagon with an outside path c0-R-c3; apex joins c0 c1 c3 c4 R",
         "@outer: 0 1 2 3 4 5", "@apex_neighbors: 0 1 3 4 6"],
    )


if __name__ == "__main__":
    main()
