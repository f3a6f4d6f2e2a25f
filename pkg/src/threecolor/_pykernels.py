"""Pure-Python hot loops; reference semantics for ``_ckernels``.

All graphs arrive as tuples of neighborhood bitmasks. Colors are 0-based
here; the public API shifts them to 1..k.
"""

from __future__ import annotations

from typing import Sequence


def find_coloring(
    masks: Sequence[int],
    k: int,
    order: Sequence[int],
    fixed: Sequence[int],
    break_symmetry: bool,
) -> list[int] | None:
    """First proper k-coloring in the search order, or None.

    ``fixed[v]`` is a preassigned color or -1. ``order`` lists the free
    vertices in branching order. With ``break_symmetry`` the first branching
    vertex only tries color 0.
    """
    n = len(masks)
    nbrs = [[w for w in range(n) if (m >> w) & 1] for m in masks]
    full = (1 << k) - 1
    domain = [full] * n
    color = [-1] * n
    for v in range(n):
        c = fixed[v]
        if c >= 0:
            if c >= k:
                return None
            color[v] = c
            domain[v] = 1 << c
    for v in range(n):
        c = fixed[v]
        if c >= 0:
            for w in nbrs[v]:
                if color[w] == c:
                    return None
                domain[w] &= ~(1 << c)
    for v in order:
        if domain[v] == 0:
            return None

    m = len(order)

    def rec(i: int) -> bool:
        if i == m:
            return True
        v = order[i]
        d = domain[v]
        if i == 0 and break_symmetry:
            d &= 1
        c = 0
        while d:
            if d & 1:
                bit = 1 << c
                changed = []
                ok = True
                for w in nbrs[v]:
                    if color[w] < 0 and domain[w] & bit:
                        domain[w] &= ~bit
                        changed.append(w)
                        if domain[w] == 0:
                            ok = False
                            break
                if ok:
                    color[v] = c
                    if rec(i + 1):
                        return True
                    color[v] = -1
                for w in changed:
                    domain[w] |= bit
            d >>= 1
            c += 1
        return False

    if rec(0):
        return color
    return None


def all_colorings(
    masks: Sequence[int],
    k: int,
    order: Sequence[int],
    fixed: Sequence[int],
    budget: int,
) -> list[list[int]] | None:
    """Every proper k-coloring extending ``fixed``; None if more than
    ``budget`` search nodes are needed."""
    n = len(masks)
    nbrs = [[w for w in range(n) if (m >> w) & 1] for m in masks]
    full = (1 << k) - 1
    domain = [full] * n
    color = [-1] * n
    for v in range(n):
        c = fixed[v]
        if c >= 0:
            if c >= k:
                return []
            color[v] = c
            domain[v] = 1 << c
    for v in range(n):
        c = fixed[v]
        if c >= 0:
            for w in nbrs[v]:
                if color[w] == c:
                    return []
                domain[w] &= ~(1 << c)
    for v in order:
        if domain[v] == 0:
            return []

    m = len(order)
    out: list[list[int]] = []
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == m:
            out.append(list(color))
            return True
        v = order[i]
        d = domain[v]
        c = 0
        while d:
            if d & 1:
                nodes += 1
                if nodes > budget:
                    return False
                bit = 1 << c
                changed = []
                ok = True
                for w in nbrs[v]:
                    if color[w] < 0 and domain[w] & bit:
                        domain[w] &= ~bit
                        changed.append(w)
                        if domain[w] == 0:
                            ok = False
                            break
                if ok:
                    color[v] = c
                    if not rec(i + 1):
                        return False
                    color[v] = -1
                for w in changed:
                    domain[w] |= bit
            d >>= 1
            c += 1
        return True

    if not rec(0):
        return None
    return out


def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # split cells by neighbor counts into other cells until equitable;
    # new cells are ordered by count, which keeps the result label-invariant
    changed = True
    while changed:
        changed = False
        for si in range(len(cells)):
            smask = 0
            for w in cells[si]:
                smask |= 1 << w
            for ci in range(len(cells)):
                cell = cells[ci]
                if len(cell) == 1:
                    continue
                counts = [bin(masks[v] & smask).count("1") for v in cell]
                if min(counts) == max(counts):
                    continue
                groups: dict[int, list[int]] = {}
                for v, cnt in zip(cell, counts):
                    groups.setdefault(cnt, []).append(v)
                cells[ci:ci + 1] = [groups[c] for c in sorted(groups)]
                changed = True
                break
            if changed:
                break
    return cells


def _certificate(masks: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    rows = []
    for i, v in enumerate(lab):
        r = 0
        m = masks[v]
        for j in range(i):
            if (m >> lab[j]) & 1:
                r |= 1 << j
        rows.append(r)
    return tuple(rows)


def canonical_order(n: int, masks: Sequence[int]) -> list[int]:
    """Vertex order whose adjacency certificate is maximal over the
    (twin-pruned) individualization-refinement tree."""
    if n == 0:
        return []
    degree_cells: dict[int, list[int]] = {}
    for v in range(n):
        degree_cells.setdefault(bin(masks[v]).count("1"), []).append(v)
    start = [degree_cells[d] for d in sorted(degree_cells)]

    best_cert: tuple[int, ...] | None = None
    best_lab: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_cert, best_lab
        cells = _refine(masks, cells)
        target = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target < 0:
            lab = [cell[0] for cell in cells]
            cert = _certificate(masks, lab)
            if best_cert is None or cert > best_cert:
                best_cert = cert
                best_lab = lab
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            vbit = 1 << v
            if any(
                (masks[u] & ~vbit) == (masks[v] & ~(1 << u)) for u in tried
            ):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            child = [list(c) for c in cells[:target]] + [[v], rest] + [
                list(c) for c in cells[target + 1:]
            ]
            search(child)

    search(start)
    return best_lab
