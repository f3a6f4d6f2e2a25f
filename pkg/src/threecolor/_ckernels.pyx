# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Same contracts as ``_pykernels``, limited to n <= 64."""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64

MAX_N = MAXN


cdef struct Search:
    int n
    int k
    int m
    uint64_t adj[MAXN]
    int order[MAXN]
    int domain[MAXN]
    int color[MAXN]
    bint break_symmetry
    long long nodes
    long long budget


cdef int _setup(Search* s, masks, int k, order, fixed) except -2:
    """Load inputs; returns 0 if the precoloring is already contradictory."""
    cdef int n = len(masks)
    cdef int v, w, c, full
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    s.n = n
    s.k = k
    s.m = len(order)
    full = (1 << k) - 1
    for v in range(n):
        s.adj[v] = <uint64_t>masks[v]
        s.domain[v] = full
        s.color[v] = -1
    for v in range(s.m):
        s.order[v] = order[v]
    for v in range(n):
        c = fixed[v]
        if c >= 0:
            if c >= k:
                return 0
            s.color[v] = c
            s.domain[v] = 1 << c
    for v in range(n):
        c = fixed[v]
        if c >= 0:
            for w in range(n):
                if (s.adj[v] >> w) & 1:
                    if s.color[w] == c:
                        return 0
                    s.domain[w] &= ~(1 << c)
    for v in range(s.m):
        if s.domain[s.order[v]] == 0:
            return 0
    return 1


cdef bint _find(Search* s, int i) nogil:
    cdef int v, w, c, d, bit
    cdef uint64_t nb, changed
    cdef bint ok
    if i == s.m:
        return True
    v = s.order[i]
    d = s.domain[v]
    if i == 0 and s.break_symmetry:
        d &= 1
    c = 0
    while d:
        if d & 1:
            bit = 1 << c
            changed = 0
            ok = True
            nb = s.adj[v]
            while nb:
                w = __builtin_ctzll(nb)
                nb &= nb - 1
                if s.color[w] < 0 and (s.domain[w] & bit):
                    s.domain[w] &= ~bit
                    changed |= (<uint64_t>1) << w
                    if s.domain[w] == 0:
                        ok = False
                        break
            if ok:
                s.color[v] = c
                if _find(s, i + 1):
                    return True
                s.color[v] = -1
            while changed:
                w = __builtin_ctzll(changed)
                changed &= changed - 1
                s.domain[w] |= bit
        d >>= 1
        c += 1
    return False

def find_coloring(masks, int k, order, fixed, bint break_symmetry):
    cdef Search s
    cdef bint found
    if not _setup(&s, masks, k, order, fixed):
        return None
    s.break_symmetry = break_symmetry
    with nogil:
        found = _find(&s, 0)
    if not found:
        return None
    return [s.color[v] for v in range(s.n)]


cdef int _all(Search* s, int i, list out) except -1:
    # returns 1 to continue, 0 when the budget is exhausted
    cdef int v, w, c, d, bit
    cdef uint64_t nb, changed
    cdef bint ok
    if i == s.m:
        out.append([s.color[v] for v in range(s.n)])
        return 1
    v = s.order[i]
    d = s.domain[v]
    c = 0
    while d:
        if d & 1:
            s.nodes += 1
            if s.nodes > s.budget:
                return 0
            bit = 1 << c
            changed = 0
            ok = True
            nb = s.adj[v]
            while nb:
                w = __builtin_ctzll(nb)
                nb &= nb - 1
                if s.color[w] < 0 and (s.domain[w] & bit):
                    s.domain[w] &= ~bit
                    changed |= (<uint64_t>1) << w
                    if s.domain[w] == 0:
                        ok = False
                        break
            if ok:
                s.color[v] = c
                if not _all(s, i + 1, out):
                    return 0
                s.color[v] = -1
            while changed:
                w = __builtin_ctzll(changed)
                changed &= changed - 1
                s.domain[w] |= bit
        d >>= 1
        c += 1
    return 1


def all_colorings(masks, int k, order, fixed, long long budget):
    cdef Search s
    cdef list out = []
    if not _setup(&s, masks, k, order, fixed):
        return []
    s.break_symmetry = False
    s.nodes = 0
    s.budget = budget
    if not _all(&s, 0, out):
        return None
    return out


# canonical labeling: a partition is lab[0..n) plus cell start flags

cdef struct Canon:
    int n
    uint64_t adj[MAXN]
    bint have_best
    uint64_t best_cert[MAXN]
    int best_lab[MAXN]


cdef void _refine(Canon* g, int* lab, int* cellstart) nogil:
    # cellstart[i] = 1 if a cell begins at position i
    cdef int n = g.n
    cdef int si, sj, ci, cj, i, j, t, v, cnt, mn, mx, key
    cdef uint64_t smask
    cdef int counts[MAXN]
    cdef int tmp[MAXN]
    cdef int tcnt[MAXN]
    cdef bint changed = True
    while changed:
        changed = False
        si = 0
        while si < n and not changed:
            sj = si + 1
            while sj < n and not cellstart[sj]:
                sj += 1
            smask = 0
            for i in range(si, sj):
                smask |= (<uint64_t>1) << lab[i]
            ci = 0
            while ci < n:
                cj = ci + 1
                while cj < n and not cellstart[cj]:
                    cj += 1
                if cj - ci > 1:
                    mn = MAXN + 1
                    mx = -1
                    for i in range(ci, cj):
                        cnt = __builtin_popcountll(g.adj[lab[i]] & smask)
                        counts[i] = cnt
                        if cnt < mn:
                            mn = cnt
                        if cnt > mx:
                            mx = cnt
                    if mn != mx:
                        # stable split by ascending count
                        t = 0
                        for key in range(mn, mx + 1):
                            for i in range(ci, cj):
                                if counts[i] == key:
                                    tmp[t] = lab[i]
                                    tcnt[t] = key
                                    t += 1
                        for i in range(t):
                            lab[ci + i] = tmp[i]
                            if i == 0 or tcnt[i] != tcnt[i - 1]:
                                cellstart[ci + i] = 1
                        changed = True
                        break
                ci = cj
            si = sj


cdef int _cmp_cert(Canon* g, int* lab) nogil:
    # compare certificate of lab with the best; 1 if greater, 0 equal, -1 less
    cdef int n = g.n
    cdef int i, j
    cdef int pos[MAXN]
    cdef uint64_t r
    for i in range(n):
        pos[lab[i]] = i
    for i in range(n):
        r = 0
        for j in range(i):
            if (g.adj[lab[i]] >> lab[j]) & 1:
                r |= (<uint64_t>1) << j
        if not g.have_best or r > g.best_cert[i]:
            return 1
        if r < g.best_cert[i]:
            return -1
    return 0


cdef void _store(Canon* g, int* lab) nogil:
    cdef int n = g.n
    cdef int i, j
    cdef uint64_t r
    for i in range(n):
        r = 0
        for j in range(i):
            if (g.adj[lab[i]] >> lab[j]) & 1:
                r |= (<uint64_t>1) << j
        g.best_cert[i] = r
        g.best_lab[i] = lab[i]
    g.have_best = True


cdef void _canon_search(Canon* g, int* lab_in, int* start_in) nogil:
    cdef int n = g.n
    cdef int lab[MAXN]
    cdef int cellstart[MAXN]
    cdef int child_lab[MAXN]
    cdef int child_start[MAXN]
    cdef int tried[MAXN]
    cdef int ntried = 0
    cdef int i, j, ci, cj, v, u, p
    cdef bint twin
    memcpy(lab, lab_in, n * sizeof(int))
    memcpy(cellstart, start_in, n * sizeof(int))
    _refine(g, lab, cellstart)
    ci = -1
    i = 0
    while i < n:
        j = i + 1
        while j < n and not cellstart[j]:
            j += 1
        if j - i > 1:
            ci = i
            cj = j
            break
        i = j
    if ci < 0:
        if _cmp_cert(g, lab) > 0:
            _store(g, lab)
        return
    for p in range(ci, cj):
        v = lab[p]
        twin = False
        for i in range(ntried):
            u = tried[i]
            if (g.adj[u] & ~((<uint64_t>1) << v)) == (g.adj[v] & ~((<uint64_t>1) << u)):
                twin = True
                break
        if twin:
            continue
        tried[ntried] = v
        ntried += 1
        memcpy(child_lab, lab, n * sizeof(int))
        memcpy(child_start, cellstart, n * sizeof(int))
        child_lab[ci] = v
        j = ci + 1
        for i in range(ci, cj):
            if lab[i] != v:
                child_lab[j] = lab[i]
                j += 1
        if ci + 1 < n:
            child_start[ci + 1] = 1
        _canon_search(g, child_lab, child_start)


def canonical_order(int n, masks):
    cdef Canon g
    cdef int lab[MAXN]
    cdef int cellstart[MAXN]
    cdef int v, i, d, t, maxdeg
    if n == 0:
        return []
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    g.n = n
    g.have_best = False
    maxdeg = 0
    for v in range(n):
        g.adj[v] = <uint64_t>masks[v]
        if __builtin_popcountll(g.adj[v]) > maxdeg:
            maxdeg = __builtin_popcountll(g.adj[v])
    t = 0
    for d in range(maxdeg + 1):
        for v in range(n):
            if __builtin_popcountll(g.adj[v]) == d:
                lab[t] = v
                cellstart[t] = 1 if (t == 0 or __builtin_popcountll(g.adj[lab[t - 1]]) != d) else 0
                t += 1
    with nogil:
        _canon_search(&g, lab, cellstart)
    return [g.best_lab[i] for i in range(n)]
