# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: BFS sweeps, score accumulation, placement enumeration, matvec.

Mirrors `_pykern` exactly; hot loops run without the GIL so multi-seed
experiments can thread across graphs.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

import numpy as np

ctypedef long long i64


cdef int _bfs_fill(const i64* indptr, const int* indices, int n, int src,
                   int limit, int* dist, int* queue, i64* level_sizes) noexcept nogil:
    """BFS from src, not expanding vertices at depth >= limit.

    Fills dist (-1 = not discovered), returns the number of discovered
    vertices; when level_sizes is non-NULL its entries 0..limit are
    incremented by the per-depth discovery counts.
    """
    cdef int head = 0, tail = 0, u, v, du
    cdef i64 p, pe
    memset(dist, 0xFF, n * sizeof(int))
    dist[src] = 0
    queue[tail] = src
    tail += 1
    if level_sizes != NULL:
        level_sizes[0] += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        if du >= limit:
            continue
        p = indptr[u]
        pe = indptr[u + 1]
        while p < pe:
            v = indices[p]
            p += 1
            if dist[v] < 0:
                dist[v] = du + 1
                queue[tail] = v
                tail += 1
                if level_sizes != NULL:
                    level_sizes[du + 1] += 1
    return tail


cdef const int* _idx_ptr(const int[::1] ix) noexcept nogil:
    if ix.shape[0] > 0:
        return &ix[0]
    return NULL


def bfs_distances(indptr, indices, source):
    cdef const i64[::1] ip = indptr
    cdef const int[::1] ix = indices
    cdef int n = ip.shape[0] - 1
    out = np.empty(n, dtype=np.int32)
    if n == 0:
        return out
    qarr = np.empty(n, dtype=np.int32)
    cdef int[::1] dist = out
    cdef int[::1] queue = qarr
    cdef int src = source
    with nogil:
        _bfs_fill(&ip[0], _idx_ptr(ix), n, src, n, &dist[0], &queue[0], NULL)
    return out


def eccentricities(indptr, indices):
    cdef const i64[::1] ip = indptr
    cdef const int[::1] ix = indices
    cdef int n = ip.shape[0] - 1
    ecc_arr = np.zeros(n, dtype=np.int32)
    reached_arr = np.zeros(n, dtype=np.int64)
    if n == 0:
        return ecc_arr, reached_arr
    cdef int[::1] ecc = ecc_arr
    cdef i64[::1] reached = reached_arr
    cdef int* dist = <int*> malloc(n * sizeof(int))
    cdef int* queue = <int*> malloc(n * sizeof(int))
    if dist == NULL or queue == NULL:
        free(dist); free(queue)
        raise MemoryError()
    cdef int v, tail
    cdef const int* ixp = _idx_ptr(ix)
    with nogil:
        for v in range(n):
            tail = _bfs_fill(&ip[0], ixp, n, v, n, dist, queue, NULL)
            reached[v] = tail
            ecc[v] = dist[queue[tail - 1]]
    free(dist); free(queue)
    return ecc_arr, reached_arr


def ball_sizes(indptr, indices, limit):
    cdef const i64[::1] ip = indptr
    cdef const int[::1] ix = indices
    cdef int n = ip.shape[0] - 1
    cdef int lim = limit
    out_arr = np.zeros((n, lim + 1), dtype=np.int64)
    if n == 0:
        return out_arr
    cdef i64[:, ::1] out = out_arr
    cdef int* dist = <int*> malloc(n * sizeof(int))
    cdef int* queue = <int*> malloc(n * sizeof(int))
    cdef i64* levels = <i64*> malloc((lim + 1) * sizeof(i64))
    if dist == NULL or queue == NULL or levels == NULL:
        free(dist); free(queue); free(levels)
        raise MemoryError()
    cdef int v, i
    cdef i64 acc
    cdef const int* ixp = _idx_ptr(ix)
    with nogil:
        for v in range(n):
            memset(levels, 0, (lim + 1) * sizeof(i64))
            _bfs_fill(&ip[0], ixp, n, v, lim, dist, queue, levels)
            acc = 0
            for i in range(lim + 1):
                acc += levels[i]
                out[v, i] = acc
    free(dist); free(queue); free(levels)
    return out_arr


def accumulate_scores(dist, L):
    cdef const int[:, ::1] d = dist
    cdef int k = d.shape[0]
    cdef int n = d.shape[1]
    out_arr = np.zeros(k, dtype=np.int64)
    cdef i64[::1] out = out_arr
    cdef i64 lcm = L
    cdef int v, j, best, c, dv
    cdef i64 share
    with nogil:
        for v in range(n):
            best = n + 1
            c = 0
            for j in range(k):
                dv = d[j, v]
                if dv < 0:
                    dv = n + 1
                if dv < best:
                    best = dv
                    c = 1
                elif dv == best:
                    c += 1
            if c == 0:
                # every facility unreachable: all k tie at infinity
                c = k
                best = n + 1
            share = lcm / c
            for j in range(k):
                dv = d[j, v]
                if dv < 0:
                    dv = n + 1
                if dv == best:
                    out[j] += share
    return out_arr


def enumerate_placements(dist, k, L, den, lo_scaled, hi_scaled, min_mode, full_sweep):
    cdef const int[:, ::1] d = dist
    cdef int n = d.shape[0]
    cdef int kk = k
    cdef i64 lcm = L
    cdef i64 dd = den
    cdef i64 lo = lo_scaled
    cdef i64 hi = hi_scaled
    cdef bint minmode = min_mode
    cdef bint sweep = full_sweep

    cdef int* comb = <int*> malloc(kk * sizeof(int))
    cdef i64* sc = <i64*> malloc(kk * sizeof(i64))
    cdef const int** rows = <const int**> malloc(kk * sizeof(int*))
    if comb == NULL or sc == NULL or rows == NULL:
        free(comb); free(sc); free(rows)
        raise MemoryError()

    cdef i64 examined = 0, violations = 0
    cdef int i, j, v, best, c, dv
    cdef i64 s, share
    cdef bint bad, done = False
    witness = None

    for i in range(kk):
        comb[i] = i
        rows[i] = &d[i, 0]

    try:
        while True:
            with nogil:
                while True:
                    examined += 1
                    for j in range(kk):
                        sc[j] = 0
                    for v in range(n):
                        best = n + 1
                        c = 0
                        for j in range(kk):
                            dv = rows[j][v]
                            if dv < 0:
                                dv = n + 1
                            if dv < best:
                                best = dv
                                c = 1
                            elif dv == best:
                                c += 1
                        if c == 0:
                            c = kk
                            best = n + 1
                        share = lcm / c
                        for j in range(kk):
                            dv = rows[j][v]
                            if dv < 0:
                                dv = n + 1
                            if dv == best:
                                sc[j] += share
                    bad = False
                    for j in range(kk):
                        s = sc[j] * dd
                        if s < lo or (not minmode and s > hi):
                            bad = True
                            break
                    if bad:
                        violations += 1
                        if violations == 1 or not sweep:
                            break  # leave nogil to record the witness / stop
                    # advance the combination odometer (lexicographic)
                    i = kk - 1
                    while i >= 0 and comb[i] == n - kk + i:
                        i -= 1
                    if i < 0:
                        done = True
                        break
                    comb[i] += 1
                    for j in range(i + 1, kk):
                        comb[j] = comb[j - 1] + 1
                    for j in range(i, kk):
                        rows[j] = &d[comb[j], 0]
            if done:
                break
            # currently at a violating placement
            if witness is None:
                witness = np.array([comb[j] for j in range(kk)], dtype=np.int64)
            if not sweep:
                break
            # resume the sweep: advance past this placement
            i = kk - 1
            while i >= 0 and comb[i] == n - kk + i:
                i -= 1
            if i < 0:
                break
            comb[i] += 1
            for j in range(i + 1, kk):
                comb[j] = comb[j - 1] + 1
            for j in range(i, kk):
                rows[j] = &d[comb[j], 0]
    finally:
        free(comb); free(sc); free(rows)
    return examined, violations, witness


def matvec(indptr, indices, x):
    cdef const i64[::1] ip = indptr
    cdef const int[::1] ix = indices
    cdef const double[::1] xv = x
    cdef int n = ip.shape[0] - 1
    out = np.zeros(n, dtype=np.float64)
    if n == 0 or ix.shape[0] == 0:
        return out
    cdef double[::1] y = out
    cdef int u
    cdef i64 p, pe
    cdef double s
    with nogil:
        for u in range(n):
            s = 0.0
            p = ip[u]
            pe = ip[u + 1]
            while p < pe:
                s += xv[ix[p]]
                p += 1
            y[u] = s
    return out
