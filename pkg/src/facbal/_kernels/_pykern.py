"""Pure-Python/NumPy fallback kernels.

Same signatures and semantics as the compiled module `_ckern`; selected at
import time when the extension is unavailable (or FACBAL_PURE_PYTHON is set).
Distances use int32 with -1 meaning unreachable.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np


def _frontier_sweep(indptr, indices, source, limit, level_sizes=None):
    """Level-synchronous BFS. Returns (dist, reached). Stops expanding at `limit`."""
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int32)
    dist[source] = 0
    if level_sizes is not None:
        level_sizes[0] += 1
    frontier = np.array([source], dtype=np.int64)
    reached = 1
    level = 0
    while frontier.size and level < limit:
        chunks = [indices[indptr[u]:indptr[u + 1]] for u in frontier]
        nbrs = np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int32)
        nbrs = nbrs[dist[nbrs] < 0]
        if nbrs.size == 0:
            break
        nbrs = np.unique(nbrs)
        level += 1
        dist[nbrs] = level
        reached += int(nbrs.size)
        if level_sizes is not None:
            level_sizes[level] += nbrs.size
        frontier = nbrs.astype(np.int64)
    return dist, reached


def bfs_distances(indptr, indices, source):
    dist, _ = _frontier_sweep(indptr, indices, int(source), indptr.shape[0] - 1)
    return dist


def eccentricities(indptr, indices):
    """Per-vertex eccentricity (max finite distance) and reachable-vertex count."""
    n = indptr.shape[0] - 1
    ecc = np.zeros(n, dtype=np.int32)
    reached = np.zeros(n, dtype=np.int64)
    for v in range(n):
        dist, cnt = _frontier_sweep(indptr, indices, v, n)
        ecc[v] = int(dist.max(initial=0))
        reached[v] = cnt
    return ecc, reached


def ball_sizes(indptr, indices, limit):
    """Cumulative ball sizes out[v, i] = |N_i(v)| for i = 0..limit."""
    n = indptr.shape[0] - 1
    out = np.zeros((n, limit + 1), dtype=np.int64)
    levels = np.zeros(limit + 1, dtype=np.int64)
    for v in range(n):
        levels[:] = 0
        _frontier_sweep(indptr, indices, v, limit, level_sizes=levels)
        np.cumsum(levels, out=out[v])
    return out


def accumulate_scores(dist, L):
    """Integer score numerators in units of 1/L for a k x n distance matrix.

    -1 entries compare as +infinity; a vertex unreachable from every facility
    is tied among all k players.
    """
    d = dist.astype(np.int64, copy=True)
    d[d < 0] = np.iinfo(np.int64).max
    md = d.min(axis=0)
    ties = d == md
    counts = ties.sum(axis=0)
    share = L // counts
    return (ties * share).sum(axis=1, dtype=np.int64)


def enumerate_placements(dist, k, L, den, lo_scaled, hi_scaled, min_mode, full_sweep):
    """Lexicographic sweep over all k-subsets of vertices, scoring each from `dist`.

    A placement "violates" when some score s (in units of 1/L) satisfies
    s*den < lo_scaled, or (unless min_mode) s*den > hi_scaled.
    Returns (examined, violations, witness_or_None); stops at the first
    violation unless full_sweep.
    """
    n = dist.shape[0]
    d = dist.astype(np.int64, copy=True)
    d[d < 0] = np.iinfo(np.int32).max
    examined = 0
    violations = 0
    witness = None
    for comb in combinations(range(n), k):
        examined += 1
        rows = d[list(comb)]
        md = rows.min(axis=0)
        ties = rows == md
        counts = ties.sum(axis=0)
        scaled = (ties * (L // counts)).sum(axis=1, dtype=np.int64) * den
        if min_mode:
            bad = bool((scaled < lo_scaled).any())
        else:
            bad = bool(((scaled < lo_scaled) | (scaled > hi_scaled)).any())
        if bad:
            violations += 1
            if witness is None:
                witness = np.array(comb, dtype=np.int64)
            if not full_sweep:
                break
    return examined, violations, witness


def matvec(indptr, indices, x):
    """Adjacency-matrix product y = A x for CSR adjacency with unit weights."""
    n = indptr.shape[0] - 1
    y = np.zeros(n, dtype=np.float64)
    if indices.shape[0] == 0:
        return y
    gathered = x[indices]
    nonempty = np.flatnonzero(np.diff(indptr) > 0)
    # starts are strictly increasing and begin at 0, so reduceat segments
    # cover each nonempty row exactly
    y[nonempty] = np.add.reduceat(gathered, indptr[nonempty])
    return y
