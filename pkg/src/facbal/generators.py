"""Graph families: seeded Erdős–Rényi samples, deterministic families, a rooted
overlay that concentrates two-hop coverage, a four-branch tree with no equal-score
pair placement, and the dominating-set reduction instance.

All randomness flows through Philox streams keyed by an explicit 64-bit seed
(see `seeding`), so identical seed and parameters give bit-identical graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, is_connected
from .seeding import STREAM_EDGES, check_seed, rng_from_seed

# Pair-index chunks for G(n, d) sampling; chunking does not change the draw
# sequence, so it never affects the sampled graph.
_CHUNK_CELLS = 1 << 23


def _pair_offsets(n: int) -> np.ndarray:
    """offsets[i] = number of (u < v) pairs with u < i, row-major order."""
    rows = np.arange(n, dtype=np.int64)
    counts = (n - 1) - rows
    out = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=out[1:])
    return out


def sample_gnd(n: int, d: float, seed: int) -> Graph:
    """Erdős–Rényi sample: each of the C(n, 2) edges appears independently
    with probability p = d / (n - 1), scanned in fixed row-major pair order."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 < d <= n - 1:
        raise ValueError("d must satisfy 0 < d <= n - 1")
    p = float(d) / (n - 1)
    rng = rng_from_seed(seed, STREAM_EDGES)
    offsets = _pair_offsets(n)
    total = int(offsets[-1])
    hit_chunks = []
    start = 0
    while start < total:
        width = min(_CHUNK_CELLS, total - start)
        draws = rng.random(width)
        hit_chunks.append(start + np.flatnonzero(draws < p))
        start += width
    hits = np.concatenate(hit_chunks) if hit_chunks else np.empty(0, dtype=np.int64)
    u = np.searchsorted(offsets, hits, side="right") - 1
    v = hits - offsets[u] + u + 1
    return Graph(n, np.column_stack([u, v]))


def path(n: int) -> Graph:
    """P_n: vertices 0..n-1 with edges {i, i+1}."""
    if n < 1:
        raise ValueError("n must be positive")
    i = np.arange(n - 1, dtype=np.int64)
    return Graph(n, np.column_stack([i, i + 1]))


def cycle(n: int) -> Graph:
    """C_n; needs n >= 3 to stay a simple graph."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    i = np.arange(n, dtype=np.int64)
    return Graph(n, np.column_stack([i, (i + 1) % n]))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    u, v = np.triu_indices(n, k=1)
    return Graph(n, np.column_stack([u, v]).astype(np.int64))


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    return Graph(n)


def star(m: int) -> Graph:
    """S_m: center vertex 0 joined to leaves 1..m."""
    if m < 1:
        raise ValueError("m must be positive")
    leaves = np.arange(1, m + 1, dtype=np.int64)
    return Graph(m + 1, np.column_stack([np.zeros(m, dtype=np.int64), leaves]))


@dataclass(frozen=True)
class ExpanderInstance:
    """Rooted overlay graph: originals 0..n-1, overlay vertices n..n+sqrt(n)-1,
    root = n + sqrt(n). The root reaches every vertex in two hops."""

    graph: Graph
    root: int
    new_vertices: tuple[int, ...]
    seed_used: int
    retries: int


def unbalanced_expander(n: int, seed: int, max_retries: int = 100) -> ExpanderInstance:
    """Random base graph with expected degree sqrt(n), plus sqrt(n) overlay
    vertices each matched to a disjoint block of sqrt(n) originals, plus a
    root joined to every overlay vertex.

    The overlay blocks partition the originals, so no two overlay vertices
    share a neighbor. Resamples with seed+1 (up to max_retries) if the result
    is disconnected.
    """
    root_n = math.isqrt(n)
    if root_n * root_n != n:
        raise ValueError("n must be a perfect square")
    if n < 4:
        raise ValueError("n must be at least 4")
    seed = check_seed(seed)
    retries = 0
    while True:
        base = sample_gnd(n, float(root_n), seed + retries)
        news = np.arange(n, n + root_n, dtype=np.int64)
        root = n + root_n
        originals = np.arange(n, dtype=np.int64)
        block_edges = np.column_stack([np.repeat(news, root_n), originals])
        root_edges = np.column_stack([np.full(root_n, root, dtype=np.int64), news])
        g = Graph(n + root_n + 1, np.vstack([base.edge_array(), block_edges, root_edges]))
        if is_connected(g):
            return ExpanderInstance(g, int(root), tuple(int(x) for x in news), seed + retries, retries)
        retries += 1
        if retries > max_retries:
            raise RuntimeError(f"no connected sample within {max_retries} retries from seed {seed}")


def four_branch_tree() -> tuple[Graph, dict[str, int]]:
    """12-vertex tree: center c joined to the heads of paths of lengths 1, 2, 3, 5.

    Labels map "c" and "j/L" (vertex j of the length-L branch) to vertex ids.
    No placement of two facilities on this tree gives both players equal scores.
    """
    labels = {"c": 0}
    edges = []
    nxt = 1
    for length in (1, 2, 3, 5):
        prev = 0
        for j in range(1, length + 1):
            labels[f"{j}/{length}"] = nxt
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(12, edges), labels


@dataclass(frozen=True)
class ReducedInstance:
    """Unbalancedness instance produced from a dominating-set question.

    Vertex layout of graph: originals 0..n-1 keep their ids and edges; the bag
    of original i is the clique range bag_ranges[i]; root is joined to exactly
    the originals. Asking whether some placement of k facilities drives a
    player's score strictly below s answers the size-h dominating-set question
    when bag_size = n**3.
    """

    graph: Graph
    k: int
    s: int
    root: int
    original_ids: range
    bag_ranges: tuple[tuple[int, int], ...]
    bag_size: int
    guarantees_void: bool

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "s": self.s,
            "root": self.root,
            "original_ids": [self.original_ids.start, self.original_ids.stop],
            "bag_ranges": [list(r) for r in self.bag_ranges],
            "bag_size": self.bag_size,
            "guarantees_void": self.guarantees_void,
        }


def dominating_set_reduction(g: Graph, h: int, bag_size: int | None = None) -> ReducedInstance:
    """Attach a bag clique per original vertex, join each original to its own
    and its neighbors' bags, and add a root joined to all originals; k = h + 1
    and the score bound s = n.

    bag_size defaults to n**3; smaller bags keep the shape but void the
    reduction guarantees (flagged on the result).
    """
    if h < 1:
        raise ValueError("h must be positive")
    n = g.n
    if n < 1:
        raise ValueError("input graph must have vertices")
    if bag_size is None:
        bag_size = n**3
    if bag_size < 1:
        raise ValueError("bag_size must be positive")
    b = int(bag_size)
    root = n + n * b
    chunks = [g.edge_array()]
    tri_u, tri_v = np.triu_indices(b, k=1)
    for i in range(n):
        base = n + i * b
        chunks.append(np.column_stack([tri_u + base, tri_v + base]).astype(np.int64))
        owners = np.concatenate([[i], g.neighbors(i)]).astype(np.int64)
        bag = np.arange(base, base + b, dtype=np.int64)
        chunks.append(
            np.column_stack([np.repeat(owners, b), np.tile(bag, owners.size)])
        )
    chunks.append(
        np.column_stack(
            [np.full(n, root, dtype=np.int64), np.arange(n, dtype=np.int64)]
        )
    )
    graph = Graph(root + 1, np.vstack(chunks))
    return ReducedInstance(
        graph=graph,
        k=h + 1,
        s=n,
        root=root,
        original_ids=range(n),
        bag_ranges=tuple((n + i * b, n + (i + 1) * b) for i in range(n)),
        bag_size=b,
        guarantees_void=b < n**3,
    )
