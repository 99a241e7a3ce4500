"""Immutable compressed-adjacency graphs, BFS distances, and neighborhood tables.

Distances are hop counts; UNREACHABLE (-1) marks disconnected pairs. All
operations are pure functions of their inputs and graphs are safe to share
across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

import numpy as np

from . import _kernels as _k

UNREACHABLE = -1

DEFAULT_REGULARITY_C = 3.0


class EdgeListFormatError(ValueError):
    """Malformed edge-list text; `line` carries the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class InfiniteRadiusError(ValueError):
    """An operation needed a finite radius but the graph is disconnected."""


class Graph:
    """Undirected simple graph with dense vertex ids 0..n-1.

    Adjacency is stored in compressed sorted form (CSR). Construction
    deduplicates edges and rejects self-loops and out-of-range endpoints;
    instances are immutable afterwards.
    """

    __slots__ = ("_n", "_m", "_indptr", "_indices")

    def __init__(self, n: int, edges: Iterable | np.ndarray = ()) -> None:
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if isinstance(edges, np.ndarray):
            arr = edges.astype(np.int64, copy=False)
        else:
            arr = np.array([(int(u), int(v)) for u, v in edges], dtype=np.int64)
        arr = arr.reshape(-1, 2)
        if arr.size:
            if arr.min() < 0 or arr.max() >= n:
                raise ValueError("edge endpoint out of range")
            if (arr[:, 0] == arr[:, 1]).any():
                raise ValueError("self-loops are not allowed")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        code = np.unique(lo * n + hi) if arr.size else np.empty(0, dtype=np.int64)
        lo, hi = code // n, code % n
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        indices = dst[order].astype(np.int32)
        indptr.flags.writeable = False
        indices.flags.writeable = False
        self._n = n
        self._m = int(code.size)
        self._indptr = indptr
        self._indices = indices

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of v (read-only view, v excluded)."""
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < row.size and row[i] == v)

    def edge_array(self) -> np.ndarray:
        """All edges as an (m, 2) array with u < v, sorted lexicographically."""
        src = np.repeat(np.arange(self._n, dtype=np.int64), self.degrees())
        dst = self._indices.astype(np.int64)
        keep = src < dst
        return np.column_stack([src[keep], dst[keep]])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, v in self.edge_array():
            yield int(u), int(v)

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """The isomorphic graph with vertex v renamed perm[v]."""
        p = np.asarray(list(perm), dtype=np.int64)
        if p.shape != (self._n,) or not np.array_equal(np.sort(p), np.arange(self._n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        ea = self.edge_array()
        return Graph(self._n, p[ea])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self._n == other._n
            and np.array_equal(self._indptr, other._indptr)
            and np.array_equal(self._indices, other._indices)
        )

    def __hash__(self) -> int:
        return hash((self._n, self._m, self._indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


@dataclass(frozen=True)
class DistanceVector:
    """Hop distances from `source`; UNREACHABLE where no path exists."""

    source: int
    dist: np.ndarray


def bfs_distances(g: Graph, source: int) -> DistanceVector:
    """Exact hop distances from `source` in O(n + m)."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    return DistanceVector(int(source), _k.bfs_distances(g.indptr, g.indices, int(source)))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    dist = _k.bfs_distances(g.indptr, g.indices, 0)
    return bool((dist >= 0).all())


def _ecc_reached(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    return _k.eccentricities(g.indptr, g.indices)


def radius(g: Graph) -> int:
    """min over vertices of max distance to any other vertex."""
    if g.n == 0:
        raise ValueError("radius of the empty graph is undefined")
    ecc, reached = _ecc_reached(g)
    if (reached < g.n).any():
        raise InfiniteRadiusError("graph is disconnected: infinite radius")
    return int(ecc.min())


@dataclass(frozen=True)
class NeighborhoodTable:
    """counts[v, i-1] = |N_i(v)|, the closed i-hop ball around v, for i in 1..radius."""

    radius: int
    counts: np.ndarray

    def ball_size(self, v: int, i: int) -> int:
        """|N_i(v)| for 0 <= i <= radius; N_0(v) = {v}."""
        if not 0 <= i <= self.radius:
            raise ValueError(f"i must be in 0..{self.radius}")
        return 1 if i == 0 else int(self.counts[v, i - 1])


def neighborhood_table(g: Graph) -> NeighborhoodTable:
    """Per-vertex ball sizes up to the graph radius, via one BFS per vertex."""
    r = radius(g)
    balls = _k.ball_sizes(g.indptr, g.indices, r)
    return NeighborhoodTable(radius=r, counts=balls[:, 1:])


def degree_tolerance(d: float, n: int, c: float = DEFAULT_REGULARITY_C) -> float:
    """Allowed degree deviation for the roughly-regular test: c * sqrt(d * ln(max(n, 3)))."""
    return c * math.sqrt(max(d, 0.0) * math.log(max(n, 3)))


@dataclass(frozen=True)
class DegreeStats:
    minimum: int
    maximum: int
    mean: float
    target: float
    tolerance: float
    roughly_regular: bool


def degree_stats(g: Graph, d: float, c: float = DEFAULT_REGULARITY_C) -> DegreeStats:
    """Degree extremes plus the roughly-d-regular flag under the sqrt-scale tolerance."""
    if d < 0:
        raise ValueError("target degree must be non-negative")
    deg = g.degrees()
    if g.n == 0:
        return DegreeStats(0, 0, 0.0, float(d), 0.0, True)
    tol = degree_tolerance(d, g.n, c)
    flag = bool((np.abs(deg - float(d)) <= tol).all())
    return DegreeStats(int(deg.min()), int(deg.max()), float(deg.mean()), float(d), tol, flag)


def read_edgelist(source: str | IO[str]) -> Graph:
    """Parse the interchange format: header "n m", then m lines "u v" (0-based).

    Full-line and trailing '#' comments are allowed. Raises
    EdgeListFormatError with a 1-based line number on malformed input.
    """
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            return read_edgelist(fh)
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(source, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"expected two fields, got {len(parts)}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListFormatError(f"non-integer field in {text!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListFormatError("header counts must be non-negative", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListFormatError(f"endpoint out of range 0..{n - 1}", lineno)
        if a == b:
            raise EdgeListFormatError("self-loop", lineno)
        edges.append((a, b))
    if header is None:
        raise EdgeListFormatError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise EdgeListFormatError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], np.array(edges, dtype=np.int64).reshape(-1, 2))


def write_edgelist(g: Graph, sink: IO[str], comments: Iterable[str] = ()) -> None:
    """Write the canonical interchange form: sorted u < v edges, LF newlines."""
    sink.write(f"{g.n} {g.m}\n")
    for c in comments:
        sink.write(f"# {c}\n")
    for u, v in g.edge_array():
        sink.write(f"{u} {v}\n")
