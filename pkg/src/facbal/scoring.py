"""Player scores for a facility placement, with exact fractional tie-splitting.

Every vertex awards 1/|C_v| to each of the players whose facility is closest
to it; an unreachable facility counts as infinitely far, and a vertex that no
facility can reach is tied among all k players. Scores are held exactly as
integer multiples of 1/lcm(1..k), so score sums and balancedness comparisons
never touch floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from . import _kernels as _k
from .graph import Graph


@dataclass(frozen=True)
class Placement:
    """Ordered facilities u_1..u_k; player i owns facilities[i]."""

    facilities: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "facilities", tuple(int(u) for u in self.facilities))
        if not self.facilities:
            raise ValueError("placement needs at least one facility")
        if len(set(self.facilities)) != len(self.facilities):
            raise ValueError("facility vertices must be distinct")

    @property
    def k(self) -> int:
        return len(self.facilities)


def as_placement(p: "Placement | Sequence[int]") -> Placement:
    return p if isinstance(p, Placement) else Placement(tuple(p))


def _validated(g: Graph, p: "Placement | Sequence[int]") -> Placement:
    p = as_placement(p)
    if p.k > g.n:
        raise ValueError(f"{p.k} facilities on {g.n} vertices")
    for u in p.facilities:
        if not 0 <= u < g.n:
            raise ValueError(f"facility vertex {u} out of range")
    return p


def distance_rows(g: Graph, vertices: Sequence[int]) -> np.ndarray:
    """Stacked BFS distance rows, one per vertex (int32, -1 = unreachable)."""
    out = np.empty((len(vertices), g.n), dtype=np.int32)
    for i, u in enumerate(vertices):
        out[i] = _k.bfs_distances(g.indptr, g.indices, int(u))
    return out


@dataclass(frozen=True)
class ClosestSet:
    """players[v] lists the (0-based) players at minimal distance from v."""

    facilities: tuple[int, ...]
    players: tuple[tuple[int, ...], ...]


def closest_sets(g: Graph, p: "Placement | Sequence[int]") -> ClosestSet:
    p = _validated(g, p)
    rows = distance_rows(g, p.facilities).astype(np.int64)
    rows[rows < 0] = np.iinfo(np.int64).max
    md = rows.min(axis=0)
    ties = rows == md
    players = tuple(tuple(int(j) for j in np.flatnonzero(ties[:, v])) for v in range(g.n))
    return ClosestSet(p.facilities, players)


@dataclass(frozen=True)
class ScoreReport:
    """Exact per-player scores; z and its verdict are attached by with_balance."""

    n: int
    k: int
    facilities: tuple[int, ...]
    scores: tuple[Fraction, ...]
    z: Fraction | None = None
    balanced: bool | None = None

    def with_balance(self, z: "Fraction | int | str") -> "ScoreReport":
        z = Fraction(z)
        return replace(self, z=z, balanced=is_z_balanced_placement(self, z))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "facilities": list(self.facilities),
            "scores": [{"num": s.numerator, "den": s.denominator} for s in self.scores],
            "z": None if self.z is None else {"num": self.z.numerator, "den": self.z.denominator},
            "balanced": self.balanced,
        }


def scores(g: Graph, p: "Placement | Sequence[int]") -> ScoreReport:
    """Exact rational scores from k BFS passes; the scores always sum to n."""
    p = _validated(g, p)
    L = lcm(*range(1, p.k + 1))
    rows = distance_rows(g, p.facilities)
    nums = _k.accumulate_scores(rows, L)
    assert int(nums.sum()) == g.n * L, "score mass was not conserved"
    return ScoreReport(
        n=g.n,
        k=p.k,
        facilities=p.facilities,
        scores=tuple(Fraction(int(x), L) for x in nums),
    )


def score_bounds(n: int, k: int, z: Fraction) -> tuple[Fraction, Fraction]:
    """The z-balanced window [floor(n/k) - z, ceil(n/k) + z]."""
    return Fraction(n // k) - z, Fraction(-(-n // k)) + z


def is_z_balanced_placement(report: ScoreReport, z: "Fraction | int | str") -> bool:
    """Exact check that every score lies in the z-balanced window."""
    z = Fraction(z)
    if z < 0:
        raise ValueError("z must be non-negative")
    lo, hi = score_bounds(report.n, report.k, z)
    return all(lo <= s <= hi for s in report.scores)
