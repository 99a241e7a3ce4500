"""Exhaustive ground truth: balancedness of a graph and the Unbalancedness decision.

Every decider enumerates placements in lexicographic order over sorted vertex
tuples, so witnesses are deterministic. Enumeration is exact or refused: if
C(n, k) exceeds the cap the call raises instead of silently sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm

import numpy as np

from . import _kernels as _k
from .graph import Graph
from .scoring import Placement, distance_rows, score_bounds, scores

DEFAULT_PLACEMENT_CAP = 5_000_000

_INT64_SAFE = 2**62


class EnumerationCapError(RuntimeError):
    """C(n, k) exceeds the configured cap; raise the cap to force the sweep."""


@dataclass(frozen=True)
class BalancednessVerdict:
    balanced: bool
    k: int
    z: Fraction
    witness: Placement | None
    witness_scores: tuple[Fraction, ...] | None
    placements_examined: int

    def to_json_dict(self) -> dict:
        return {
            "balanced": self.balanced,
            "k": self.k,
            "z": {"num": self.z.numerator, "den": self.z.denominator},
            "witness": None if self.witness is None else list(self.witness.facilities),
            "witness_scores": None
            if self.witness_scores is None
            else [{"num": s.numerator, "den": s.denominator} for s in self.witness_scores],
            "placements_examined": self.placements_examined,
        }


@dataclass(frozen=True)
class UnbalancednessDecision:
    answer: bool
    k: int
    s: Fraction
    witness: Placement | None
    witness_scores: tuple[Fraction, ...] | None
    placements_examined: int

    def to_json_dict(self) -> dict:
        return {
            "answer": self.answer,
            "k": self.k,
            "s": {"num": self.s.numerator, "den": self.s.denominator},
            "witness": None if self.witness is None else list(self.witness.facilities),
            "witness_scores": None
            if self.witness_scores is None
            else [{"num": sc.numerator, "den": sc.denominator} for sc in self.witness_scores],
            "placements_examined": self.placements_examined,
        }


def _check_args(g: Graph, k: int, max_placements: int) -> int:
    if not 1 <= k <= g.n:
        raise ValueError(f"k must satisfy 1 <= k <= n, got k={k}, n={g.n}")
    total = comb(g.n, k)
    if total > max_placements:
        raise EnumerationCapError(
            f"C({g.n}, {k}) = {total} placements exceeds the cap of {max_placements}; "
            "pass a larger max_placements to force the sweep"
        )
    return total


def _distance_matrix(g: Graph) -> np.ndarray:
    return distance_rows(g, range(g.n))


def _sweep(g: Graph, k: int, lo: Fraction, hi: Fraction, min_mode: bool, full_sweep: bool):
    """Shared enumeration core. Returns (examined, violations, witness_tuple|None)."""
    L = lcm(*range(1, k + 1))
    den = lo.denominator if min_mode else lcm(lo.denominator, hi.denominator)
    lo_scaled = lo.numerator * (den // lo.denominator) * L
    hi_scaled = 0 if min_mode else hi.numerator * (den // hi.denominator) * L
    D = _distance_matrix(g)
    if max(g.n * L * den, abs(lo_scaled), abs(hi_scaled)) < _INT64_SAFE:
        examined, violations, witness = _k.enumerate_placements(
            D, k, L, den, lo_scaled, hi_scaled, min_mode, full_sweep
        )
        wit = None if witness is None else tuple(int(x) for x in witness)
        return int(examined), int(violations), wit
    # Arbitrary-precision path for pathological rationals.
    return _sweep_exact(D, g.n, k, lo, hi, min_mode, full_sweep)


def _sweep_exact(D, n, k, lo, hi, min_mode, full_sweep):
    examined = violations = 0
    witness = None
    for c in combinations(range(n), k):
        examined += 1
        rows = [D[u] for u in c]
        tallies = [0] * k
        for v in range(n):
            best = None
            for j in range(k):
                d = int(rows[j][v])
                if d < 0:
                    continue
                if best is None or d < best:
                    best = d
            if best is None:
                tied = list(range(k))
            else:
                tied = [j for j in range(k) if int(rows[j][v]) == best]
            for j in tied:
                tallies[j] += Fraction(1, len(tied))
        if min_mode:
            bad = any(t < lo for t in tallies)
        else:
            bad = any(t < lo or t > hi for t in tallies)
        if bad:
            violations += 1
            if witness is None:
                witness = c
            if not full_sweep:
                break
    return examined, violations, witness


def is_graph_z_balanced(
    g: Graph,
    k: int,
    z: "Fraction | int | str",
    max_placements: int = DEFAULT_PLACEMENT_CAP,
) -> BalancednessVerdict:
    """Decide z-balancedness by scoring every one of the C(n, k) placements.

    Stops at the first violating placement and reports it as the witness;
    a balanced verdict means all C(n, k) placements were examined.
    """
    z = Fraction(z)
    if z < 0:
        raise ValueError("z must be non-negative")
    _check_args(g, k, max_placements)
    lo, hi = score_bounds(g.n, k, z)
    examined, violations, witness = _sweep(g, k, lo, hi, min_mode=False, full_sweep=False)
    if violations == 0:
        return BalancednessVerdict(True, k, z, None, None, examined)
    p = Placement(witness)
    return BalancednessVerdict(False, k, z, p, scores(g, p).scores, examined)


def unbalancedness_decision(
    g: Graph,
    k: int,
    s: "Fraction | int | str",
    max_placements: int = DEFAULT_PLACEMENT_CAP,
) -> UnbalancednessDecision:
    """Is there a placement where some player scores strictly below s?"""
    s = Fraction(s)
    _check_args(g, k, max_placements)
    examined, violations, witness = _sweep(g, k, s, s, min_mode=True, full_sweep=False)
    if violations == 0:
        return UnbalancednessDecision(False, k, s, None, None, examined)
    p = Placement(witness)
    return UnbalancednessDecision(True, k, s, p, scores(g, p).scores, examined)


def count_unbalanced_placements(
    g: Graph,
    k: int,
    z: "Fraction | int | str",
    max_placements: int = DEFAULT_PLACEMENT_CAP,
) -> int:
    """How many of the C(n, k) placements violate the z-balanced window."""
    z = Fraction(z)
    if z < 0:
        raise ValueError("z must be non-negative")
    _check_args(g, k, max_placements)
    lo, hi = score_bounds(g.n, k, z)
    _, violations, _ = _sweep(g, k, lo, hi, min_mode=False, full_sweep=True)
    return violations
