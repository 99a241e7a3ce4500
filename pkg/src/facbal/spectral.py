"""Spectral balancedness certificate and its power-method core.

The certificate takes d = 2m/n, rejects graphs that are not roughly
d-regular, estimates the second largest-in-magnitude adjacency eigenvalue
with a seeded power method, and accepts iff the estimate is below
100*sqrt(d). Also holds the mixing-bound checker for regular graphs and the
dense-eigensolver diagnostics used as a small-n oracle.

The power iteration runs on the squared adjacency operator (two products per
step), so paired +/-lambda eigenvalues, which stall the plain iteration on
bipartite-like spectra, converge cleanly; the second eigenvalue comes from
deflating the estimated top eigenvector and re-projecting each step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as _k
from .graph import Graph, degree_stats
from .seeding import STREAM_POWER, STREAM_TRIALS, check_seed, rng_from_seed

EPSILON = 0.01
DEFAULT_C_POW = 40.0
ACCEPTANCE_BAR = Fraction(9, 10)


def _apply(g: Graph, x: np.ndarray) -> np.ndarray:
    return _k.matvec(g.indptr, g.indices, x)


def _unit(x: np.ndarray) -> np.ndarray | None:
    norm = float(np.linalg.norm(x))
    if norm == 0.0:
        return None
    return x / norm


def _squared_iteration(g: Graph, x: np.ndarray, steps: int, deflate: np.ndarray | None):
    """steps applications of A^2 (projected off `deflate` when given)."""
    for _ in range(steps):
        y = _apply(g, _apply(g, x))
        if deflate is not None:
            y -= deflate * (deflate @ y)
        y = _unit(y)
        if y is None:
            return None
        x = y
    return x


def power_method_top(g: Graph, t: int, seed: int) -> tuple[float, np.ndarray]:
    """Largest eigenvalue magnitude of the adjacency matrix, from a random
    unit start vector and a budget of t adjacency products (two per squared
    step). A graph with no edges reports exactly 0."""
    if t < 1:
        raise ValueError("t must be positive")
    if g.n == 0:
        raise ValueError("graph must have at least one vertex")
    rng = rng_from_seed(seed, STREAM_POWER)
    x0 = _unit(rng.standard_normal(g.n))
    assert x0 is not None
    if g.m == 0:
        return 0.0, x0
    x = _squared_iteration(g, x0, max(1, t // 2), None)
    if x is None:
        return 0.0, x0
    return float(np.linalg.norm(_apply(g, x))), x


def power_method_second(g: Graph, t: int, seed: int) -> float:
    """Estimate of max(lambda_2, |lambda_n|), the second largest-in-magnitude
    eigenvalue: deflated power iteration on the squared operator, with the
    top-eigenvector projection reapplied every step."""
    if t < 1:
        raise ValueError("t must be positive")
    if g.n == 0:
        raise ValueError("graph must have at least one vertex")
    if g.m == 0 or g.n < 2:
        return 0.0
    rng = rng_from_seed(seed, STREAM_POWER)
    steps = max(1, t // 2)
    x = _unit(rng.standard_normal(g.n))
    assert x is not None
    top = _squared_iteration(g, x, steps, None)
    if top is None:
        return 0.0
    y = rng.standard_normal(g.n)
    y -= top * (top @ y)
    y = _unit(y)
    if y is None:
        return 0.0
    y = _squared_iteration(g, y, steps, top)
    if y is None:
        return 0.0
    # ||A y|| = sqrt(y . A^2 y): valid even when the top estimate sits in a
    # degenerate +/-lambda eigenspace and is therefore no A-eigenvector.
    return float(np.linalg.norm(_apply(g, y)))


@dataclass(frozen=True)
class SpectralCertificate:
    n: int
    expected_degree: float  # 2m/n, the observable stand-in for the model degree
    roughly_regular: bool
    lam2_estimate: float | None  # None when step 2 already rejected
    threshold: float  # 100 * sqrt(expected_degree)
    accepted: bool
    rejected_at_step: int | None
    seed: int
    iterations: int
    c_pow: float
    epsilon: float = EPSILON

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "expected_degree": self.expected_degree,
            "roughly_regular": self.roughly_regular,
            "lam2_estimate": self.lam2_estimate,
            "threshold": self.threshold,
            "accepted": self.accepted,
            "rejected_at_step": self.rejected_at_step,
            "seed": self.seed,
            "iterations": self.iterations,
            "c_pow": self.c_pow,
            "epsilon": self.epsilon,
        }


def spectral_certificate(g: Graph, seed: int, c_pow: float = DEFAULT_C_POW) -> SpectralCertificate:
    """Degree screen plus threshold test on the power-method estimate.

    Deterministic given (graph, seed). Graphs with n < 3 skip the power
    method and accept iff roughly regular (a single vertex always accepts).
    Rejections are verdicts, not errors.
    """
    if g.n == 0:
        raise ValueError("graph must have at least one vertex")
    seed = check_seed(seed)
    n = g.n
    d = 2.0 * g.m / n
    roughly_regular = degree_stats(g, d).roughly_regular
    t = max(1, math.ceil(c_pow * math.log(max(n, 2))))
    threshold = 100.0 * math.sqrt(d)
    if not roughly_regular:
        return SpectralCertificate(n, d, False, None, threshold, False, 2, seed, t, c_pow)
    if n < 3:
        return SpectralCertificate(n, d, True, 0.0, threshold, True, None, seed, t, c_pow)
    lam2 = power_method_second(g, t, seed)
    accepted = lam2 < threshold
    return SpectralCertificate(
        n, d, True, lam2, threshold, accepted, None if accepted else 4, seed, t, c_pow
    )


@dataclass(frozen=True)
class AcceptanceEstimate:
    trials: int
    accepts: int
    seed: int

    @property
    def probability(self) -> Fraction:
        return Fraction(self.accepts, self.trials)

    @property
    def exceeds_bar(self) -> bool:
        return self.probability > ACCEPTANCE_BAR

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "accepts": self.accepts,
            "seed": self.seed,
            "probability": {
                "num": self.probability.numerator,
                "den": self.probability.denominator,
            },
            "exceeds_bar": self.exceeds_bar,
        }


def estimate_acceptance(g: Graph, trials: int, seed: int) -> AcceptanceEstimate:
    """Empirical acceptance probability over independently seeded certificate runs."""
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = rng_from_seed(seed, STREAM_TRIALS)
    trial_seeds = rng.integers(0, 2**64, size=trials, dtype=np.uint64)
    accepts = sum(spectral_certificate(g, int(s)).accepted for s in trial_seeds)
    return AcceptanceEstimate(trials=trials, accepts=int(accepts), seed=check_seed(seed))


@dataclass(frozen=True)
class MixingCheck:
    s_size: int
    t_size: int
    edge_count: int  # ordered count: edges inside the overlap weigh twice
    expected: Fraction  # d * |S| * |T| / n
    bound: float  # lam * sqrt(|S| * |T|)
    passed: bool


def mixing_lemma_check(
    g: Graph, lam: float, subset_pairs: Sequence[tuple[Iterable[int], Iterable[int]]]
) -> list[MixingCheck]:
    """For a d-regular graph, check |E(S,T) - d|S||T|/n| <= lam*sqrt(|S||T|)
    per subset pair, counting edges within S-and-T overlap twice."""
    deg = g.degrees()
    if g.n == 0:
        raise ValueError("graph must have at least one vertex")
    d = int(deg[0]) if deg.size else 0
    if deg.size and (deg != d).any():
        raise ValueError("mixing bound is stated for exactly d-regular graphs")
    out = []
    for s_set, t_set in subset_pairs:
        s_ids = sorted({int(v) for v in s_set})
        t_ids = sorted({int(v) for v in t_set})
        for v in s_ids + t_ids:
            if not 0 <= v < g.n:
                raise ValueError(f"subset vertex {v} out of range")
        t_mask = np.zeros(g.n, dtype=bool)
        t_mask[t_ids] = True
        count = int(sum(int(t_mask[g.neighbors(u)].sum()) for u in s_ids))
        expected = Fraction(d * len(s_ids) * len(t_ids), g.n)
        bound = float(lam) * math.sqrt(len(s_ids) * len(t_ids))
        deviation = abs(count - expected)
        out.append(
            MixingCheck(len(s_ids), len(t_ids), count, expected, bound, float(deviation) <= bound)
        )
    return out


def dense_adjacency(g: Graph) -> np.ndarray:
    """Dense adjacency matrix; diagnostics only, keep n small."""
    a = np.zeros((g.n, g.n), dtype=np.float64)
    ea = g.edge_array()
    if ea.size:
        a[ea[:, 0], ea[:, 1]] = 1.0
        a[ea[:, 1], ea[:, 0]] = 1.0
    return a


def dense_spectrum(g: Graph) -> np.ndarray:
    """All adjacency eigenvalues, ascending (dense solve; small-n oracle)."""
    return np.linalg.eigvalsh(dense_adjacency(g))


def second_largest_in_magnitude(eigenvalues: np.ndarray) -> float:
    """max(lambda_2, |lambda_n|) from an ascending eigenvalue array."""
    if eigenvalues.size < 2:
        return 0.0
    return float(max(eigenvalues[-2], abs(eigenvalues[0])))
