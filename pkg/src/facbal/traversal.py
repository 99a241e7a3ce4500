"""Balancedness certificate from one BFS per vertex.

With r the graph radius, the certificate accepts iff every vertex reaches the
whole graph in r hops and every (r-1)-hop ball holds at most delta*n/k
vertices. An accepted certificate guarantees the graph is (delta*n)-balanced
for k players: at least n - delta*n vertices sit at distance exactly r from
every facility and split evenly, so each score lands in
[(n - delta*n)/k, delta*n + n/k].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels as _k
from .graph import Graph

INFINITE_RADIUS = "infinite-radius"
CONDITION_FULL_REACH = "condition-1"
CONDITION_INNER_BALL = "condition-2"


@dataclass(frozen=True)
class TraversalCertificate:
    n: int
    k: int
    delta: Fraction
    bound: Fraction  # delta * n / k, the cap on |N_{r-1}(v)|
    accepted: bool
    radius: int | None
    max_inner_ball: int | None  # max over v of |N_{r-1}(v)|
    failed_condition: str | None
    witness_vertex: int | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "delta": {"num": self.delta.numerator, "den": self.delta.denominator},
            "bound": {"num": self.bound.numerator, "den": self.bound.denominator},
            "accepted": self.accepted,
            "radius": self.radius,
            "max_inner_ball": self.max_inner_ball,
            "failed_condition": self.failed_condition,
            "witness_vertex": self.witness_vertex,
        }


def traversal_certificate(g: Graph, k: int, delta: "Fraction | int | str") -> TraversalCertificate:
    """Evaluate both certificate conditions exactly (the bound as a rational).

    Disconnected graphs reject with reason "infinite-radius". Rejections name
    the violated condition and a witness vertex; they carry no balancedness
    information either way.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    if not 1 <= k <= g.n:
        raise ValueError(f"k must satisfy 1 <= k <= n, got k={k}, n={g.n}")
    bound = delta * g.n / k

    ecc, reached = _k.eccentricities(g.indptr, g.indices)
    short = np.flatnonzero(reached < g.n)
    if short.size:
        return TraversalCertificate(
            g.n, k, delta, bound, False, None, None, INFINITE_RADIUS, int(short[0])
        )

    r = int(ecc.min())
    if r == 0:  # single vertex: N_{r-1} is empty by convention
        inner = np.zeros(g.n, dtype=np.int64)
    else:
        inner = _k.ball_sizes(g.indptr, g.indices, r - 1)[:, r - 1]
    max_inner = int(inner.max())

    over = np.flatnonzero(ecc > r)
    if over.size:
        return TraversalCertificate(
            g.n, k, delta, bound, False, r, max_inner, CONDITION_FULL_REACH, int(over[0])
        )

    num, den = bound.numerator, bound.denominator
    for v in range(g.n):  # exact integer comparison against the rational bound
        if int(inner[v]) * den > num:
            return TraversalCertificate(
                g.n, k, delta, bound, False, r, max_inner, CONDITION_INNER_BALL, v
            )
    return TraversalCertificate(g.n, k, delta, bound, True, r, max_inner, None, None)


def verify_traversal_certificate(g: Graph, cert: TraversalCertificate) -> bool:
    """Recompute the certificate from scratch and compare every reported number."""
    if cert.n != g.n:
        raise ValueError(f"certificate is for n={cert.n}, graph has n={g.n}")
    fresh = traversal_certificate(g, cert.k, cert.delta)
    return fresh == cert
