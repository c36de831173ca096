"""Fractional Helly consequences of the exact edge-count formula.

Inverting box_max_edges in k turns an edge count into a guaranteed piercing
depth: any family with more than box_max_edges(n, k, d) intersecting pairs
must have k+1 boxes through a common point.  The asymptotic ratio of that
guarantee, 1 - sqrt(d (1 - alpha)) for edge density alpha, is derived from
the large-n shape of the formula and validated numerically by the tests
before being trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import BoxFamily
from .geometry import DepthCertificate, depth, intersection_graph
from .turan import box_max_edges


@dataclass(frozen=True, slots=True)
class HellyGuarantee:
    n: int
    d: int
    edges: int
    guaranteed_depth: int
    k_star: int  # largest k with box_max_edges(n, k, d) < edges, 0 if none


def guaranteed_depth(n: int, d: int, edges: int) -> HellyGuarantee:
    """Smallest depth every n-box family in R^d with `edges` intersecting pairs must have.

    Binary-searches the largest k with box_max_edges(n, k, d) < edges and
    returns k + 1; monotone non-decreasing in `edges`.
    """
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    if not 0 <= edges <= comb(n, 2):
        raise ValueError(f"edge count {edges} outside [0, C({n},2)]")
    if edges == 0 or box_max_edges(n, 1, d) >= edges:
        k_star = 0
    else:
        lo, hi = 1, n
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if box_max_edges(n, mid, d) < edges:
                lo = mid
            else:
                hi = mid - 1
        k_star = lo
    return HellyGuarantee(n=n, d=d, edges=edges, guaranteed_depth=k_star + 1, k_star=k_star)


def beta_asymptotic(alpha: Fraction | int | str, d: int) -> float:
    """Limit of guaranteed_depth(n, d, ~alpha n^2 / 2) / n as n grows.

    Closed form 1 - sqrt(d (1 - alpha)), valid for alpha in [1 - 1/d, 1]:
    0 at the threshold density, 1 when all pairs intersect.
    """
    if d < 1:
        raise ValueError(f"dimension d must be >= 1, got {d}")
    alpha = Fraction(alpha)
    if not Fraction(d - 1, d) <= alpha <= 1:
        raise ValueError(f"alpha must lie in [1 - 1/{d}, 1], got {alpha}")
    return 1.0 - math.sqrt(d * (1 - alpha))


def helly_witness(
    family: BoxFamily, alpha: Fraction | int | str
) -> tuple[DepthCertificate, bool]:
    """Check the fractional hypothesis on a concrete family and return a deep point.

    Reports whether the family has at least ceil(alpha * C(n, 2))
    intersecting pairs, together with the maximum-depth certificate.  When
    the hypothesis holds, the certificate is checked against the formula
    guarantee; a shortfall would falsify the inversion and raises.
    """
    alpha = Fraction(alpha)
    n = len(family)
    if n == 0:
        raise ValueError("empty family")
    graph = intersection_graph(family)
    pairs = graph.edge_count
    threshold = alpha * comb(n, 2)
    met = Fraction(pairs) >= threshold
    _, certificate = depth(family)
    if met:
        floor_guarantee = guaranteed_depth(n, family.dim, pairs).guaranteed_depth
        if len(certificate.members) < floor_guarantee:
            raise RuntimeError(
                f"depth certificate of size {len(certificate.members)} below the "
                f"formula guarantee {floor_guarantee} for {pairs} pairs"
            )
    return certificate, met
