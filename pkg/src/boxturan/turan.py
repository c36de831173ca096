"""Closed-form edge counts for depth-bounded box families.

All functions are pure, exact (Python integers and ``fractions.Fraction``)
and re-entrant.  Arbitrary-precision arithmetic means there is no silent
wraparound at any input size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import IntersectionGraph


def turan_partition(n: int, m: int) -> tuple[int, ...]:
    """Split n vertices into at most m classes whose sizes differ by at most 1.

    Larger classes come first; when n < m the empty classes are dropped, so
    the result always consists of positive sizes summing to n.
    """
    if m < 1:
        raise ValueError("class count m must be >= 1")
    if n < 0:
        raise ValueError("vertex count n must be >= 0")
    q, r = divmod(n, m)
    sizes = (q + 1,) * r + (q,) * (m - r)
    return tuple(s for s in sizes if s > 0)


def turan_edges(n: int, m: int) -> int:
    """Edge count t(n, m) of the complete m-partite graph with near-equal classes.

    t(n, 1) = 0, and for m > n the empty classes are dropped, giving the
    complete graph value C(n, 2).
    """
    if m < 1:
        raise ValueError("class count m must be >= 1")
    if n < 0:
        raise ValueError("vertex count n must be >= 0")
    q, r = divmod(n, m)
    inner = r * comb(q + 1, 2) + (m - r) * comb(q, 2)
    return comb(n, 2) - inner


def turan_graph(n: int, m: int) -> IntersectionGraph:
    """The complete m-partite graph with near-equal classes, as an abstract graph.

    Vertices 0..n-1 are assigned to classes in blocks, larger classes first.
    """
    sizes = turan_partition(n, m)
    labels: list[int] = []
    for cls, size in enumerate(sizes):
        labels.extend([cls] * size)
    edges = frozenset(
        (i, j) for i in range(n) for j in range(i + 1, n) if labels[i] != labels[j]
    )
    return IntersectionGraph(n, edges)


def interval_max_edges(n: int, k: int) -> int:
    """Maximum intersecting pairs among n closed intervals when no k+1 share a point.

    Equals C(n, 2) - C(n-k+1, 2); attained by k-1 nested copies of one long
    interval plus n-k+1 disjoint short intervals inside it.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    return comb(n, 2) - comb(n - k + 1, 2)


def slab_cube_edges(n: int, k: int, d: int) -> int:
    """Edge count of the d-dimensional slab/cube family on n boxes with depth k.

    This is turan_edges(n-k+d, d) + interval_max_edges(n, k-d+1): the slabs
    form a complete d-partite pattern and the k-d cubes meet everything.
    """
    if not n >= k > d >= 1:
        raise ValueError(f"need n >= k > d >= 1, got n={n}, k={k}, d={d}")
    return turan_edges(n - k + d, d) + interval_max_edges(n, k - d + 1)


def box_max_edges(n: int, k: int, d: int) -> int:
    """Maximum intersecting pairs among n boxes in R^d when no k+1 share a point.

    For k > d this is the slab/cube value; for k <= d every Turan graph on n
    vertices with k classes is realizable by boxes, giving turan_edges(n, k).
    """
    if d < 1:
        raise ValueError(f"dimension d must be >= 1, got {d}")
    if not 1 <= k <= n:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    if k > d:
        return slab_cube_edges(n, k, d)
    return turan_edges(n, k)


@dataclass(frozen=True, slots=True)
class GapReport:
    """Exact value vs. the quadratic approximation ((d-1)/2d) n^2 + (k/d - 1) n."""

    n: int
    k: int
    d: int
    exact: int
    quadratic: Fraction
    gap: Fraction
    corollary_bound: Fraction
    strict_bound: Fraction


def quadratic_gap(n: int, k: int, d: int) -> GapReport:
    """Compare box_max_edges(n, k, d) against its quadratic approximation.

    Also validates the two bounds the exact value must satisfy: the sharp
    upper bound quadratic + (k/2)(1 - k/d), and the strict bound
    ((d-1)/2d) n^2 + ((2k+d)/2d) n.  A violation of either would mean the
    closed forms are wrong and raises RuntimeError.
    """
    if not n >= k > d >= 1:
        raise ValueError(f"need n >= k > d >= 1, got n={n}, k={k}, d={d}")
    exact = slab_cube_edges(n, k, d)
    quadratic = Fraction(d - 1, 2 * d) * n * n + (Fraction(k, d) - 1) * n
    gap = exact - quadratic
    corollary_bound = quadratic + Fraction(k, 2) * (1 - Fraction(k, d))
    strict_bound = Fraction(d - 1, 2 * d) * n * n + Fraction(2 * k + d, 2 * d) * n
    if exact > corollary_bound:
        raise RuntimeError(
            f"sharp corollary bound violated at (n={n}, k={k}, d={d}): "
            f"{exact} > {corollary_bound}"
        )
    if not exact < strict_bound:
        raise RuntimeError(
            f"strict quadratic bound violated at (n={n}, k={k}, d={d}): "
            f"{exact} >= {strict_bound}"
        )
    return GapReport(n, k, d, exact, quadratic, gap, corollary_bound, strict_bound)
