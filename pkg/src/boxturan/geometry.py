"""Box intersection predicates, exact piercing depth, and small pattern search.

Depth is computed over the finite candidate grid of per-axis endpoint values:
the number of boxes stabbed by a point is piecewise constant along each axis
and, for closed boxes, attains its maximum at a lower endpoint.  The value
search prunes dominated stab sets; the certificate search runs in ascending
coordinate order so the reported witness is the lexicographically smallest
maximizing grid point.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .core import Box, BoxFamily, IntersectionGraph


@dataclass(frozen=True, slots=True)
class DepthCertificate:
    """A point plus the indices of the boxes containing it."""

    point: tuple[int, ...]
    members: frozenset[int]


def boxes_intersect(a: Box, b: Box) -> bool:
    """True iff the closed boxes share a point: per-axis max(lo) <= min(hi)."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return all(x.overlaps(y) for x, y in zip(a.intervals, b.intervals))


def _axis_overlap_masks(family: BoxFamily, axis: int) -> list[int]:
    """For each box, the bitmask of boxes whose interval on `axis` overlaps its own."""
    n = len(family)
    lo_sorted = sorted((family.boxes[j].intervals[axis].lo, j) for j in range(n))
    hi_sorted = sorted((family.boxes[j].intervals[axis].hi, j) for j in range(n))
    lo_vals = [v for v, _ in lo_sorted]
    hi_vals = [v for v, _ in hi_sorted]
    prefix = [0] * (n + 1)  # prefix[t]: boxes with the t smallest lo values
    acc = 0
    for t, (_, j) in enumerate(lo_sorted):
        acc |= 1 << j
        prefix[t + 1] = acc
    suffix = [0] * (n + 1)  # suffix[t]: boxes with the n-t largest hi values
    acc = 0
    for t in range(n - 1, -1, -1):
        acc |= 1 << hi_sorted[t][1]
        suffix[t] = acc
    masks = []
    for j in range(n):
        iv = family.boxes[j].intervals[axis]
        started = prefix[bisect_right(lo_vals, iv.hi)]  # lo <= hi_j
        alive = suffix[bisect_left(hi_vals, iv.lo)]  # hi >= lo_j
        masks.append(started & alive)
    return masks


def intersection_graph(family: BoxFamily) -> IntersectionGraph:
    """Graph with an edge {i, j} whenever boxes i and j intersect."""
    n = len(family)
    if n == 0:
        return IntersectionGraph(0, frozenset())
    adj = _axis_overlap_masks(family, 0)
    for axis in range(1, family.dim):
        axis_masks = _axis_overlap_masks(family, axis)
        adj = [a & b for a, b in zip(adj, axis_masks)]
    edges = set()
    for u in range(n):
        rest = adj[u] & -(1 << (u + 1))  # neighbours above u, so each pair once
        while rest:
            low = rest & -rest
            edges.add((u, low.bit_length() - 1))
            rest ^= low
    return IntersectionGraph(n, frozenset(edges))


def _axis_stab_masks(family: BoxFamily, axis: int) -> list[tuple[int, int]]:
    """(coordinate, stabbed-boxes bitmask) at every distinct lower endpoint, ascending."""
    n = len(family)
    lo_sorted = sorted((family.boxes[j].intervals[axis].lo, j) for j in range(n))
    hi_sorted = sorted((family.boxes[j].intervals[axis].hi, j) for j in range(n))
    lo_vals = [v for v, _ in lo_sorted]
    hi_vals = [v for v, _ in hi_sorted]
    prefix = [0] * (n + 1)
    acc = 0
    for t, (_, j) in enumerate(lo_sorted):
        acc |= 1 << j
        prefix[t + 1] = acc
    suffix = [0] * (n + 1)
    acc = 0
    for t in range(n - 1, -1, -1):
        acc |= 1 << hi_sorted[t][1]
        suffix[t] = acc
    out = []
    previous = None
    for value in lo_vals:
        if value == previous:
            continue
        previous = value
        mask = prefix[bisect_right(lo_vals, value)] & suffix[bisect_left(hi_vals, value)]
        out.append((value, mask))
    return out


def _maximal_masks(masks: list[int]) -> list[int]:
    """Drop masks contained in another mask; the maximum stab count is unaffected."""
    unique = sorted(set(masks), key=int.bit_count, reverse=True)
    kept: list[int] = []
    for mask in unique:
        if not any(mask & big == mask for big in kept):
            kept.append(mask)
    return kept


def depth_value(family: BoxFamily) -> int:
    """Exact piercing depth: the maximum number of boxes containing one point."""
    n = len(family)
    if n == 0:
        raise ValueError("depth of an empty family is undefined")
    per_axis = [
        _maximal_masks([mask for _, mask in _axis_stab_masks(family, axis)])
        for axis in range(family.dim)
    ]
    per_axis.sort(key=len)
    best = 0

    def descend(i: int, mask: int) -> None:
        nonlocal best
        if mask.bit_count() <= best:
            return
        if i == len(per_axis):
            best = mask.bit_count()
            return
        for axis_mask in per_axis[i]:
            descend(i + 1, mask & axis_mask)

    descend(0, (1 << n) - 1)
    return best


def depth(family: BoxFamily) -> tuple[int, DepthCertificate]:
    """Exact depth plus a witness certificate.

    The certificate point is the lexicographically smallest maximizing point
    of the endpoint grid (ties in depth are broken toward smaller
    coordinates, axis by axis).
    """
    target = depth_value(family)
    axes = [_axis_stab_masks(family, axis) for axis in range(family.dim)]
    point: list[int] = []

    def locate(i: int, mask: int) -> int:
        if mask.bit_count() < target:
            return 0
        if i == family.dim:
            return mask
        for coord, axis_mask in axes[i]:
            point.append(coord)
            hit = locate(i + 1, mask & axis_mask)
            if hit:
                return hit
            point.pop()
        return 0

    witness_mask = locate(0, (1 << len(family)) - 1)
    members = frozenset(_iter_bits(witness_mask))
    return target, DepthCertificate(point=tuple(point), members=members)


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def stabbed_by(family: BoxFamily, point: tuple[int, ...]) -> frozenset[int]:
    """Indices of the boxes containing the point; independent certificate re-check."""
    return frozenset(
        j for j in range(len(family)) if family.boxes[j].contains_point(point)
    )


def certificate_is_sound(family: BoxFamily, cert: DepthCertificate) -> bool:
    """True iff every listed member really contains the certificate point."""
    if len(cert.point) != family.dim:
        return False
    return cert.members <= stabbed_by(family, cert.point)


def max_clique_boxes(family: BoxFamily) -> int:
    """Maximum clique of the intersection graph.

    Boxes have Helly number 2: pairwise-intersecting boxes share a common
    point, so the clique number equals the piercing depth.
    """
    return depth_value(family)


def find_induced_k2m(
    graph: IntersectionGraph, m: int
) -> tuple[tuple[int, int], ...] | None:
    """Search for an induced complete m-partite subgraph with classes of size 2.

    Returns m disjoint vertex pairs, each pair non-adjacent internally with
    all cross pairs adjacent, or None when no such pattern exists.  The
    search is exhaustive and only supported for 2m <= 12.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if 2 * m > 12:
        raise ValueError(f"exhaustive search supports 2m <= 12, got m={m}")
    if 2 * m > graph.n:
        raise ValueError(f"need at least {2 * m} vertices, graph has {graph.n}")
    adj = graph.adjacency()
    nonedges = [
        (a, b)
        for a in range(graph.n)
        for b in range(a + 1, graph.n)
        if not adj[a] >> b & 1
    ]
    total = len(nonedges)
    # compat[p] holds later pair indices q that are vertex-disjoint from p
    # and fully cross-adjacent to it.
    compat = [0] * total
    for p, (a, b) in enumerate(nonedges):
        cross = adj[a] & adj[b]
        for q in range(p + 1, total):
            c, d = nonedges[q]
            if c in (a, b) or d in (a, b):
                continue
            if cross >> c & 1 and cross >> d & 1:
                compat[p] |= 1 << q

    def extend(chosen: list[int], candidates: int) -> list[int] | None:
        if len(chosen) == m:
            return chosen
        while candidates:
            low = candidates & -candidates
            p = low.bit_length() - 1
            candidates ^= low
            found = extend(chosen + [p], candidates & compat[p])
            if found is not None:
                return found
        return None

    hit = extend([], (1 << total) - 1)
    if hit is None:
        return None
    return tuple(nonedges[p] for p in hit)
