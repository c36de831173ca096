"""Independent brute-force ground truth for the closed-form edge counts.

For one dimension the search is exhaustive: with endpoints normalized to
ranks, every family of n closed intervals is equivalent (same intersection
graph, same depth, and depth equals the clique number, a graph invariant)
to one whose 2n endpoints are exactly {1, ..., 2n}, i.e. to a perfect
matching of that set.  Enumerating all (2n-1)!! matchings is therefore a
complete search; tests cross-check this against a literal enumeration of
endpoint multisets at small n.

For d >= 2 exhaustive search is hopeless and the oracle is a seeded
hill climb: a lower-bound prover only, with the matching upper bound
supplied by the decomposition certificate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import Box, BoxFamily, Interval
from .extremal import construct_extremal
from .geometry import depth_value


@dataclass(frozen=True, slots=True)
class OracleResult:
    best_edges: int
    witness: BoxFamily
    exhaustive: bool
    explored: int
    seed: int | None = None


def normalize_family(family: BoxFamily) -> BoxFamily:
    """Replace coordinates by their per-axis ranks (1-based).

    The relabeling is monotone on each axis, so the intersection graph and
    the depth are unchanged; the result is idempotent under normalization.
    """
    rank_maps = []
    for axis in range(family.dim):
        values = sorted(
            {box.intervals[axis].lo for box in family.boxes}
            | {box.intervals[axis].hi for box in family.boxes}
        )
        rank_maps.append({v: i + 1 for i, v in enumerate(values)})
    boxes = []
    for box in family.boxes:
        boxes.append(
            Box(
                tuple(
                    Interval(rank_maps[a][iv.lo], rank_maps[a][iv.hi])
                    for a, iv in enumerate(box.intervals)
                )
            )
        )
    return BoxFamily(family.dim, tuple(boxes))


def random_family(
    rng: random.Random, n: int, d: int, lo: int = 0, hi: int | None = None
) -> BoxFamily:
    """Uniform random family: each endpoint pair drawn from [lo, hi] and sorted."""
    if hi is None:
        hi = 2 * n
    boxes = []
    for _ in range(n):
        intervals = []
        for _ in range(d):
            a, b = rng.randint(lo, hi), rng.randint(lo, hi)
            if a > b:
                a, b = b, a
            intervals.append(Interval(a, b))
        boxes.append(Box(tuple(intervals)))
    return BoxFamily(d, tuple(boxes))


def _perfect_matchings(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for idx in range(len(rest)):
        partner = rest[idx]
        remaining = rest[:idx] + rest[idx + 1 :]
        for tail in _perfect_matchings(remaining):
            yield ((first, partner),) + tail


@lru_cache(maxsize=None)
def _interval_scan(n: int) -> tuple[tuple, int]:
    """Best edge count and witness for each exact clique number, plus families tried."""
    best: list[tuple[int, tuple[tuple[int, int], ...]] | None] = [None] * (n + 1)
    explored = 0
    for matching in _perfect_matchings(tuple(range(1, 2 * n + 1))):
        explored += 1
        edges = 0
        for i in range(n):
            li, hi = matching[i]
            for j in range(i + 1, n):
                lj, hj = matching[j]
                if max(li, lj) <= min(hi, hj):
                    edges += 1
        cover = [0] * (2 * n + 2)
        for lo, hi in matching:
            cover[lo] += 1
            cover[hi + 1] -= 1
        omega = 0
        running = 0
        for delta in cover:
            running += delta
            if running > omega:
                omega = running
        entry = best[omega]
        if entry is None or edges > entry[0]:
            best[omega] = (edges, matching)
    return tuple(best), explored


def exhaustive_interval_max(n: int, k: int) -> OracleResult:
    """Exact maximum intersecting pairs over all n-interval families with depth <= k.

    Complete search over the canonical distinct-endpoint forms (n <= 7; the
    space grows as (2n-1)!!).  The exhaustive flag on the result is True.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    if n > 7:
        raise ValueError(f"exhaustive interval search is limited to n <= 7, got {n}")
    table, explored = _interval_scan(n)
    best_edges = -1
    witness_intervals: tuple[tuple[int, int], ...] | None = None
    for omega in range(1, k + 1):
        entry = table[omega]
        if entry is not None and entry[0] > best_edges:
            best_edges, witness_intervals = entry
    assert witness_intervals is not None
    witness = BoxFamily(
        1, tuple(Box((Interval(lo, hi),)) for lo, hi in witness_intervals)
    )
    return OracleResult(best_edges, witness, exhaustive=True, explored=explored)


def _count_edges(bounds: list[list[tuple[int, int]]]) -> int:
    n = len(bounds)
    edges = 0
    for i in range(n):
        bi = bounds[i]
        for j in range(i + 1, n):
            bj = bounds[j]
            if all(max(a[0], b[0]) <= min(a[1], b[1]) for a, b in zip(bi, bj)):
                edges += 1
    return edges


def _edge_delta(
    bounds: list[list[tuple[int, int]]], b: int, axis: int, cand: tuple[int, int]
) -> int:
    """Edge count change if box b's interval on `axis` becomes `cand`."""
    delta = 0
    mine = bounds[b]
    for j, other in enumerate(bounds):
        if j == b:
            continue
        rest = all(
            max(x[0], y[0]) <= min(x[1], y[1])
            for a, (x, y) in enumerate(zip(mine, other))
            if a != axis
        )
        if not rest:
            continue
        old = max(mine[axis][0], other[axis][0]) <= min(mine[axis][1], other[axis][1])
        new = max(cand[0], other[axis][0]) <= min(cand[1], other[axis][1])
        delta += int(new) - int(old)
    return delta


def _random_start(
    rng: random.Random, n: int, k: int, d: int, hi: int
) -> list[list[tuple[int, int]]]:
    bounds = random_family(rng, n, d, 1, hi).bounds()
    for _ in range(200):
        if depth_value(BoxFamily.from_bounds(d, bounds)) <= k:
            return bounds
        pick = rng.randrange(n)
        point = [rng.randint(1, hi) for _ in range(d)]
        bounds[pick] = [(c, c) for c in point]
    # last resort: disjoint degenerate points, depth 1
    return [[(i + 1, i + 1)] * d for i in range(n)]


def climb_box_max(n: int, k: int, d: int, budget: int, seed: int) -> OracleResult:
    """Seeded hill climb over families with per-axis endpoints in {1..2n}.

    One chain starts from the normalized extremal construction, the others
    from random depth-feasible families.  Moves perturb a single endpoint;
    moves that lower the edge count or push the depth above k are rejected.
    The result is a lower bound on box_max_edges(n, k, d) and is
    deterministic for a fixed seed.
    """
    if d < 2:
        raise ValueError("hill climbing oracle requires d >= 2 (d = 1 is exhaustive)")
    if not 1 <= k <= n:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    if budget < 0:
        raise ValueError("budget must be >= 0")
    rng = random.Random(seed)
    hi = 2 * n
    chains = 4
    share, extra = divmod(budget, chains)

    best_edges = -1
    best_bounds: list[list[tuple[int, int]]] | None = None
    explored = 0

    for chain in range(chains):
        if chain == 0:
            bounds = normalize_family(construct_extremal(n, k, d).family).bounds()
        else:
            bounds = _random_start(rng, n, k, d, hi)
        edges = _count_edges(bounds)
        if edges > best_edges:
            best_edges = edges
            best_bounds = [row[:] for row in bounds]
        iterations = share + (extra if chain == 0 else 0)
        for _ in range(iterations):
            explored += 1
            b = rng.randrange(n)
            axis = rng.randrange(d)
            side = rng.randrange(2)
            value = rng.randint(1, hi)
            lo_e, hi_e = bounds[b][axis]
            cand = (value, hi_e) if side == 0 else (lo_e, value)
            if cand[0] > cand[1] or cand == (lo_e, hi_e):
                continue
            delta = _edge_delta(bounds, b, axis, cand)
            if delta < 0:
                continue
            bounds[b][axis] = cand
            if depth_value(BoxFamily.from_bounds(d, bounds)) > k:
                bounds[b][axis] = (lo_e, hi_e)
                continue
            edges += delta
            if edges > best_edges:
                best_edges = edges
                best_bounds = [row[:] for row in bounds]
    assert best_bounds is not None
    witness = BoxFamily.from_bounds(d, best_bounds)
    return OracleResult(best_edges, witness, exhaustive=False, explored=explored, seed=seed)
