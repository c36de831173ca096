"""Extremal family generators and the per-instance decomposition certificate.

The general construction realizes, with exact integer coordinates, the
pattern that attains box_max_edges(n, k, d): for k > d, q_i parallel slabs
per axis (q_1 + ... + q_d = n - k + d, sizes as equal as possible) plus
k - d cubes spanning everything; for k <= d, a slab family whose graph is
the Turan graph T(n, k).  Slabs are full-dimensional boxes of positive
thickness, and every box receives a per-box coordinate offset on a coarse
grid so that all 2n endpoint values on every axis are pairwise distinct
(the decomposition below requires distinct upper endpoints).

The decomposition certificate replays the greedy induction that proves the
upper bound: repeatedly remove the d boxes with the smallest per-axis upper
endpoints and check the removed edges against an explicit step bound; the
bounds plus the Turan bound on the terminal subfamily telescope to exactly
box_max_edges(n, k, d).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import Box, BoxFamily, Interval
from .geometry import (
    DepthCertificate,
    boxes_intersect,
    depth,
    depth_value,
    intersection_graph,
)
from .turan import box_max_edges, turan_edges, turan_partition


@dataclass(frozen=True, slots=True)
class Role:
    """What a box does in the construction: a cube, or slab `slot` on `axis`."""

    kind: str
    axis: int | None = None
    slot: int | None = None


CUBE = Role("cube")


def slab_role(axis: int, slot: int) -> Role:
    return Role("slab", axis, slot)


@dataclass(frozen=True, slots=True)
class ExtremalFamily:
    family: BoxFamily
    roles: tuple[Role, ...]
    n: int
    k: int
    d: int

    def __post_init__(self) -> None:
        if len(self.roles) != len(self.family):
            raise ValueError("one role per box required")
        cubes = sum(1 for r in self.roles if r.kind == "cube")
        expected = self.k - self.d if self.k > self.d else 0
        if cubes != expected:
            raise ValueError(f"expected {expected} cubes, found {cubes}")

    def slab_counts(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for role in self.roles:
            if role.kind == "slab":
                counts[role.axis] = counts.get(role.axis, 0) + 1
        return tuple(counts[a] for a in sorted(counts))


def construct_extremal(n: int, k: int, d: int) -> ExtremalFamily:
    """Integer realization of the extremal family for (n, k, d).

    For k > d: q_i slabs on axis i (the q_i sum to n-k+d and differ by at
    most 1, larger counts on lower axes) plus k-d cubes.  For k <= d: slab
    counts follow turan_partition(n, k) over the first k axes and there are
    no cubes.  Guarantees: same-axis slabs are disjoint, different-axis
    slabs intersect, cubes intersect everything, the edge count equals
    box_max_edges(n, k, d), the depth is exactly k, and all 2n endpoint
    values per axis are pairwise distinct.
    """
    if d < 1:
        raise ValueError(f"dimension d must be >= 1, got {d}")
    if not 1 <= k <= n:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    if k > d:
        counts = turan_partition(n - k + d, d)
        cubes = k - d
    else:
        counts = turan_partition(n, k)
        cubes = 0
    q_max = max(counts)
    pitch = n + 1  # strictly larger than any per-box offset
    span_top = (4 * q_max + 2) * pitch

    boxes: list[Box] = []
    roles: list[Role] = []
    offset = 0
    for axis, q in enumerate(counts):
        for slot in range(q):
            intervals = [Interval(offset, span_top + offset)] * d
            intervals[axis] = Interval(
                (4 * slot + 1) * pitch + offset, (4 * slot + 2) * pitch + offset
            )
            boxes.append(Box(tuple(intervals)))
            roles.append(slab_role(axis, slot))
            offset += 1
    for _ in range(cubes):
        boxes.append(Box(tuple(Interval(offset, span_top + offset) for _ in range(d))))
        roles.append(CUBE)
        offset += 1
    return ExtremalFamily(BoxFamily(d, tuple(boxes)), tuple(roles), n, k, d)


def construct_extremal_1d(n: int, k: int) -> ExtremalFamily:
    """The classical one-dimensional extremal family with literal coordinates.

    k-1 copies of [0, 2(n-k+1)] plus n-k+1 disjoint unit intervals
    [2j, 2j+1] inside it; interval_max_edges(n, k) intersecting pairs and
    depth exactly k.  Unlike construct_extremal, endpoints here repeat.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    shorts = n - k + 1
    long_iv = Interval(0, 2 * shorts)
    boxes = [Box((long_iv,)) for _ in range(k - 1)]
    roles: list[Role] = [CUBE] * (k - 1)
    for j in range(shorts):
        boxes.append(Box((Interval(2 * j, 2 * j + 1),)))
        roles.append(slab_role(0, j))
    return ExtremalFamily(BoxFamily(1, tuple(boxes)), tuple(roles), n, k, 1)


@dataclass(frozen=True, slots=True)
class VerifyReport:
    n: int
    k: int
    d: int
    branch: str
    formula_edges: int
    measured_edges: int
    measured_depth: int
    edges_match: bool
    depth_match: bool

    @property
    def ok(self) -> bool:
        return self.edges_match and self.depth_match


def verify_extremal(n: int, k: int, d: int) -> VerifyReport:
    """Build the construction, measure it, and compare against the closed form."""
    extremal = construct_extremal(n, k, d)
    graph = intersection_graph(extremal.family)
    measured_depth = depth_value(extremal.family)
    formula = box_max_edges(n, k, d)
    return VerifyReport(
        n=n,
        k=k,
        d=d,
        branch="k>d" if k > d else "k<=d",
        formula_edges=formula,
        measured_edges=graph.edge_count,
        measured_depth=measured_depth,
        edges_match=graph.edge_count == formula,
        depth_match=measured_depth == min(k, n),
    )


class DepthPreconditionError(ValueError):
    """The family's measured depth exceeds the declared k."""

    def __init__(self, measured_depth: int, k: int, certificate: DepthCertificate):
        super().__init__(
            f"family has depth {measured_depth} > k={k}; "
            f"witness point {certificate.point}"
        )
        self.measured_depth = measured_depth
        self.k = k
        self.certificate = certificate


class DecompositionBoundError(RuntimeError):
    """A step or base bound failed; release-blocking if the depth precondition held."""


@dataclass(frozen=True, slots=True)
class DecompositionStep:
    chosen: tuple[int, ...]  # the d greedily selected boxes, original indices
    cutoffs: tuple[int, ...]  # c_i = upper endpoint of chosen[i] on axis i
    met_all: tuple[int, ...]  # boxes meeting every chosen box
    rest: tuple[int, ...]  # remaining boxes
    clique_size: int  # clique number among the chosen boxes
    incident_edges: int  # edges with at least one endpoint among chosen
    bound: int  # (d-1) n' + k + C(d,2) - d with n' boxes left after removal


@dataclass(frozen=True, slots=True)
class DecompositionTrace:
    n: int
    k: int
    d: int
    steps: tuple[DecompositionStep, ...]
    base_members: tuple[int, ...]
    base_edges: int
    base_bound: int  # turan_edges(len(base_members), k)
    total_edges: int  # sum of step edges plus base edges == |E(G_f)|
    certified_bound: int  # sum of step bounds plus base bound


def decompose_certificate(family: BoxFamily, k: int) -> DecompositionTrace:
    """Replay the greedy decomposition, checking every bound along the way.

    Preconditions (checked): 1 <= k <= n, measured depth <= k, and on every
    axis the n upper endpoints are pairwise distinct (this makes each greedy
    choice unique).  Raises DepthPreconditionError with a witness if the
    depth exceeds k, and DecompositionBoundError if any bound fails, which
    cannot happen for a valid input.
    """
    n = len(family)
    d = family.dim
    if not 1 <= k <= n:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    for axis in range(d):
        uppers = [box.intervals[axis].hi for box in family.boxes]
        if len(set(uppers)) != n:
            raise ValueError(
                f"upper endpoints on axis {axis} are not pairwise distinct"
            )
    measured = depth_value(family)
    if measured > k:
        _, certificate = depth(family)
        raise DepthPreconditionError(measured, k, certificate)

    boxes = family.boxes
    current = list(range(n))
    steps: list[DecompositionStep] = []
    removed_edge_total = 0

    while len(current) >= k + d:
        pool = list(current)
        chosen: list[int] = []
        cutoffs: list[int] = []
        for axis in range(d):
            pick = min(pool, key=lambda j: boxes[j].intervals[axis].hi)
            chosen.append(pick)
            cutoffs.append(boxes[pick].intervals[axis].hi)
            pool.remove(pick)
        chosen_set = set(chosen)
        rest = [j for j in current if j not in chosen_set]
        met_all = [
            j
            for j in rest
            if all(boxes_intersect(boxes[j], boxes[c]) for c in chosen)
        ]
        met_set = set(met_all)
        others = [j for j in rest if j not in met_set]

        incident = 0
        for pos, x in enumerate(chosen):
            for y in chosen[pos + 1 :]:
                if boxes_intersect(boxes[x], boxes[y]):
                    incident += 1
            for y in rest:
                if boxes_intersect(boxes[x], boxes[y]):
                    incident += 1

        clique_size = depth_value(BoxFamily(d, tuple(boxes[c] for c in chosen)))
        n_after = len(current) - d
        bound = (d - 1) * n_after + k + comb(d, 2) - d
        if incident > bound:
            raise DecompositionBoundError(
                f"step bound violated with {len(current)} boxes left: "
                f"{incident} incident edges > bound {bound}"
            )
        steps.append(
            DecompositionStep(
                chosen=tuple(chosen),
                cutoffs=tuple(cutoffs),
                met_all=tuple(met_all),
                rest=tuple(others),
                clique_size=clique_size,
                incident_edges=incident,
                bound=bound,
            )
        )
        removed_edge_total += incident
        current = rest

    base_edges = 0
    for pos, x in enumerate(current):
        for y in current[pos + 1 :]:
            if boxes_intersect(boxes[x], boxes[y]):
                base_edges += 1
    base_bound = turan_edges(len(current), k)
    if base_edges > base_bound:
        raise DecompositionBoundError(
            f"base bound violated: {base_edges} edges on {len(current)} boxes "
            f"> turan_edges({len(current)}, {k}) = {base_bound}"
        )
    return DecompositionTrace(
        n=n,
        k=k,
        d=d,
        steps=tuple(steps),
        base_members=tuple(current),
        base_edges=base_edges,
        base_bound=base_bound,
        total_edges=removed_edge_total + base_edges,
        certified_bound=sum(s.bound for s in steps) + base_bound,
    )
