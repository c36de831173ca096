"""Exact-coordinate domain types: intervals, boxes, families, intersection graphs.

Every type here is an immutable value after construction and can be shared
freely between threads or processes.  Coordinates are plain Python integers
(arbitrary precision internally); the JSON interchange format additionally
restricts them to the signed 64-bit range.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def _as_coord(value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"coordinate must be an integer, got {value!r}")
    return value


def _check_int64(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise ValueError(f"coordinate {value} outside signed 64-bit range")
    return value


@dataclass(frozen=True, slots=True, order=True)
class Interval:
    """Closed integer interval [lo, hi]; degenerate (lo == hi) is allowed."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    def contains(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: Interval) -> bool:
        return max(self.lo, other.lo) <= min(self.hi, other.hi)


@dataclass(frozen=True, slots=True)
class Box:
    """Axis-parallel box: one closed interval per coordinate axis."""

    intervals: tuple[Interval, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(self.intervals))
        if not self.intervals:
            raise ValueError("a box needs at least one axis")

    @classmethod
    def from_bounds(cls, bounds: Iterable[tuple[int, int]]) -> Box:
        return cls(tuple(Interval(_as_coord(lo), _as_coord(hi)) for lo, hi in bounds))

    @property
    def dim(self) -> int:
        return len(self.intervals)

    def contains_point(self, point: Iterable[int]) -> bool:
        coords = tuple(point)
        if len(coords) != self.dim:
            raise ValueError("point dimension does not match box dimension")
        return all(iv.contains(x) for iv, x in zip(self.intervals, coords))


@dataclass(frozen=True, slots=True)
class BoxFamily:
    """A dimension d plus an ordered sequence of boxes in R^d.

    Boxes are identified by their index in ``boxes``; every graph,
    certificate and trace in the library refers to boxes that way.
    """

    dim: int
    boxes: tuple[Box, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "boxes", tuple(self.boxes))
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        for i, box in enumerate(self.boxes):
            if box.dim != self.dim:
                raise ValueError(
                    f"box {i} has dimension {box.dim}, family has dimension {self.dim}"
                )

    @classmethod
    def from_bounds(cls, dim: int, all_bounds: Iterable[Iterable[tuple[int, int]]]) -> BoxFamily:
        return cls(dim, tuple(Box.from_bounds(b) for b in all_bounds))

    @property
    def n(self) -> int:
        return len(self.boxes)

    def __len__(self) -> int:
        return len(self.boxes)

    def __getitem__(self, i: int) -> Box:
        return self.boxes[i]

    def __iter__(self) -> Iterator[Box]:
        return iter(self.boxes)

    def bounds(self) -> list[list[tuple[int, int]]]:
        """Plain nested (lo, hi) pairs, handy for search code that mutates copies."""
        return [[(iv.lo, iv.hi) for iv in box.intervals] for box in self.boxes]


@dataclass(frozen=True, slots=True)
class IntersectionGraph:
    """Simple undirected graph on vertices 0..n-1, edges stored as sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        normalized = set()
        for edge in self.edges:
            u, v = edge
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge {edge!r} out of range for n={self.n}")
            normalized.add((u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def adjacency(self) -> list[int]:
        """Neighbour bitmask per vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj


# ---------------------------------------------------------------------------
# JSON interchange:  {"dim": d, "boxes": [ [ [lo, hi], ... d pairs ], ... ]}
# ---------------------------------------------------------------------------

def family_from_obj(obj: object) -> BoxFamily:
    """Build a family from an already-decoded JSON object, validating the schema."""
    if not isinstance(obj, dict):
        raise ValueError("top-level JSON value must be an object")
    if set(obj) != {"dim", "boxes"}:
        raise ValueError("expected exactly the keys 'dim' and 'boxes'")
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ValueError("'dim' must be an integer >= 1")
    raw_boxes = obj["boxes"]
    if not isinstance(raw_boxes, list):
        raise ValueError("'boxes' must be a list")
    boxes = []
    for i, raw in enumerate(raw_boxes):
        if not isinstance(raw, list) or len(raw) != dim:
            raise ValueError(f"box {i} must be a list of exactly {dim} [lo, hi] pairs")
        intervals = []
        for pair in raw:
            if not isinstance(pair, list) or len(pair) != 2:
                raise ValueError(f"box {i}: each axis entry must be a [lo, hi] pair")
            lo = _check_int64(_as_coord(pair[0]))
            hi = _check_int64(_as_coord(pair[1]))
            intervals.append(Interval(lo, hi))
        boxes.append(Box(tuple(intervals)))
    return BoxFamily(dim, tuple(boxes))


def parse_family(text: str) -> BoxFamily:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    return family_from_obj(obj)


def family_to_obj(family: BoxFamily) -> dict:
    for box in family.boxes:
        for iv in box.intervals:
            _check_int64(iv.lo)
            _check_int64(iv.hi)
    return {
        "dim": family.dim,
        "boxes": [[[iv.lo, iv.hi] for iv in box.intervals] for box in family.boxes],
    }


def serialize_family(family: BoxFamily) -> str:
    return json.dumps(family_to_obj(family), separators=(",", ":"), sort_keys=True)


# ---------------------------------------------------------------------------
# Edge-list text format: header "n <count>", then one "u v" line per edge, u < v.
# ---------------------------------------------------------------------------

def format_edge_list(graph: IntersectionGraph) -> str:
    lines = [f"n {graph.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(graph.edges))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> IntersectionGraph:
    lines = [line for line in (raw.strip() for raw in text.splitlines()) if line]
    if not lines:
        raise ValueError("empty edge-list document")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "n":
        raise ValueError("edge list must start with a 'n <count>' header line")
    try:
        n = int(header[1])
    except ValueError as exc:
        raise ValueError(f"bad vertex count {header[1]!r}") from exc
    edges = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if not u < v:
            raise ValueError(f"edge line {line!r} must satisfy u < v")
        edges.add((u, v))
    return IntersectionGraph(n, frozenset(edges))
