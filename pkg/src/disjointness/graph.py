"""Geometric objects beyond bare segments/lines and the disjointness graph builder."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DegenerateError, DimensionError
from .geometry import (
    EuclLine,
    Point,
    ProjLine,
    Segment,
    common_denominator,
    disjoint_raw,
    integerize,
    point,
    rat,
    segments_disjoint,
    side,
)


@dataclass(frozen=True)
class PuncturedLine:
    """The planar line ``y = slope*x + intercept`` with the point ``hole`` removed."""

    slope: Fraction
    intercept: Fraction
    hole: Point

    def __post_init__(self):
        object.__setattr__(self, "slope", rat(self.slope))
        object.__setattr__(self, "intercept", rat(self.intercept))
        hole = point(self.hole)
        if len(hole) != 2:
            raise DimensionError("punctured lines live in the plane")
        if hole[1] != self.slope * hole[0] + self.intercept:
            raise DegenerateError(f"hole {hole} is not on the line")
        object.__setattr__(self, "hole", hole)


def _collinear_overlap(s: Segment, t: Segment) -> bool:
    """True if consecutive path segments s=[p,q], t=[q,r] fold back onto each other."""
    u = tuple(x - y for x, y in zip(s.a, s.b))
    v = tuple(x - y for x, y in zip(t.b, t.a))
    uu = sum(x * x for x in u)
    vv = sum(x * x for x in v)
    uv = sum(x * y for x, y in zip(u, v))
    return uv > 0 and uv * uv == uu * vv


@dataclass(frozen=True)
class Polyline:
    """Simple polygonal path made of 2 to 4 segments."""

    segments: tuple

    def __post_init__(self):
        segs = tuple(self.segments)
        if not 2 <= len(segs) <= 4:
            raise ValueError("a polyline has 2 to 4 segments")
        d = segs[0].dim
        if any(s.dim != d for s in segs):
            raise DimensionError("mixed dimensions in polyline")
        for s, t in zip(segs, segs[1:]):
            if s.b != t.a:
                raise DegenerateError("consecutive polyline segments must share an endpoint")
            if _collinear_overlap(s, t):
                raise DegenerateError("polyline folds back on itself")
        for i in range(len(segs)):
            for j in range(i + 2, len(segs)):
                if not segments_disjoint(segs[i], segs[j]):
                    raise DegenerateError("polyline is self-intersecting")
        object.__setattr__(self, "segments", segs)

    @classmethod
    def from_points(cls, pts) -> "Polyline":
        pts = [point(p) for p in pts]
        return cls(tuple(Segment(a, b) for a, b in zip(pts, pts[1:])))

    @property
    def vertices(self) -> list:
        return [self.segments[0].a] + [s.b for s in self.segments]


@dataclass(frozen=True)
class TwoSegments:
    """Union of two disjoint collinear segments."""

    first: Segment
    second: Segment

    def __post_init__(self):
        s, t = self.first, self.second
        if s.dim != t.dim:
            raise DimensionError("mixed dimensions")
        u = tuple(x - y for x, y in zip(s.b, s.a))
        for p in (t.a, t.b):
            w = tuple(x - y for x, y in zip(p, s.a))
            uw = sum(x * y for x, y in zip(u, w))
            if uw * uw != sum(x * x for x in u) * sum(x * x for x in w):
                raise DegenerateError("the two segments are not collinear")
        if not segments_disjoint(s, t):
            raise DegenerateError("the two segments overlap")

    @property
    def segments(self) -> tuple:
        return (self.first, self.second)


KINDS = {
    Segment: "segment",
    EuclLine: "eucl_line",
    ProjLine: "proj_line",
    PuncturedLine: "punctured_line",
    Polyline: "polyline",
    TwoSegments: "two_segments",
}
LINE_KINDS = {"eucl_line", "proj_line"}


def kind_of(obj) -> str:
    try:
        return KINDS[type(obj)]
    except KeyError:
        raise TypeError(f"not a geometric object: {obj!r}") from None


@dataclass
class DGraph:
    """Disjointness (or intersection) graph over a list of geometric objects."""

    objects: list
    adj: np.ndarray
    mode: str = "disjointness"
    space: str = "euclidean"
    kind: str = "segment"

    @property
    def n(self) -> int:
        return len(self.objects)

    def edges(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self.adj, 1))
        return list(zip(i.tolist(), j.tolist()))

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self.adj[v]).tolist()

    def induced(self, vertices: Sequence[int]) -> "DGraph":
        idx = list(vertices)
        return DGraph([self.objects[i] for i in idx], self.adj[np.ix_(idx, idx)].copy(),
                      self.mode, self.space, self.kind)


def _punctured_meet(P: PuncturedLine, Q: PuncturedLine) -> bool:
    if P.slope == Q.slope:
        return P.intercept == Q.intercept
    x = (Q.intercept - P.intercept) / (P.slope - Q.slope)
    pt = (x, P.slope * x + P.intercept)
    return pt != P.hole and pt != Q.hole


def _pieces_matrix(pieces: list[list[Segment]]) -> np.ndarray:
    """Meeting matrix for objects that are unions of segments."""
    flat = [p for segs in pieces for s in segs for p in (s.a, s.b)]
    ints = integerize(flat, common_denominator(flat))
    it = iter(ints)
    objs = [[(next(it), next(it)) for _ in segs] for segs in pieces]
    n = len(objs)
    meet = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            hit = any(not disjoint_raw(a, b, c, d) for a, b in objs[i] for c, d in objs[j])
            meet[i, j] = meet[j, i] = hit
    return meet


def _lines_matrix(lines: list, space: str) -> np.ndarray:
    n = len(lines)
    pl = [L.plucker if isinstance(L, EuclLine) else L for L in lines]
    meet = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            hit = side(pl[i], pl[j]) == 0
            if hit and space == "euclidean" and pl[i].p != pl[j].p and lines[i].dir == lines[j].dir:
                hit = False  # distinct parallels only meet at infinity
            meet[i, j] = meet[j, i] = hit
    return meet


def build_graph(objects: Sequence, mode: str = "disjointness", space: str = "euclidean") -> DGraph:
    """Exact pairwise construction of the disjointness or intersection graph.

    Duplicated objects always meet, so they are never adjacent in disjointness mode.
    """
    if mode not in ("disjointness", "intersection"):
        raise ValueError(f"unknown mode {mode!r}")
    if space not in ("euclidean", "projective"):
        raise ValueError(f"unknown space {space!r}")
    objects = list(objects)
    kinds = {kind_of(o) for o in objects}
    if len(kinds) > 1:
        raise TypeError(f"mixed object kinds: {sorted(kinds)}")
    kind = kinds.pop() if kinds else "segment"
    if space == "projective" and kind not in LINE_KINDS:
        raise ValueError("projective space is only meaningful for lines")
    if kind == "proj_line" and space == "euclidean":
        raise ValueError("projective lines need space='projective'")

    if kind == "segment":
        d = {s.dim for s in objects}
        if len(d) > 1:
            raise DimensionError(f"mixed dimensions {sorted(d)}")
        meet = _pieces_matrix([[s] for s in objects])
    elif kind in ("polyline", "two_segments"):
        meet = _pieces_matrix([list(o.segments) for o in objects])
    elif kind == "punctured_line":
        n = len(objects)
        meet = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in range(i + 1, n):
                meet[i, j] = meet[j, i] = _punctured_meet(objects[i], objects[j])
    else:
        meet = _lines_matrix(objects, space)

    if mode == "disjointness":
        adj = ~meet
        np.fill_diagonal(adj, False)
    else:
        adj = meet
    return DGraph(objects, adj, mode, space, kind)
