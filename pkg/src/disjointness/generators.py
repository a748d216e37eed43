"""Exact rational realizations of extremal families with known ground truth.

Shift graph ``H_m``: vertices are pairs ``(i, j)`` with ``1 <= i < j <= m``, and
``(i, j) ~ (k, l)`` iff ``j == k`` or ``l == i``.  Every realization below lists
its objects in the canonical order of :func:`shift_pairs` and is verified edge
for edge against :func:`shift_graph_abstract` before it is returned.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvariantError, SearchExhausted
from .geometry import EuclLine, Segment, apply_map, random_linear_map
from .graph import DGraph, Polyline, PuncturedLine, TwoSegments, build_graph
from .verify import is_triangle_free


def shift_pairs(m: int) -> list[tuple[int, int]]:
    if m < 2:
        raise ValueError("shift graphs need m >= 2")
    return list(itertools.combinations(range(1, m + 1), 2))


def shift_graph_abstract(m: int) -> DGraph:
    """``H_m`` as an adjacency matrix over :func:`shift_pairs` (objects are the pairs)."""
    pairs = shift_pairs(m)
    n = len(pairs)
    adj = np.zeros((n, n), dtype=bool)
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            if j == k or l == i:
                adj[a, b] = adj[b, a] = True
    return DGraph(pairs, adj, kind="abstract")


def shift_chromatic(m: int) -> int:
    return math.ceil(math.log2(m))


def _verify_shift(objects, m: int) -> DGraph:
    g = build_graph(objects)
    if not np.array_equal(g.adj, shift_graph_abstract(m).adj):
        raise InvariantError(f"realization of H_{m} has the wrong edge set")
    if not is_triangle_free(g):
        raise InvariantError("shift realization contains a triangle")
    return g


def gen_shift_pointed_lines(m: int) -> list[PuncturedLine]:
    """``p_ij`` is the line ``L_i: y = i*x + i^2`` minus its meet ``(-(i+j), -ij)`` with ``L_j``."""
    out = [PuncturedLine(i, i * i, (-(i + j), -i * j)) for i, j in shift_pairs(m)]
    _verify_shift(out, m)
    return out


def gen_shift_two_segments(m: int) -> list[TwoSegments]:
    """Pointed lines cut to ``x in [-3m, m]`` with an open gap of half-width 1/2 at the hole.

    Carrier lines meet at integer abscissae ``-(i+k)`` inside the window, so the
    gap removes exactly one meet point from each carrier.
    """
    half = Fraction(1, 2)
    lo, hi = -3 * m, m
    out = []
    for i, j in shift_pairs(m):
        x0 = -(i + j)
        if not lo < x0 - half and x0 + half < hi:
            raise InvariantError("hole too close to the window border")

        def at(x, i=i):
            return (x, i * x + i * i)

        out.append(TwoSegments(Segment(at(lo), at(x0 - half)), Segment(at(x0 + half), at(hi))))
    _verify_shift(out, m)
    return out


@dataclass
class PolylineParams:
    """Shape of the four-segment construction.

    The apexes ``p_i = (c*(i*delta)^2, 1 + i*delta)`` sit on an arc whose right
    side is convex.  Triangle ``T_i`` has apex ``p_i``, horizontal base and
    centroid on the x-axis; its half-width is ``rho`` times its height.
    ``s_i = p_i + sigma*(r_i - p_i)`` and ``t_ij`` is ``tau`` left of where line
    ``p_i p_j`` crosses the x-axis.
    """

    delta: Fraction = Fraction(1, 8)
    c: Fraction = Fraction(1)
    rho: Fraction = Fraction(4, 7)
    sigma: Fraction = Fraction(1, 8)
    tau: Fraction = Fraction(1, 64)


def _apex(i: int, pr: PolylineParams):
    u = i * pr.delta
    return (pr.c * u * u, 1 + u)


def triangle(i: int, pr: PolylineParams):
    """Vertices ``(p_i, q_i, r_i)``: apex, lower right, lower left."""
    px, py = _apex(i, pr)
    w = pr.rho * Fraction(3, 2) * py
    base = -py / 2
    return (px, py), (px + w, base), (px - w, base)


def _in_triangle(pt, tri) -> bool:
    """Strict interior test."""
    (ax, ay), (bx, by), (cx, cy) = tri
    x, y = pt

    def o(px, py, qx, qy):
        return (qx - px) * (y - py) - (qy - py) * (x - px)

    s = [o(ax, ay, bx, by), o(bx, by, cx, cy), o(cx, cy, ax, ay)]
    return all(v > 0 for v in s) or all(v < 0 for v in s)


def _shift_polylines(m: int, pr: PolylineParams) -> list[Polyline]:
    tris = {i: triangle(i, pr) for i in range(1, m + 1)}
    out = []
    for i, j in shift_pairs(m):
        (pix, piy), (pjx, pjy) = _apex(i, pr), _apex(j, pr)
        p, q, r = tris[j]
        s = (p[0] + pr.sigma * (r[0] - p[0]), p[1] + pr.sigma * (r[1] - p[1]))
        cross = pix - piy * (pjx - pix) / (pjy - piy)
        t = (cross - pr.tau, Fraction(0))
        if not all(_in_triangle(t, tris[k]) for k in tris):
            raise InvariantError("t_ij outside some triangle")
        out.append(Polyline.from_points([t, p, q, r, s]))
    return out


def nested(m: int, pr: PolylineParams) -> bool:
    """``T_i`` strictly inside ``T_j`` for all ``i < j``."""
    tris = [triangle(i, pr) for i in range(1, m + 1)]
    return all(_in_triangle(v, tris[j]) for a in range(m) for j in range(a + 1, m) for v in tris[a])


def gen_shift_polyline(m: int, params: PolylineParams | None = None, max_rounds: int = 12) -> list[Polyline]:
    """Four-segment polylines realizing ``H_m``, found by halving the shape parameters.

    The outer loop shortens the arc (``delta``) and flattens it (``c``); the inner
    loop pulls ``s_i`` towards ``p_i`` and ``t_ij`` towards its line.  Only a
    verified family is returned.
    """
    pr = params or PolylineParams()
    for _ in range(max_rounds):
        sigma, tau = pr.sigma, pr.tau
        for _ in range(max_rounds):
            cand = PolylineParams(pr.delta, pr.c, pr.rho, sigma, tau)
            if nested(m, cand):
                try:
                    out = _shift_polylines(m, cand)
                    _verify_shift(out, m)
                    return out
                except InvariantError:
                    pass
            sigma, tau = sigma / 2, tau / 4
        pr = PolylineParams(pr.delta / 2, pr.c / 2, pr.rho, pr.sigma, pr.tau)
    raise SearchExhausted(f"no verified polyline realization of H_{m}")


def moment_point(t) -> tuple:
    return (Fraction(t), Fraction(t) ** 2, Fraction(t) ** 3)


def gen_kneser_lines(k: int) -> list[EuclLine]:
    """Lines through pairs of ``2k+1`` moment-curve points, pairs in lexicographic order."""
    if k < 1:
        raise ValueError("k >= 1")
    pts = [moment_point(t) for t in range(1, 2 * k + 2)]
    return [EuclLine.through(pts[a], pts[b]) for a, b in itertools.combinations(range(2 * k + 1), 2)]


def combinatorial_lines(m: int, d: int) -> list[tuple[tuple, tuple]]:
    """Combinatorial lines of ``{1..m}^d`` as (first point, 0/1 direction), in a fixed order."""
    if m < 2 or d < 2:
        raise ValueError("need m >= 2 and d >= 2")
    out = []
    for mask in itertools.product((0, 1), repeat=d):
        if not any(mask):
            continue
        free = [a for a in range(d) if not mask[a]]
        for vals in itertools.product(range(1, m + 1), repeat=len(free)):
            x = [1] * d
            for a, v in zip(free, vals):
                x[a] = v
            out.append((tuple(x), mask))
    return out


def _lattice_meets(lines, m: int) -> np.ndarray:
    pts = [{tuple(b + (t - 1) * u for b, u in zip(base, mask)) for t in range(1, m + 1)}
           for base, mask in lines]
    n = len(lines)
    meet = np.zeros((n, n), dtype=bool)
    for a in range(n):
        for b in range(a + 1, n):
            meet[a, b] = meet[b, a] = bool(pts[a] & pts[b])
    return meet


def gen_hales_jewett_lines(m: int, d: int, rng: random.Random | None = None,
                           max_attempts: int = 200) -> list[EuclLine]:
    """One line of R^3 per combinatorial line of ``{1..m}^d``.

    Two lines of the cube meet only at a lattice point of the cube.  For d > 3
    a random integer projection is kept only if it preserves every meeting
    relation; d = 2 is embedded in the plane z = 0.
    """
    comb = combinatorial_lines(m, d)
    if d <= 3:
        pad = (0,) * (3 - d)
        return [EuclLine(tuple(b) + pad, tuple(u) + pad) for b, u in comb]
    rng = rng or random.Random(0)
    meet = _lattice_meets(comb, m)
    for _ in range(max_attempts):
        mat = random_linear_map(rng, 3, d)
        dirs = [apply_map(mat, u) for _, u in comb]
        if any(not any(v) for v in dirs):
            continue
        lines = [EuclLine(apply_map(mat, b), v) for (b, _), v in zip(comb, dirs)]
        g = build_graph(lines, mode="intersection")
        if len({(L.base, L.dir) for L in lines}) == len(lines) and np.array_equal(g.adj, meet):
            return lines
    raise SearchExhausted("no faithful projection of the combinatorial lines")


def gen_linegraph_lines(graph) -> list[EuclLine]:
    """Lines realizing the line graph of a simple graph as an intersection graph.

    ``graph`` is either ``(vertices, edges)`` or any object with ``nodes()`` and
    ``edges()`` methods.  Vertices go to distinct moment-curve points (no four
    coplanar), edges to the lines joining them, in edge order.
    """
    if hasattr(graph, "edges") and callable(graph.edges):
        vertices, edges = list(graph.nodes()), list(graph.edges())
    else:
        vertices, edges = graph
        vertices, edges = list(vertices), list(edges)
    if len(vertices) < 2:
        raise ValueError("need at least two vertices")
    pos = {v: moment_point(t) for t, v in enumerate(vertices, start=1)}
    for u, v in edges:
        if u == v:
            raise ValueError("loops are not allowed")
    if len({frozenset(e) for e in edges}) != len(edges):
        raise ValueError("parallel edges are not allowed")
    return [EuclLine.through(pos[u], pos[v]) for u, v in edges]


def coplanar4(pts: Sequence) -> bool:
    """True iff the four points of R^3 lie in one plane."""
    a = pts[0]
    rows = [[p[i] - a[i] for i in range(3)] for p in pts[1:]]
    (x1, y1, z1), (x2, y2, z2), (x3, y3, z3) = rows
    return x1 * (y2 * z3 - z2 * y3) - y1 * (x2 * z3 - z2 * x3) + z1 * (x2 * y3 - y2 * x3) == 0


GENERATORS = {
    "shift-pointed": ("punctured_line", "euclidean"),
    "shift-two-segments": ("two_segments", "euclidean"),
    "shift-polyline": ("polyline", "euclidean"),
    "kneser": ("eucl_line", "euclidean"),
    "hales-jewett": ("eucl_line", "euclidean"),
    "linegraph": ("eucl_line", "euclidean"),
}
