"""Coloring planar segment disjointness graphs with at most |K|^4 colors.

Four partial orders on pairwise disjoint, non-vertical segments cover every
disjoint pair.  Each segment is colored by its vector of Mirsky heights (length
of the longest chain ending at it) in the four orders; the longest chain found
is the clique.

With ``X(s) = [l_s, r_s]`` the x-range of ``s``:

* ``s <NestBelow t``: disjoint, ``X(t) ⊆ X(s)`` and ``t`` above ``s`` on ``X(t)``;
* ``s <NestAbove t``: disjoint, ``X(t) ⊆ X(s)`` and ``t`` below ``s`` on ``X(t)``;
* ``s <StagBelow t``: disjoint, ``l_s < l_t``, ``r_s < r_t`` and ``s`` below ``t``
  wherever both are defined (vacuous if the x-ranges are disjoint);
* ``s <StagAbove t``: the same with ``s`` above ``t``.
"""
from __future__ import annotations

import enum
import random
from collections import deque
from typing import Sequence

from .certificate import BOUNDS, Certificate, dense_colors
from .errors import DimensionError, InvariantError
from .geometry import Segment, disjoint_raw, generic_shear_2d, integerize


class OrderId(enum.Enum):
    NEST_BELOW = "NestBelow"
    NEST_ABOVE = "NestAbove"
    STAG_BELOW = "StagBelow"
    STAG_ABOVE = "StagAbove"


ORDERS = tuple(OrderId)


def _prep(ends) -> tuple:
    """Integer segment as (lx, ly, rx, ry) with lx < rx."""
    (ax, ay), (bx, by) = ends
    if ax == bx:
        raise ValueError("vertical segment; shear first")
    if ax < bx:
        return (ax, ay, bx, by)
    return (bx, by, ax, ay)


def _above(s, t, x2) -> int:
    """Sign of s(x) - t(x) at x = x2/2."""
    lxs, lys, rxs, rys = s
    lxt, lyt, rxt, ryt = t
    ds, dt = rxs - lxs, rxt - lxt
    vs = 2 * lys * ds + (x2 - 2 * lxs) * (rys - lys)
    vt = 2 * lyt * dt + (x2 - 2 * lxt) * (ryt - lyt)
    diff = vs * dt - vt * ds
    return (diff > 0) - (diff < 0)


def _relations(s, t) -> list[tuple[OrderId, int]]:
    """Relations between two disjoint prepared segments; +1 means s < t, -1 means t < s."""
    ls, rs, lt, rt = s[0], s[2], t[0], t[2]
    out = []
    if ls <= lt and rt <= rs:
        sg = _above(t, s, lt + rt)
        out.append((OrderId.NEST_BELOW if sg > 0 else OrderId.NEST_ABOVE, 1))
    if lt <= ls and rs <= rt:
        sg = _above(s, t, ls + rs)
        out.append((OrderId.NEST_BELOW if sg > 0 else OrderId.NEST_ABOVE, -1))
    if ls < lt and rs < rt:
        if rs < lt:
            out += [(OrderId.STAG_BELOW, 1), (OrderId.STAG_ABOVE, 1)]
        else:
            below = _above(s, t, lt + rs) < 0
            out.append((OrderId.STAG_BELOW if below else OrderId.STAG_ABOVE, 1))
    if lt < ls and rt < rs:
        if rt < ls:
            out += [(OrderId.STAG_BELOW, -1), (OrderId.STAG_ABOVE, -1)]
        else:
            below = _above(t, s, ls + rt) < 0
            out.append((OrderId.STAG_BELOW if below else OrderId.STAG_ABOVE, -1))
    return out


def _check_planar(segs: Sequence[Segment]):
    for s in segs:
        if s.dim != 2:
            raise DimensionError("planar machinery needs segments in R^2")


def order_compare(s: Segment, t: Segment) -> set[tuple[OrderId, int]]:
    """All relations between ``s`` and ``t`` as ``(order, +1 if s < t else -1)``."""
    _check_planar([s, t])
    a, b, c, d = integerize([s.a, s.b, t.a, t.b])
    ps, pt = _prep((a, b)), _prep((c, d))
    if not disjoint_raw(a, b, c, d):
        return set()
    return set(_relations(ps, pt))


def _order_graphs(prepped: list, disjoint) -> dict[OrderId, list[list[int]]]:
    n = len(prepped)
    succ = {o: [[] for _ in range(n)] for o in ORDERS}
    for i in range(n):
        for j in range(i + 1, n):
            if not disjoint(i, j):
                continue
            for o, direction in _relations(prepped[i], prepped[j]):
                if direction > 0:
                    succ[o][i].append(j)
                else:
                    succ[o][j].append(i)
    return succ


def _longest_chains(succ: list[list[int]]) -> tuple[list[int], list[int]]:
    """Mirsky heights by longest path in a DAG, plus one longest chain."""
    n = len(succ)
    indeg = [0] * n
    for vs in succ:
        for v in vs:
            indeg[v] += 1
    height = [1] * n
    pred = [-1] * n
    queue = deque(v for v in range(n) if indeg[v] == 0)
    seen = 0
    while queue:
        u = queue.popleft()
        seen += 1
        for v in succ[u]:
            if height[u] + 1 > height[v]:
                height[v] = height[u] + 1
                pred[v] = u
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    if seen != n:
        raise InvariantError("order relation has a cycle")
    if not n:
        return height, []
    v = max(range(n), key=lambda i: (height[i], -i))
    chain = []
    while v != -1:
        chain.append(v)
        v = pred[v]
    return height, chain[::-1]


def _prepare(segs: Sequence[Segment], rng, eps=None):
    eps, sheared = generic_shear_2d(segs, rng=rng, eps=eps)
    ends = integerize([p for s in sheared for p in (s.a, s.b)])
    pairs = [(ends[2 * i], ends[2 * i + 1]) for i in range(len(segs))]
    return eps, pairs, [_prep(p) for p in pairs]


def mirsky_decompose(segs: Sequence[Segment], order: OrderId) -> tuple[list[int], list[int]]:
    """Heights of every segment in ``order`` and a longest chain (segments must be non-vertical)."""
    _check_planar(segs)
    _, pairs, prepped = _prepare(segs, None, eps=0)
    succ = _order_graphs(prepped, lambda i, j: disjoint_raw(*pairs[i], *pairs[j]))
    return _longest_chains(succ[OrderId(order)])


def color_planar_segments(segs: Sequence[Segment], rng: random.Random | None = None) -> Certificate:
    """Proper coloring of the planar disjointness graph with at most |K|^4 colors.

    Vertical segments are removed by a random shear, recorded in ``meta["shear"]``.
    """
    _check_planar(segs)
    eps, pairs, prepped = _prepare(segs, rng)
    succ = _order_graphs(prepped, lambda i, j: disjoint_raw(*pairs[i], *pairs[j]))
    heights, chains = {}, {}
    for o in ORDERS:
        heights[o], chains[o] = _longest_chains(succ[o])
    best = max(ORDERS, key=lambda o: len(chains[o]))  # first maximum wins
    clique = chains[best]
    keys = [tuple(heights[o][v] for o in ORDERS) for v in range(len(segs))]
    colors, palette = dense_colors(keys)
    tuple_bound = 1
    for o in ORDERS:
        tuple_bound *= max(heights[o], default=0)
    if len(palette) > tuple_bound or tuple_bound > len(clique) ** 4:
        raise InvariantError("height vectors exceed the |K|^4 budget")
    return Certificate(
        mode="planar-segments",
        colors=colors,
        clique=clique,
        bound=BOUNDS["planar-segments"],
        classes=[{"heights": list(key)} for key in palette],
        meta={"shear": str(eps), "chain_order": best.value},
    )
