"""Exact small-instance ground truth and the polynomial clique algorithms for line graphs.

Exhaustive searches refuse instances above their caps instead of timing out.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import CapExceeded
from .geometry import EuclLine, HomPlane, HomPoint, ProjLine, proj_lines_meet, span_structure
from .graph import DGraph


@dataclass
class OracleCaps:
    chromatic: int = 40
    clique: int = 60
    cover_k: int = 4


CAPS = OracleCaps()


def _bitsets(g: DGraph) -> list[int]:
    out = []
    for v in range(g.n):
        b = 0
        for u in g.neighbors(v):
            b |= 1 << u
        out.append(b)
    return out


def _clique_bitsets(nbr: list[int], n: int) -> list[int]:
    best: list[int] = []

    def color_bound(cand: int):
        # greedy coloring of the candidates; color index bounds the clique size
        order, bounds = [], []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~nbr[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(current: list[int], cand: int):
        nonlocal best
        order, bounds = color_bound(cand)
        for idx in range(len(order) - 1, -1, -1):
            if len(current) + bounds[idx] <= len(best):
                return
            v = order[idx]
            current.append(v)
            sub = cand & nbr[v]
            if sub:
                expand(current, sub)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return sorted(best)


def exact_clique(g: DGraph, cap: int | None = None) -> tuple[int, list[int]]:
    """Maximum clique by branch and bound with a greedy-coloring bound."""
    cap = CAPS.clique if cap is None else cap
    if g.n > cap:
        raise CapExceeded(f"clique oracle capped at n={cap}, got {g.n}")
    k = _clique_bitsets(_bitsets(g), g.n)
    return len(k), k


def exact_independence(g: DGraph, cap: int | None = None) -> tuple[int, list[int]]:
    """Maximum independent set, as a clique of the complement."""
    cap = CAPS.clique if cap is None else cap
    if g.n > cap:
        raise CapExceeded(f"independence oracle capped at n={cap}, got {g.n}")
    full = (1 << g.n) - 1
    comp = [full & ~b & ~(1 << v) for v, b in enumerate(_bitsets(g))]
    k = _clique_bitsets(comp, g.n)
    return len(k), k


def dsatur(g: DGraph) -> list[int]:
    """Greedy DSATUR coloring (upper bound)."""
    n = g.n
    colors = [-1] * n
    nbrs = [g.neighbors(v) for v in range(n)]
    sat: list[set] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0), key=lambda u: (len(sat[u]), len(nbrs[u]), -u))
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        for u in nbrs[v]:
            sat[u].add(c)
    return colors


def _k_colorable(nbrs: list[list[int]], k: int, seed: list[int]) -> list[int] | None:
    n = len(nbrs)
    colors = [-1] * n
    # the clique seed gets fixed distinct colors, removing symmetric branches
    for c, v in enumerate(seed):
        colors[v] = c

    def pick():
        best, best_key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            used = {colors[u] for u in nbrs[v] if colors[u] >= 0}
            key = (len(used), len(nbrs[v]))
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def solve(done: int, used_max: int) -> bool:
        if done == n:
            return True
        v = pick()
        taken = {colors[u] for u in nbrs[v] if colors[u] >= 0}
        for c in range(min(k, used_max + 2)):
            if c in taken:
                continue
            colors[v] = c
            if solve(done + 1, max(used_max, c)):
                return True
        colors[v] = -1
        return False

    return colors if solve(len(seed), len(seed) - 1) else None


def exact_chromatic(g: DGraph, cap: int | None = None) -> tuple[int, list[int]]:
    """Chromatic number with an optimal coloring.

    The clique number is the lower bound, DSATUR the upper bound; each k in
    between is decided by backtracking.
    """
    cap = CAPS.chromatic if cap is None else cap
    if g.n > cap:
        raise CapExceeded(f"chromatic oracle capped at n={cap}, got {g.n}")
    if g.n == 0:
        return 0, []
    best = dsatur(g)
    ub = max(best) + 1
    lb, clique = exact_clique(g, cap=max(cap, g.n))
    nbrs = [g.neighbors(v) for v in range(g.n)]
    for k in range(lb, ub):
        col = _k_colorable(nbrs, k, clique)
        if col is not None:
            return k, col
    return ub, best


def is_proper(g: DGraph, colors: Sequence[int]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges())


# --- intersection graphs of lines --------------------------------------------

@dataclass
class MaximalCliqueWitness:
    kind: str                      # "point", "plane" or "single"
    witness: object                # HomPoint, HomPlane or the line itself
    members: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        w = self.witness
        if isinstance(w, HomPoint):
            enc = [str(x) for x in w.h]
        elif isinstance(w, HomPlane):
            enc = [str(x) for x in w.c]
        else:
            enc = None
        return {"kind": self.kind, "witness": enc, "members": list(self.members)}


def _projective(lines) -> list[ProjLine]:
    return [L.plucker if isinstance(L, EuclLine) else L for L in lines]


def _groups(proj: list[ProjLine]) -> tuple[list[int], dict[int, list[int]]]:
    reps: list[int] = []
    group: dict[tuple, int] = {}
    members: dict[int, list[int]] = {}
    for i, L in enumerate(proj):
        r = group.setdefault(L.p, i)
        if r == i:
            reps.append(i)
        members.setdefault(r, []).append(i)
    return reps, members


def _structures(lines, space: str):
    """All point and plane witnesses spanned by meeting pairs of distinct lines."""
    proj = _projective(lines)
    reps, members = _groups(proj)
    points: dict[HomPoint, None] = {}
    planes: dict[HomPlane, None] = {}
    for a in range(len(reps)):
        for b in range(a + 1, len(reps)):
            L, M = proj[reps[a]], proj[reps[b]]
            if proj_lines_meet(L, M) is None:
                continue
            q, pl = span_structure(L, M)
            if not (space == "euclidean" and q.is_ideal):
                points.setdefault(q)
            planes.setdefault(pl)
    return proj, reps, members, list(points), list(planes)


def _plane_clique(lines, proj, reps, members, pl: HomPlane, space: str) -> list[int]:
    inside = [r for r in reps if proj[r].in_plane(pl)]
    if space == "euclidean":
        by_dir: dict[tuple, int] = {}
        for r in inside:
            d = lines[r].dir
            if d not in by_dir or len(members[r]) > len(members[by_dir[d]]):
                by_dir[d] = r
        inside = list(by_dir.values())
    return sorted(v for r in inside for v in members[r])


def omega_intersection_lines(lines: Sequence, space: str = "projective") -> tuple[int, MaximalCliqueWitness]:
    """Clique number of the intersection graph of lines in O(n^3).

    Pairwise meeting lines all pass through one point or all lie in one plane,
    so it suffices to scan the point and plane spanned by every meeting pair.
    Repeated lines meet each other and are counted with multiplicity.  In R^3
    only affine meet points count and a plane clique keeps one line per direction.
    """
    if space not in ("projective", "euclidean"):
        raise ValueError(f"unknown space {space!r}")
    lines = list(lines)
    if not lines:
        return 0, MaximalCliqueWitness("single", None, [])
    if space == "euclidean" and not all(isinstance(L, EuclLine) for L in lines):
        raise TypeError("euclidean space needs EuclLine input")
    proj, reps, members, points, planes = _structures(lines, space)
    r0 = max(reps, key=lambda r: len(members[r]))
    best = MaximalCliqueWitness("single", lines[r0], list(members[r0]))
    for q in points:
        mem = sorted(v for r in reps if proj[r].contains(q) for v in members[r])
        if len(mem) > len(best.members):
            best = MaximalCliqueWitness("point", q, mem)
    for pl in planes:
        mem = _plane_clique(lines, proj, reps, members, pl, space)
        if len(mem) > len(best.members):
            best = MaximalCliqueWitness("plane", pl, mem)
    return len(best.members), best


def clique_cover_at_most_k(lines: Sequence, k: int, space: str = "projective",
                           max_k: int | None = None) -> list[MaximalCliqueWitness] | None:
    """Cover all lines by at most ``k`` point/plane cliques of the intersection graph, or None.

    Branches over the maximal cliques containing the first uncovered line.
    Euclidean input is accepted only without parallel pairs, where its meeting
    relation agrees with the projective one.
    """
    max_k = CAPS.cover_k if max_k is None else max_k
    if k > max_k:
        raise CapExceeded(f"clique cover search capped at k={max_k}")
    lines = list(lines)
    if space == "euclidean":
        proj = _projective(lines)
        for a in range(len(lines)):
            for b in range(a + 1, len(lines)):
                if lines[a].dir == lines[b].dir and proj[a].p != proj[b].p:
                    raise ValueError("parallel lines; cover search supports projective meetings only")
    proj, reps, members, points, planes = _structures(lines, "projective")
    cands = [MaximalCliqueWitness("point", q, sorted(v for r in reps if proj[r].contains(q)
                                                     for v in members[r])) for q in points]
    cands += [MaximalCliqueWitness("plane", pl, _plane_clique(lines, proj, reps, members, pl, "projective"))
              for pl in planes]
    n = len(lines)
    covering: dict[int, list[MaximalCliqueWitness]] = {v: [] for v in range(n)}
    for c in cands:
        for v in c.members:
            covering[v].append(c)
    for r in reps:
        if not covering[r]:
            single = MaximalCliqueWitness("single", lines[r], list(members[r]))
            for v in members[r]:
                covering[v].append(single)

    def search(covered: set, chosen: list) -> list | None:
        if len(covered) == n:
            return list(chosen)
        if len(chosen) == k:
            return None
        v = next(u for u in range(n) if u not in covered)
        for c in covering[v]:
            chosen.append(c)
            out = search(covered | set(c.members), chosen)
            if out is not None:
                return out
            chosen.pop()
        return None

    return search(set(), [])

