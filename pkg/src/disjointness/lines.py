"""Coloring disjointness graphs of lines in P^3 (|K|^2 colors) and R^3 (|K|^3 colors).

Projective case: a greedy maximal clique ``C`` of pairwise skew lines splits the
lines into cells, one per ``c`` in ``C``, every line of a cell meeting ``c``.
Inside a cell with center ``L0`` each other line ``L`` is an edge of a bipartite
multigraph between the point ``L ∩ L0`` and the plane ``span(L, L0)``; two lines
meet iff their edges share an endpoint.  A maximum matching is a largest set of
pairwise skew lines, a minimum vertex cover (König) is an optimal coloring.

Euclidean case: color the projective closures, then split every class by the
position of each line inside its parallel bundle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .certificate import BOUNDS, Certificate, dense_colors, enc_vec
from .errors import InvariantError
from .geometry import (
    EQUAL,
    EuclLine,
    HomPlane,
    HomPoint,
    ProjLine,
    proj_lines_meet,
    side,
    span_structure,
)
from .graph import DGraph, build_graph


def greedy_maximal_clique(g: DGraph) -> list[int]:
    """Scan vertices in index order, keeping each one adjacent to all kept so far."""
    clique: list[int] = []
    for v in range(g.n):
        if all(g.adj[v, c] for c in clique):
            clique.append(v)
    return clique


def partition_by_clique(g: DGraph, clique: Sequence[int]) -> dict[int, list[int]]:
    """Assign every vertex outside the clique to the first clique member it is not adjacent to."""
    cells = {c: [c] for c in clique}
    members = set(clique)
    for v in range(g.n):
        if v in members:
            continue
        for c in clique:
            if not g.adj[v, c]:
                cells[c].append(v)
                break
        else:
            raise InvariantError(f"vertex {v} is adjacent to the whole clique; clique not maximal")
    return cells


@dataclass
class StarDecomposition:
    center: ProjLine
    lines: list[ProjLine]
    points: list[HomPoint]           # A side: meet points on the center
    planes: list[HomPlane]           # B side: planes through the center
    edges: list[tuple[int, int]]     # (point id, plane id) per line
    matching: list[int]              # line indices of a maximum matching
    cover: list[tuple[str, int]]     # minimum vertex cover, ("A", i) / ("B", j)
    line_cover: list[tuple[str, int]]  # covering vertex chosen for each line

    @property
    def nu(self) -> int:
        return len(self.matching)

    def classes(self) -> list[tuple[tuple[str, int], list[int]]]:
        """Color classes as (cover vertex, member line indices), in cover order."""
        groups: dict = {}
        for i, cv in enumerate(self.line_cover):
            groups.setdefault(cv, []).append(i)
        return [(cv, groups[cv]) for cv in self.cover if cv in groups]


def _max_matching(n_a: int, n_b: int, edges: list[tuple[int, int]]):
    adj = [[] for _ in range(n_a)]
    for e, (a, b) in enumerate(edges):
        adj[a].append((b, e))
    mate_a = [-1] * n_a
    mate_b = [-1] * n_b

    def augment(a, seen):
        for b, e in adj[a]:
            if seen[b]:
                continue
            seen[b] = True
            if mate_b[b] == -1 or augment(edges[mate_b[b]][0], seen):
                mate_a[a] = e
                mate_b[b] = e
                return True
        return False

    for a in range(n_a):
        augment(a, [False] * n_b)
    return adj, mate_a, mate_b


def _konig_cover(adj, mate_a, mate_b, edges):
    za = {a for a in range(len(mate_a)) if mate_a[a] == -1}
    zb: set[int] = set()
    stack = list(za)
    while stack:
        a = stack.pop()
        for b, e in adj[a]:
            if e == mate_a[a] or b in zb:
                continue
            zb.add(b)
            m = mate_b[b]
            if m != -1:
                a2 = edges[m][0]
                if a2 not in za:
                    za.add(a2)
                    stack.append(a2)
    cover = [("A", a) for a in range(len(mate_a)) if a not in za]
    cover += [("B", b) for b in sorted(zb)]
    return cover


def star_decompose(center: ProjLine, lines: Sequence[ProjLine]) -> StarDecomposition:
    """Optimal coloring of a cell whose lines all meet ``center``."""
    points: dict[HomPoint, int] = {}
    planes: dict[HomPlane, int] = {}
    edges = []
    for L in lines:
        if L.p == center.p:
            raise ValueError("cell line coincides with its center")
        if side(L, center) != 0:
            raise ValueError("cell line does not meet the center")
        q, pl = span_structure(center, L)
        edges.append((points.setdefault(q, len(points)), planes.setdefault(pl, len(planes))))
    adj, mate_a, mate_b = _max_matching(len(points), len(planes), edges)
    matching = sorted(e for e in mate_a if e != -1)
    cover = _konig_cover(adj, mate_a, mate_b, edges)
    if len(cover) != len(matching):
        raise InvariantError(f"König equality failed: |M|={len(matching)} |C|={len(cover)}")
    in_cover = set(cover)
    line_cover = []
    for a, b in edges:
        if ("A", a) in in_cover:
            line_cover.append(("A", a))
        elif ("B", b) in in_cover:
            line_cover.append(("B", b))
        else:
            raise InvariantError("vertex cover misses an edge")
    return StarDecomposition(center, list(lines), list(points), list(planes), edges,
                             matching, cover, line_cover)


def _concurrent_point(members: list[ProjLine]):
    q = proj_lines_meet(members[0], members[1])
    if q is None or q is EQUAL:
        return None
    return q if all(L.contains(q) for L in members[2:]) else None


def _class_witness(kind_id, members: list[ProjLine], dec: StarDecomposition) -> dict:
    kind, idx = kind_id
    if kind == "A":
        return {"pointed": enc_vec(dec.points[idx].h)}
    if len(members) == 1:
        return {"pointed": enc_vec(HomPoint(members[0].points[0]).h)}
    q = _concurrent_point(members)
    if q is not None:
        return {"pointed": enc_vec(q.h)}
    return {"planar": enc_vec(dec.planes[idx].c)}


def _as_proj(L) -> ProjLine:
    return L.plucker if isinstance(L, EuclLine) else L


def _dedupe(keys: list) -> tuple[list[int], list[int]]:
    """Representatives (first occurrences) and a map from every index to its representative slot."""
    first: dict = {}
    reps, slot = [], []
    for i, key in enumerate(keys):
        if key not in first:
            first[key] = len(reps)
            reps.append(i)
        slot.append(first[key])
    return reps, slot


def color_projective_lines(lines: Sequence) -> Certificate:
    """Proper coloring of the disjointness graph in P^3 with at most |K|^2 colors."""
    proj = [_as_proj(L) for L in lines]
    reps, slot = _dedupe([L.p for L in proj])
    uniq = [proj[i] for i in reps]
    g = build_graph(uniq, space="projective")
    clique = greedy_maximal_clique(g)
    cells = partition_by_clique(g, clique)

    keys: list = [None] * len(uniq)
    witnesses: list[dict] = []
    best_k = list(clique)
    nus = []
    for c in clique:
        members = cells[c][1:]
        dec = star_decompose(uniq[c], [uniq[v] for v in members])
        nus.append(dec.nu)
        if dec.nu > len(best_k):
            best_k = [members[i] for i in dec.matching]
        classes = [[members[i] for i in idxs] for _, idxs in dec.classes()]
        kinds = [cv for cv, _ in dec.classes()]
        if classes:
            classes[0].append(c)
        else:
            classes.append([c])
            kinds.append(("A", -1))
        for cv, cls in zip(kinds, classes):
            color = len(witnesses)
            if cv == ("A", -1):
                witnesses.append({"pointed": enc_vec(HomPoint(uniq[c].points[0]).h)})
            else:
                witnesses.append(_class_witness(cv, [uniq[v] for v in cls], dec))
            for v in cls:
                keys[v] = color

    bound_check = sum(max(nu, 1) for nu in nus)
    if len(witnesses) != bound_check or len(witnesses) > len(best_k) ** 2:
        raise InvariantError("projective coloring exceeds |K|^2")
    return Certificate(
        mode="lines-projective",
        colors=[keys[s] for s in slot],
        clique=[reps[v] for v in best_k],
        bound=BOUNDS["lines-projective"],
        classes=witnesses,
        meta={"maximal_clique": [reps[v] for v in clique], "matching_sizes": nus},
    )


def parallel_bundles(lines: Sequence[EuclLine]) -> tuple[dict[tuple, list[int]], int]:
    """Group line indices by canonical direction; also return the largest group size."""
    bundles: dict[tuple, list[int]] = {}
    for i, L in enumerate(lines):
        bundles.setdefault(L.dir, []).append(i)
    return bundles, max((len(b) for b in bundles.values()), default=0)


def color_euclidean_lines(lines: Sequence[EuclLine]) -> Certificate:
    """Proper coloring of the disjointness graph in R^3 with at most |K|^3 colors."""
    reps, slot = _dedupe([(L.base, L.dir) for L in lines])
    uniq = [lines[i] for i in reps]
    pcert = color_projective_lines([L.plucker for L in uniq])
    bundles, k = parallel_bundles(uniq)
    position = {}
    for members in bundles.values():
        for j, v in enumerate(members):
            position[v] = j
    keys = [(pcert.colors[v], position[v]) for v in range(len(uniq))]
    colors, palette = dense_colors(keys)
    classes = [dict(pcert.classes[pc], bundle_slot=j) for pc, j in palette]

    clique = pcert.clique
    largest = max(bundles.values(), key=len, default=[])
    if len(largest) > len(clique):
        clique = largest
    if len(palette) > k * pcert.num_colors or len(palette) > len(clique) ** 3:
        raise InvariantError("euclidean refinement exceeds |K|^3")
    return Certificate(
        mode="lines-euclidean",
        colors=[colors[s] for s in slot],
        clique=[reps[v] for v in clique],
        bound=BOUNDS["lines-euclidean"],
        classes=classes,
        meta={"max_bundle": k, "projective_colors": pcert.num_colors},
    )
