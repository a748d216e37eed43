"""Coloring disjointness graphs of segments in space with at most |K|^4 + |K|^3 colors.

Pipeline: color the supporting lines in P^3, split the line classes into planar
ones (all lines in one plane) and pointed ones (all lines through one point),
color the segments on planar classes with the plane recursion below and each
pointed class optimally through its chordal intersection graph.

Plane recursion, for segments lying in planes ``pi_1..pi_k``: each segment goes
to the last plane containing it.  Plane by plane, the segments disjoint from
every clique member found so far (``W_i``) are colored by the planar algorithm,
whose chain ``Z_i`` joins the clique.  Every remaining segment meets an earlier
clique member ``t`` at the point where ``t`` pierces its plane; it takes the
color of that point.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .certificate import BOUNDS, Certificate, dense_colors, enc_vec
from .errors import DimensionError, InvariantError
from .geometry import (
    HomPlane,
    HomPoint,
    ProjLine,
    Segment,
    disjoint_raw,
    generic_project_3d,
    hom,
    integerize,
    line_plane_meet,
    plane_through,
    segment_contains,
    supporting_line,
)
from .lines import _dedupe, color_projective_lines
from .planar import color_planar_segments


def _in_plane(s: Segment, plane: HomPlane) -> bool:
    return plane.contains_affine(s.a) and plane.contains_affine(s.b)


def assign_planes(segs: Sequence[Segment], planes: Sequence[HomPlane]) -> list[int]:
    """Index of the last listed plane containing each segment."""
    out = []
    for v, s in enumerate(segs):
        idx = [i for i, pl in enumerate(planes) if _in_plane(s, pl)]
        if not idx:
            raise ValueError(f"segment {v} lies in none of the given planes")
        out.append(idx[-1])
    return out


def _flatten(s: Segment, plane: HomPlane) -> Segment:
    """Drop a coordinate along which the plane is a graph; injective and affine on the plane."""
    k = next(i for i in (1, 2, 3) if plane.c[i] != 0) - 1
    keep = [j for j in range(3) if j != k]
    return Segment([s.a[j] for j in keep], [s.b[j] for j in keep])


@dataclass
class _PlaneRecursion:
    keys: list
    witnesses: dict
    clique: list[int]
    z_sizes: list[int]
    piercing: int


def _plane_recursion(segs: Sequence[Segment], planes: Sequence[HomPlane],
                     rng: random.Random | None) -> _PlaneRecursion:
    n = len(segs)
    assign = assign_planes(segs, planes)
    ends = integerize([p for s in segs for p in (s.a, s.b)])

    def disjoint(u, v):
        return disjoint_raw(ends[2 * u], ends[2 * u + 1], ends[2 * v], ends[2 * v + 1])

    by_plane = [[] for _ in planes]
    for v, i in enumerate(assign):
        by_plane[i].append(v)

    keys: list = [None] * n
    witnesses: dict = {}
    z_all: list[tuple[int, int]] = []
    z_sizes = []
    for i, plane in enumerate(planes):
        w = [v for v in by_plane[i] if all(disjoint(v, z) for _, z in z_all)]
        z = []
        if w:
            cert = color_planar_segments([_flatten(segs[v], plane) for v in w], rng)
            z = [w[j] for j in cert.clique]
            for j, v in enumerate(w):
                key = ("W", i, cert.colors[j])
                keys[v] = key
                witnesses.setdefault(key, {"planar": enc_vec(plane.c),
                                           "heights": cert.classes[cert.colors[j]]["heights"]})
        z_sizes.append(len(z))
        z_all += [(i, v) for v in z]

    points = set()
    for v in range(n):
        if keys[v] is not None:
            continue
        i = assign[v]
        for j, z in z_all:
            if j >= i:
                raise InvariantError(f"segment {v} outside W meets no earlier clique member")
            if disjoint(v, z):
                continue
            t = segs[z]
            q = HomPoint(line_plane_meet(hom(t.a), hom(t.b), planes[i].c))
            pt = q.to_affine()
            if not (segment_contains(segs[v], pt) and segment_contains(t, pt)):
                raise InvariantError("piercing point is not on both segments")
            key = ("P", q)
            keys[v] = key
            witnesses.setdefault(key, {"piercing": enc_vec(pt)})
            points.add(q)
            break
        else:
            raise InvariantError(f"segment {v} outside W meets no clique member")

    k = len(planes)
    if len(points) > sum((k - 1 - i) * zs for i, zs in enumerate(z_sizes)):
        raise InvariantError("more piercing colors than piercing points")
    return _PlaneRecursion(keys, witnesses, [v for _, v in z_all], z_sizes, len(points))


def _check_3d(segs: Sequence[Segment]):
    for s in segs:
        if s.dim != 3:
            raise DimensionError("expected segments in R^3")


def color_segments_kplanes(segs: Sequence[Segment], planes: Sequence) -> Certificate:
    """Color segments lying in the given planes with at most (k-1)|K| + |K|^4 colors."""
    _check_3d(segs)
    planes = [pl if isinstance(pl, HomPlane) else HomPlane(pl) for pl in planes]
    if any(pl.is_ideal for pl in planes):
        raise ValueError("the plane at infinity contains no segment")
    rec = _plane_recursion(segs, planes, random.Random(0))
    colors, palette = dense_colors(rec.keys)
    k = len(rec.clique)
    if len(palette) > (len(planes) - 1) * k + sum(z ** 4 for z in rec.z_sizes):
        raise InvariantError("plane recursion exceeds its color budget")
    return Certificate(
        mode="segments-kplanes",
        colors=colors,
        clique=rec.clique,
        bound=BOUNDS["segments-kplanes"],
        classes=[rec.witnesses[key] for key in palette],
        meta={"planes": len(planes), "piercing_points": rec.piercing},
    )


def classify_color_classes(cert: Certificate, lines: Sequence[ProjLine]):
    """Split a projective line coloring into planar and pointed classes.

    Returns ``(planes, planar_lines, pointed)``: deduplicated planes in order of
    appearance, the set of lines in planar classes, and a dict from apex to the
    lines of the pointed classes sharing that apex.
    """
    planes: list[HomPlane] = []
    planar_lines: set[int] = set()
    pointed: dict[HomPoint, list[int]] = {}
    for c, members in enumerate(cert.color_classes()):
        w = cert.classes[c]
        if "planar" in w:
            pl = HomPlane(w["planar"])
            if not all(lines[v].in_plane(pl) for v in members):
                raise InvariantError(f"class {c}: a line is not in its witness plane")
            if pl not in planes:
                planes.append(pl)
            planar_lines.update(members)
        elif "pointed" in w:
            apex = HomPoint(w["pointed"])
            if not all(lines[v].contains(apex) for v in members):
                raise InvariantError(f"class {c}: a line misses its witness point")
            pointed.setdefault(apex, []).extend(members)
        else:
            raise InvariantError(f"class {c} has no line witness")
    return planes, planar_lines, pointed


@dataclass
class PointedClassColoring:
    classes: list[list[int]]   # each class pairwise intersecting
    independent: list[int]     # pairwise disjoint, one per class
    peo: list[int]             # perfect elimination ordering of the intersection graph


def lex_bfs(n: int, nbrs: Sequence[set]) -> list[int]:
    labels: list[list[int]] = [[] for _ in range(n)]
    done = [False] * n
    order = []
    for step in range(n):
        v = max((u for u in range(n) if not done[u]), key=lambda u: (labels[u], -u))
        done[v] = True
        order.append(v)
        for w in nbrs[v]:
            if not done[w]:
                labels[w].append(n - step)
    return order


def is_perfect_elimination(order: Sequence[int], nbrs: Sequence[set]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in nbrs[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        if any(w != u and w not in nbrs[u] for w in later):
            return False
    return True


def color_pointed_class(segs: Sequence[Segment], apex: HomPoint) -> PointedClassColoring:
    """Minimum clique cover of the intersection graph of segments on concurrent lines."""
    _check_3d(segs)
    for v, s in enumerate(segs):
        if any(plane_through(hom(s.a), hom(s.b), apex.h)):
            raise ValueError(f"supporting line of segment {v} misses the apex")
    n = len(segs)
    ends = integerize([p for s in segs for p in (s.a, s.b)])
    nbrs = [set() for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if not disjoint_raw(ends[2 * u], ends[2 * u + 1], ends[2 * v], ends[2 * v + 1]):
                nbrs[u].add(v)
                nbrs[v].add(u)
    peo = lex_bfs(n, nbrs)[::-1]
    if not is_perfect_elimination(peo, nbrs):
        raise InvariantError("intersection graph of a pointed class is not chordal")
    covered = [False] * n
    classes, independent = [], []
    for v in peo:
        if covered[v]:
            continue
        cls = [v] + [w for w in nbrs[v] if not covered[w]]
        for w in cls:
            covered[w] = True
        classes.append(sorted(cls))
        independent.append(v)
    return PointedClassColoring(classes, independent, peo)


def _lift(segs: Sequence[Segment], rng):
    """Bring segments to R^3; returns (segments, map or None)."""
    d = segs[0].dim
    if d == 3:
        return list(segs), None
    if d == 2:
        emb = [[1, 0], [0, 1], [0, 0]]
        return [Segment(tuple(s.a) + (0,), tuple(s.b) + (0,)) for s in segs], emb
    out, mat = generic_project_3d(segs, rng=rng, return_map=True)
    return out, mat


def color_segments_3d(segs: Sequence[Segment], rng: random.Random | None = None) -> Certificate:
    """Proper coloring with at most |K|^4 + |K|^3 colors for segments in R^d.

    Planar input is embedded in z = 0 and input with d > 3 is first projected
    generically; the map used is recorded in ``meta["projection"]``.
    """
    rng = rng or random.Random(0)
    segs = list(segs)
    if not segs:
        return Certificate("segments-3d", [], [], BOUNDS["segments-3d"], [], {})
    if len({s.dim for s in segs}) > 1:
        raise DimensionError("mixed dimensions")
    segs, mat = _lift(segs, rng)
    n = len(segs)

    lines = [supporting_line(s) for s in segs]
    reps, slot = _dedupe([(L.base, L.dir) for L in lines])
    uniq = [lines[i].plucker for i in reps]
    pcert = color_projective_lines(uniq)
    planes, planar_lines, pointed = classify_color_classes(pcert, uniq)

    keys: list = [None] * n
    witnesses: dict = {}
    planar_segs = [v for v in range(n) if slot[v] in planar_lines]
    rec = _plane_recursion([segs[v] for v in planar_segs], planes, rng)
    for v, key in zip(planar_segs, rec.keys):
        keys[v] = ("K",) + key
        witnesses.setdefault(keys[v], rec.witnesses[key])
    k_planes = [planar_segs[j] for j in rec.clique]

    k_pointed: list[int] = []
    for ci, (apex, line_ids) in enumerate(pointed.items()):
        line_ids = set(line_ids)
        members = [v for v in range(n) if slot[v] in line_ids]
        pc = color_pointed_class([segs[v] for v in members], apex)
        for cj, cls in enumerate(pc.classes):
            key = ("Q", ci, cj)
            witnesses[key] = {"pointed": enc_vec(apex.h)}
            for j in cls:
                keys[members[j]] = key
        if len(pc.independent) > len(k_pointed):
            k_pointed = [members[j] for j in pc.independent]

    k_lifted = [reps[u] for u in pcert.clique]
    clique = max((k_planes, k_pointed, k_lifted), key=len)  # ties keep the earlier source

    colors, palette = dense_colors(keys)
    k = len(clique)
    if len(palette) > k ** 4 + k ** 3:
        raise InvariantError(f"{len(palette)} colors exceed |K|^4+|K|^3 with |K|={k}")
    meta = {
        "planes": len(planes),
        "pointed_classes": len(pointed),
        "piercing_points": rec.piercing,
        "projective_colors": pcert.num_colors,
    }
    if mat is not None:
        meta["projection"] = [[str(x) for x in row] for row in mat]
    return Certificate(
        mode="segments-3d",
        colors=colors,
        clique=clique,
        bound=BOUNDS["segments-3d"],
        classes=[witnesses[key] for key in palette],
        meta=meta,
    )
