"""Seeded random instance families with exact rational coordinates."""
from __future__ import annotations

import random
from fractions import Fraction

from .geometry import EuclLine, ProjLine, Segment, plucker_from_points


def _rat(rng: random.Random, span: int, den: int) -> Fraction:
    return Fraction(rng.randint(-span * den, span * den), rng.randint(1, den))


def random_planar_segments(rng: random.Random, n: int, span: int = 20, den: int = 3,
                           vertical: float = 0.05) -> list[Segment]:
    """Random rational planar segments; a few are vertical and some share endpoints."""
    out: list[Segment] = []
    while len(out) < n:
        a = (_rat(rng, span, den), _rat(rng, span, den))
        if out and rng.random() < 0.1:
            a = rng.choice(out).b
        if rng.random() < vertical:
            b = (a[0], _rat(rng, span, den))
        else:
            b = (_rat(rng, span, den), _rat(rng, span, den))
        if a != b:
            out.append(Segment(a, b))
    return out


def _plane_frame(rng: random.Random, span: int):
    if rng.random() < 0.5:
        # axis-parallel plane through a small lattice point; such planes cross often
        axis = rng.randrange(3)
        origin = [Fraction(0)] * 3
        origin[axis] = Fraction(rng.randint(-1, 1))
        u, v = [tuple(int(i == a) for i in range(3)) for a in range(3) if a != axis]
        return tuple(origin), u, v
    origin = tuple(Fraction(rng.randint(-span, span)) for _ in range(3))
    while True:
        u = tuple(rng.randint(-3, 3) for _ in range(3))
        v = tuple(rng.randint(-3, 3) for _ in range(3))
        cross = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        if any(cross):
            return origin, u, v


def random_segments_3d(rng: random.Random, n: int, span: int = 6,
                       clusters: int = 3, pencils: int = 2) -> list[Segment]:
    """Mix of coplanar clusters, concurrent pencils (some collinear pieces) and generic segments."""
    frames = [_plane_frame(rng, span) for _ in range(clusters)]
    apexes = [tuple(Fraction(rng.randint(-span, span)) for _ in range(3)) for _ in range(pencils)]
    pencil_dirs = [[tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(3)] for _ in range(pencils)]
    out: list[Segment] = []
    while len(out) < n:
        r = rng.random()
        if r < 0.4 and frames:
            o, u, v = rng.choice(frames)
            pts = []
            for _ in range(2):
                s, t = _rat(rng, 2, 1), _rat(rng, 2, 1)
                pts.append(tuple(o[i] + s * u[i] + t * v[i] for i in range(3)))
            a, b = pts
        elif r < 0.7 and apexes:
            p = rng.randrange(len(apexes))
            d = rng.choice(pencil_dirs[p])
            s, t = _rat(rng, 3, 2), _rat(rng, 3, 2)
            a = tuple(apexes[p][i] + s * d[i] for i in range(3))
            b = tuple(apexes[p][i] + t * d[i] for i in range(3))
        else:
            a = tuple(_rat(rng, span, 2) for _ in range(3))
            b = tuple(_rat(rng, span, 2) for _ in range(3))
        if a != b:
            out.append(Segment(a, b))
    return out


def random_grid_lines(rng: random.Random, n: int, grid: int = 2) -> list[EuclLine]:
    """Lines through pairs of points of a small integer grid, so many of them meet."""
    out: list[EuclLine] = []
    while len(out) < n:
        a = tuple(rng.randint(-grid, grid) for _ in range(3))
        b = tuple(rng.randint(-grid, grid) for _ in range(3))
        if a != b:
            out.append(EuclLine.through(a, b))
    return out


def random_projective_lines(rng: random.Random, n: int, grid: int = 2) -> list[ProjLine]:
    """Lines through pairs of small homogeneous points; lines at infinity occur."""
    out: list[ProjLine] = []
    while len(out) < n:
        x = tuple(rng.randint(0 if i == 0 else -grid, 1 if i == 0 else grid) for i in range(4))
        y = tuple(rng.randint(0 if i == 0 else -grid, 1 if i == 0 else grid) for i in range(4))
        if not any(x) or not any(y):
            continue
        p = tuple(x[i] * y[j] - x[j] * y[i] for i, j in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
        if any(p):
            out.append(ProjLine(p))
    return out


def parallel_bundle(rng: random.Random, k: int, direction=None, span: int = 5) -> list[EuclLine]:
    """``k`` distinct parallel lines."""
    d = direction or (1, rng.randint(-2, 2), rng.randint(-2, 2))
    out: dict = {}
    while len(out) < k:
        L = EuclLine(tuple(rng.randint(-span, span) for _ in range(3)), d)
        out[(L.base, L.dir)] = L
    return list(out.values())


def mixed_bundles(rng: random.Random, k: int, bundles: int = 3, extra: int = 10) -> list[EuclLine]:
    """Several parallel bundles of size ``k`` plus random grid lines."""
    out: list[EuclLine] = []
    dirs: set = set()
    while len(dirs) < bundles:
        dirs.add((1, rng.randint(-3, 3), rng.randint(-3, 3)))
    for d in sorted(dirs):
        out += parallel_bundle(rng, k, d)
    out += random_grid_lines(rng, extra)
    rng.shuffle(out)
    return out


def random_cell(rng: random.Random, n: int, spots: int = 3) -> tuple[ProjLine, list[ProjLine]]:
    """A center line ``L0`` (the x-axis) and ``n`` other lines all meeting it.

    Meet points and spanned planes repeat often, so the bipartite structure is
    not a plain matching.
    """
    center = plucker_from_points((1, 0, 0, 0), (1, 1, 0, 0))
    feet = [(1, a, 0, 0) for a in range(spots)] + [(0, 1, 0, 0)]
    slopes = [(rng.randint(-2, 2), rng.randint(1, 2)) for _ in range(spots + 1)]
    out: list[ProjLine] = []
    while len(out) < n:
        foot = rng.choice(feet)
        b, c = rng.choice(slopes) if rng.random() < 0.6 else (rng.randint(-2, 2), rng.randint(-2, 2))
        if b == 0 and c == 0:
            continue
        other = (1, rng.randint(-2, 2), b, c)
        L = plucker_from_points(foot, other)
        if L.p != center.p:
            out.append(L)
    return center, out
