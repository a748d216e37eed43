"""Exact rational geometry for segments and lines.

All scalars are :class:`fractions.Fraction` or ``int``; floats are refused.
Homogeneous points of P^3 are written ``(h0, h1, h2, h3)`` with the affine
point ``(x, y, z)`` embedded as ``(1, x, y, z)``, so ``h0 == 0`` marks a point
at infinity.  Plücker coordinates are ordered ``(p01, p02, p03, p12, p13, p23)``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateError, DimensionError, InvariantError, SearchExhausted

Rat = Fraction
Point = tuple  # tuple of Fraction

PLUCKER_INDEX = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


# --- scalars -----------------------------------------------------------------

def rat(x) -> Fraction:
    """Coerce ``x`` to a Fraction. Accepts int, Fraction and strings like "3/4"."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def rat_str(x) -> str:
    return str(rat(x))


def point(coords: Iterable) -> Point:
    return tuple(rat(c) for c in coords)


def canonical(vec: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry positive."""
    fr = [rat(v) for v in vec]
    if all(v == 0 for v in fr):
        raise DegenerateError("zero vector has no canonical form")
    den = math.lcm(*(v.denominator for v in fr))
    ints = [v.numerator * (den // v.denominator) for v in fr]
    g = math.gcd(*ints)
    ints = [i // g for i in ints]
    if next(i for i in ints if i) < 0:
        ints = [-i for i in ints]
    return tuple(ints)


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _dot(p, q):
    return sum(a * b for a, b in zip(p, q))


def _det3(m) -> int | Fraction:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def common_denominator(points: Iterable[Sequence]) -> int:
    dens = [rat(c).denominator for p in points for c in p]
    return math.lcm(*dens) if dens else 1


def integerize(points: Sequence[Sequence], scale: int | None = None) -> list[tuple[int, ...]]:
    """Multiply every coordinate by a common positive integer so all become ints.

    A positive uniform scaling preserves every incidence and order predicate used
    here, so predicates can run on plain ints.
    """
    if scale is None:
        scale = common_denominator(points)
    out = []
    for p in points:
        row = []
        for c in p:
            c = rat(c)
            row.append(c.numerator * (scale // c.denominator))
        out.append(tuple(row))
    return out


# --- segments ----------------------------------------------------------------

@dataclass(frozen=True)
class Segment:
    """Closed segment ``{a + t(b - a) : 0 <= t <= 1}`` with ``a != b``."""

    a: Point
    b: Point

    def __post_init__(self):
        a, b = point(self.a), point(self.b)
        if len(a) != len(b):
            raise DimensionError(f"endpoint dimensions differ: {len(a)} vs {len(b)}")
        if len(a) < 2:
            raise DimensionError("segments live in R^d with d >= 2")
        if a == b:
            raise DegenerateError(f"degenerate segment at {a}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def dim(self) -> int:
        return len(self.a)

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)


def orient2d(p, q, r) -> int:
    """Sign of det(q - p, r - p): +1 counterclockwise, -1 clockwise, 0 collinear."""
    p, q, r = point(p), point(q), point(r)
    if not len(p) == len(q) == len(r) == 2:
        raise DimensionError("orient2d needs planar points")
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def _orient_raw(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _in_box(p, q, r) -> bool:
    # r collinear with pq assumed
    return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))


def _disjoint_2d(a, b, c, d) -> bool:
    o1 = _orient_raw(a, b, c)
    o2 = _orient_raw(a, b, d)
    o3 = _orient_raw(c, d, a)
    o4 = _orient_raw(c, d, b)
    if ((o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0)) and \
       ((o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0)):
        return False
    if o1 == 0 and _in_box(a, b, c):
        return False
    if o2 == 0 and _in_box(a, b, d):
        return False
    if o3 == 0 and _in_box(c, d, a):
        return False
    if o4 == 0 and _in_box(c, d, b):
        return False
    return True


def _disjoint_nd(a, b, c, d) -> bool:
    u = _sub(b, a)
    v = _sub(d, c)
    w = _sub(c, a)
    uu, vv, uv = _dot(u, u), _dot(v, v), _dot(u, v)
    uw, vw = _dot(u, w), _dot(v, w)
    den = uv * uv - uu * vv
    if den != 0:
        # t*u - r*v = w solved on the span of u, v (Cramer), then checked exactly
        tn = uv * vw - uw * vv
        rn = uu * vw - uv * uw
        if den < 0:
            tn, rn, den = -tn, -rn, -den
        if not (0 <= tn <= den and 0 <= rn <= den):
            return True
        return any(tn * ui - rn * vi != den * wi for ui, vi, wi in zip(u, v, w))
    # parallel supporting lines
    if uw * uw != uu * _dot(w, w):
        return True
    pc = uw
    pd = _dot(_sub(d, a), u)
    lo, hi = min(pc, pd), max(pc, pd)
    return hi < 0 or lo > uu


def disjoint_raw(a, b, c, d) -> bool:
    """Disjointness of closed segments ab and cd given as coordinate tuples (no validation)."""
    if len(a) == 2:
        return _disjoint_2d(a, b, c, d)
    return _disjoint_nd(a, b, c, d)


def segments_disjoint(s: Segment, t: Segment) -> bool:
    """True iff the closed segments share no point. Touching counts as meeting."""
    if s.dim != t.dim:
        raise DimensionError(f"dimension mismatch: {s.dim} vs {t.dim}")
    return disjoint_raw(s.a, s.b, t.a, t.b)


def segment_contains(s: Segment, p) -> bool:
    p = point(p)
    if len(p) != s.dim:
        raise DimensionError("point and segment dimensions differ")
    u = _sub(s.b, s.a)
    w = _sub(p, s.a)
    uw = _dot(u, w)
    uu = _dot(u, u)
    return uw * uw == uu * _dot(w, w) and 0 <= uw <= uu


def disjointness_matrix(segs: Sequence[Segment]) -> list[list[bool]]:
    ends = integerize([p for s in segs for p in (s.a, s.b)])
    n = len(segs)
    out = [[False] * n for _ in range(n)]
    for i in range(n):
        a, b = ends[2 * i], ends[2 * i + 1]
        for j in range(i + 1, n):
            out[i][j] = out[j][i] = disjoint_raw(a, b, ends[2 * j], ends[2 * j + 1])
    return out


# --- projective objects ------------------------------------------------------

@dataclass(frozen=True)
class HomPoint:
    """Point of P^3 in canonical integer form."""

    h: tuple

    def __post_init__(self):
        if len(self.h) != 4:
            raise DimensionError("homogeneous points of P^3 have 4 coordinates")
        object.__setattr__(self, "h", canonical(self.h))

    @classmethod
    def from_affine(cls, p) -> "HomPoint":
        p = point(p)
        if len(p) != 3:
            raise DimensionError("affine point must be in R^3")
        return cls((1,) + p)

    @property
    def is_ideal(self) -> bool:
        return self.h[0] == 0

    def to_affine(self) -> Point:
        if self.is_ideal:
            raise ValueError("point at infinity has no affine representative")
        h0 = self.h[0]
        return tuple(Fraction(c, h0) for c in self.h[1:])


@dataclass(frozen=True)
class HomPlane:
    """Plane ``c0*h0 + c1*h1 + c2*h2 + c3*h3 = 0`` of P^3, canonical."""

    c: tuple

    def __post_init__(self):
        if len(self.c) != 4:
            raise DimensionError("planes of P^3 have 4 coefficients")
        object.__setattr__(self, "c", canonical(self.c))

    def incident(self, x) -> bool:
        h = x.h if isinstance(x, HomPoint) else x
        return _dot(self.c, h) == 0

    @property
    def is_ideal(self) -> bool:
        return self.c[1] == self.c[2] == self.c[3] == 0

    def contains_affine(self, p) -> bool:
        return _dot(self.c, (1,) + tuple(p)) == 0


def plane_through(x, y, z) -> tuple:
    """Coefficients c with <c, w> = det[x; y; z; w]; all zero iff x, y, z are dependent."""
    rows = (x, y, z)
    out = []
    for k in range(4):
        cols = [j for j in range(4) if j != k]
        minor = _det3([[r[j] for j in cols] for r in rows])
        out.append(minor if (3 + k) % 2 == 0 else -minor)
    return tuple(out)


def _proportional(u, v) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(i + 1, len(u)))


@dataclass(frozen=True)
class ProjLine:
    """Line of P^3 in canonical Plücker coordinates."""

    p: tuple
    _points: tuple = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.p) != 6:
            raise DimensionError("Plücker coordinates have 6 entries")
        p = canonical(self.p)
        if p[0] * p[5] - p[1] * p[4] + p[2] * p[3] != 0:
            raise DegenerateError(f"{p} violates the Grassmann-Plücker relation")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_points", self._two_points())

    def matrix(self):
        m = [[0] * 4 for _ in range(4)]
        for (i, j), v in zip(PLUCKER_INDEX, self.p):
            m[i][j] = v
            m[j][i] = -v
        return m

    def _two_points(self):
        m = self.matrix()
        cols = [tuple(m[r][k] for r in range(4)) for k in range(4)]
        cols = [c for c in cols if any(c)]
        a = cols[0]
        for c in cols[1:]:
            if not _proportional(a, c):
                return (a, c)
        raise InvariantError("Plücker matrix of rank < 2")

    @property
    def points(self) -> tuple:
        """Two distinct homogeneous points (integer tuples) spanning the line."""
        return self._points

    def contains(self, x) -> bool:
        h = x.h if isinstance(x, HomPoint) else x
        a, b = self._points
        return not any(plane_through(a, b, h))

    def in_plane(self, plane: HomPlane) -> bool:
        a, b = self._points
        return _dot(plane.c, a) == 0 and _dot(plane.c, b) == 0


def plucker_from_points(x, y) -> ProjLine:
    """Line through two distinct homogeneous points."""
    x = x.h if isinstance(x, HomPoint) else tuple(rat(v) for v in x)
    y = y.h if isinstance(y, HomPoint) else tuple(rat(v) for v in y)
    p = tuple(x[i] * y[j] - x[j] * y[i] for i, j in PLUCKER_INDEX)
    if not any(p):
        raise DegenerateError("points are projectively equal")
    return ProjLine(p)


def side(L: ProjLine, M: ProjLine):
    """Plücker side form; zero iff the lines are coplanar (meet in P^3)."""
    p, q = L.p, M.p
    return (p[0] * q[5] - p[1] * q[4] + p[2] * q[3]
            + p[5] * q[0] - p[4] * q[1] + p[3] * q[2])


EQUAL = "equal"


def line_plane_meet(a, b, c):
    """Meet of the line through homogeneous points a, b with plane c; zero vector if contained."""
    ca, cb = _dot(c, a), _dot(c, b)
    return tuple(ai * cb - bi * ca for ai, bi in zip(a, b))


def proj_lines_meet(L: ProjLine, M: ProjLine):
    """Common point of two lines: ``None`` if skew, :data:`EQUAL` if identical."""
    if L.p == M.p:
        return EQUAL
    if side(L, M) != 0:
        return None
    ma, mb = M.points
    la, lb = L.points
    for k in range(4):
        e = tuple(int(i == k) for i in range(4))
        c = plane_through(ma, mb, e)
        if not any(c):
            continue
        q = line_plane_meet(la, lb, c)
        if any(q):
            return HomPoint(q)
    raise InvariantError("coplanar distinct lines without a meet point")


def span_structure(L: ProjLine, M: ProjLine) -> tuple[HomPoint, HomPlane]:
    """Meet point and common plane of two distinct meeting lines."""
    q = proj_lines_meet(L, M)
    if q is None:
        raise ValueError("lines are skew")
    if q is EQUAL:
        raise ValueError("lines are equal")
    la, lb = L.points
    for z in M.points:
        if not L.contains(z):
            return q, HomPlane(plane_through(la, lb, z))
    raise InvariantError("distinct lines share both spanning points")


# --- euclidean lines ---------------------------------------------------------

@dataclass(frozen=True)
class EuclLine:
    """Affine line of R^3 in canonical form.

    ``dir`` is a coprime integer vector with first nonzero entry positive and
    ``base`` is the unique point whose coordinate at that entry is zero, so two
    descriptions of one line compare equal.
    """

    base: Point
    dir: tuple
    plucker: ProjLine = field(default=None, init=False, compare=False, hash=False, repr=False)

    def __post_init__(self):
        base = point(self.base)
        if len(base) != 3 or len(self.dir) != 3:
            raise DimensionError("Euclidean lines are handled in R^3")
        d = canonical(self.dir)
        k = next(i for i, v in enumerate(d) if v)
        t = base[k] / d[k]
        base = tuple(bi - t * di for bi, di in zip(base, d))
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "dir", d)
        object.__setattr__(self, "plucker", plucker_from_points((1,) + base, (0,) + d))

    @classmethod
    def through(cls, a, b) -> "EuclLine":
        a, b = point(a), point(b)
        if a == b:
            raise DegenerateError("a line needs two distinct points")
        return cls(a, _sub(b, a))

    def contains(self, p) -> bool:
        w = _sub(point(p), self.base)
        return _proportional(w, self.dir)


def eucl_lines_relation(L: EuclLine, M: EuclLine):
    """Classify a pair of lines in R^3.

    Returns ``(kind, point)`` where kind is one of ``"equal"``, ``"intersecting"``,
    ``"parallel"``, ``"skew"`` and point is the affine meet for intersecting lines.
    """
    if L.plucker.p == M.plucker.p:
        return "equal", None
    if side(L.plucker, M.plucker) != 0:
        return "skew", None
    if L.dir == M.dir:
        return "parallel", None
    q = proj_lines_meet(L.plucker, M.plucker)
    if q.is_ideal:
        raise InvariantError("non-parallel coplanar lines meeting at infinity")
    return "intersecting", q.to_affine()


def supporting_line(s: Segment) -> EuclLine:
    if s.dim != 3:
        raise DimensionError("supporting_line expects a segment in R^3")
    return EuclLine(s.a, _sub(s.b, s.a))


def hom(p) -> tuple:
    """Affine point of R^3 as a homogeneous tuple (not canonicalized)."""
    return (Fraction(1),) + point(p)


# --- genericity transforms ---------------------------------------------------

def _is_vertical(s: Segment, eps) -> bool:
    return (s.b[0] - s.a[0]) + eps * (s.b[1] - s.a[1]) == 0


def shear2d(s: Segment, eps) -> Segment:
    eps = rat(eps)
    return Segment((s.a[0] + eps * s.a[1], s.a[1]), (s.b[0] + eps * s.b[1], s.b[1]))


def generic_shear_2d(segs: Sequence[Segment], rng: random.Random | None = None,
                     eps=None, check: bool = False, max_attempts: int = 1000):
    """Shear ``(x, y) -> (x + eps*y, y)`` so that no segment is vertical.

    ``eps`` is 0 when nothing is vertical, random rational otherwise (or the
    caller's value).  With ``check`` the pairwise disjointness matrix is
    recomputed and compared.
    """
    for s in segs:
        if s.dim != 2:
            raise DimensionError("generic_shear_2d expects planar segments")
    if eps is None:
        if not any(_is_vertical(s, 0) for s in segs):
            eps = Fraction(0)
        else:
            rng = rng or random.Random(0)
            for _ in range(max_attempts):
                cand = Fraction(rng.choice([-1, 1]) * rng.randint(1, 997), rng.randint(1, 997))
                if not any(_is_vertical(s, cand) for s in segs):
                    eps = cand
                    break
            else:
                raise SearchExhausted("no admissible shear found")
    eps = rat(eps)
    out = [shear2d(s, eps) for s in segs]
    if check and disjointness_matrix(out) != disjointness_matrix(segs):
        raise InvariantError("shear changed the disjointness pattern")
    return eps, out


def random_linear_map(rng: random.Random, rows: int, cols: int, spread: int = 9):
    return [[rng.randint(-spread, spread) for _ in range(cols)] for _ in range(rows)]


def apply_map(mat, p) -> Point:
    return tuple(sum(Fraction(m) * x for m, x in zip(row, p)) for row in mat)


def generic_project_3d(segs: Sequence[Segment], rng: random.Random | None = None,
                       max_attempts: int = 100, return_map: bool = False):
    """Project segments of R^d (d > 3) to R^3 without changing the disjointness graph.

    A random integer 3 x d map is drawn and accepted only if every pair keeps its
    disjointness status (checked exactly).  Already-3D input is returned as is.
    """
    if not segs:
        return ([], None) if return_map else []
    d = segs[0].dim
    if any(s.dim != d for s in segs):
        raise DimensionError("mixed dimensions")
    if d == 3:
        ident = [[int(i == j) for j in range(3)] for i in range(3)]
        return (list(segs), ident) if return_map else list(segs)
    if d < 3:
        raise DimensionError("generic_project_3d expects d >= 3")
    rng = rng or random.Random(0)
    target = disjointness_matrix(segs)
    for _ in range(max_attempts):
        mat = random_linear_map(rng, 3, d)
        ends = [(apply_map(mat, s.a), apply_map(mat, s.b)) for s in segs]
        if any(a == b for a, b in ends):
            continue
        out = [Segment(a, b) for a, b in ends]
        if disjointness_matrix(out) == target:
            return (out, mat) if return_map else out
    raise SearchExhausted(f"no faithful projection after {max_attempts} attempts")
