import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import grid_lines, points, rationals, segments
from disjointness.errors import DegenerateError, DimensionError
from disjointness.geometry import (
    EQUAL,
    EuclLine,
    HomPlane,
    HomPoint,
    ProjLine,
    Segment,
    canonical,
    disjointness_matrix,
    eucl_lines_relation,
    generic_project_3d,
    generic_shear_2d,
    integerize,
    line_plane_meet,
    orient2d,
    plucker_from_points,
    proj_lines_meet,
    rat,
    segment_contains,
    segments_disjoint,
    shear2d,
    side,
    span_structure,
    supporting_line,
)
from reference import coplanar_points, sympy_meet

X_AXIS = plucker_from_points((1, 0, 0, 0), (1, 1, 0, 0))
Y_AXIS = plucker_from_points((1, 0, 0, 0), (1, 0, 1, 0))


def test_rat_refuses_floats():
    assert rat("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(TypeError):
        rat(True)


def test_canonical_rules():
    assert canonical((0, -2, 4, Fraction(6, 1))) == (0, 1, -2, -3)
    assert canonical((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    with pytest.raises(DegenerateError):
        canonical((0, 0))


@given(st.lists(rationals(), min_size=4, max_size=4).filter(any), rationals().filter(bool))
def test_canonical_idempotent_and_scale_invariant(v, lam):
    c = canonical(v)
    assert canonical(c) == c
    assert canonical([lam * x for x in v]) == c


def test_integerize_scales_uniformly():
    pts = [(Fraction(1, 2), 3), (Fraction(-2, 3), Fraction(5, 4))]
    assert integerize(pts) == [(6, 36), (-8, 15)]


@pytest.mark.parametrize("p,q,r,sign", [
    ((0, 0), (1, 0), (0, 1), 1),
    ((0, 0), (1, 1), (2, 2), 0),
    ((0, 0), (1, 1), (2, 0), -1),
])
def test_orient2d(p, q, r, sign):
    assert orient2d(p, q, r) == sign


def test_segment_validation():
    with pytest.raises(DegenerateError):
        Segment((1, 1), (1, 1))
    with pytest.raises(DimensionError):
        Segment((1, 1), (1, 1, 2))
    with pytest.raises(DimensionError):
        Segment((1,), (2,))


@pytest.mark.parametrize("s,t,expected", [
    (((0, 0), (1, 0)), ((0, 1), (1, 1)), True),
    (((0, 0), (1, 0)), ((1, 0), (2, 1)), False),
    (((0, 0, 0), (1, 1, 1)), ((1, 0, 0), (0, 1, 1)), False),
    (((0, 0), (2, 0)), ((1, 0), (3, 0)), False),
    (((0, 0), (1, 0)), ((2, 0), (3, 0)), True),
    (((0, 0, 0), (1, 0, 0)), ((0, 1, 0), (1, 1, 1)), True),
    (((0, 0, 0, 0), (2, 2, 2, 2)), ((2, 0, 0, 0), (0, 2, 2, 2)), False),
])
def test_segments_disjoint_examples(s, t, expected):
    assert segments_disjoint(Segment(*s), Segment(*t)) is expected


@given(segments(2, span=4, den=2), segments(2, span=4, den=2))
def test_planar_disjointness_matches_reference(s, t):
    assert segments_disjoint(s, t) == (not sympy_meet(s, t))


@given(segments(3, span=3, den=1), segments(3, span=3, den=1))
def test_spatial_disjointness_matches_reference(s, t):
    assert segments_disjoint(s, t) == (not sympy_meet(s, t))


@given(segments(3, span=3, den=1), points(3, span=3, den=1))
def test_coplanar_spatial_pairs_match_reference(s, p):
    # force coplanarity with the segment through p and a point on s
    mid = tuple((x + y) / 2 for x, y in zip(s.a, s.b))
    assume(p != mid)
    t = Segment(p, tuple(2 * m - x for m, x in zip(mid, p)))
    assert not segments_disjoint(s, t)
    assert sympy_meet(s, t)


@given(segments(2), segments(2))
def test_disjointness_symmetric_and_orientation_free(s, t):
    d = segments_disjoint(s, t)
    assert d == segments_disjoint(t, s) == segments_disjoint(s.reversed(), t)


def test_segment_contains():
    s = Segment((0, 0, 0), (2, 2, 2))
    assert segment_contains(s, (1, 1, 1))
    assert not segment_contains(s, (3, 3, 3))
    assert not segment_contains(s, (1, 1, 0))


def test_plucker_examples():
    assert X_AXIS.p == (1, 0, 0, 0, 0, 0)
    assert plucker_from_points((1, 2, 0, 0), (1, 5, 0, 0)).p == X_AXIS.p
    assert Y_AXIS.p == (0, 1, 0, 0, 0, 0)
    with pytest.raises(DegenerateError):
        ProjLine((1, 0, 0, 0, 0, 1))


@given(points(4, span=3, den=1), points(4, span=3, den=1))
def test_plucker_relation_and_incidence(x, y):
    assume(any(x) and any(y))
    assume(any(x[i] * y[j] != x[j] * y[i] for i in range(4) for j in range(4)))
    L = plucker_from_points(x, y)
    p = L.p
    assert p[0] * p[5] - p[1] * p[4] + p[2] * p[3] == 0
    assert L.contains(x) and L.contains(y)
    assert plucker_from_points(y, x).p == p


@given(st.lists(points(4, span=2, den=1), min_size=4, max_size=4))
def test_side_form_matches_determinant(pts):
    a, b, c, d = pts
    assume(any(a[i] * b[j] != a[j] * b[i] for i in range(4) for j in range(4)))
    assume(any(c[i] * d[j] != c[j] * d[i] for i in range(4) for j in range(4)))
    L, M = plucker_from_points(a, b), plucker_from_points(c, d)
    assert (side(L, M) == 0) == coplanar_points(a, b, c, d)


def test_proj_lines_meet_examples():
    assert proj_lines_meet(X_AXIS, Y_AXIS) == HomPoint((1, 0, 0, 0))
    # independently: det of (1,0,0,0),(1,1,0,0),(1,0,0,1),(1,0,1,1) is nonzero
    other = plucker_from_points((1, 0, 0, 1), (1, 0, 1, 1))
    assert not coplanar_points((1, 0, 0, 0), (1, 1, 0, 0), (1, 0, 0, 1), (1, 0, 1, 1))
    assert proj_lines_meet(X_AXIS, other) is None
    par1 = EuclLine((0, 0, 0), (1, 0, 0)).plucker
    par2 = EuclLine((0, 1, 0), (1, 0, 0)).plucker
    assert proj_lines_meet(par1, par2) == HomPoint((0, 1, 0, 0))
    assert proj_lines_meet(X_AXIS, X_AXIS) is EQUAL


@given(grid_lines(), grid_lines())
def test_meet_symmetric_and_incident(L, M):
    P, Q = L.plucker, M.plucker
    q1, q2 = proj_lines_meet(P, Q), proj_lines_meet(Q, P)
    if q1 is None or q1 is EQUAL:
        assert q1 is q2
        return
    assert q1 == q2 and P.contains(q1) and Q.contains(q1)
    q, pl = span_structure(P, Q)
    assert q == q1 and P.in_plane(pl) and Q.in_plane(pl) and pl.incident(q)


def test_span_structure_examples():
    q, pl = span_structure(X_AXIS, Y_AXIS)
    assert q == HomPoint((1, 0, 0, 0)) and pl == HomPlane((0, 0, 0, 1))
    q, pl = span_structure(EuclLine((0, 0, 0), (1, 0, 0)).plucker, EuclLine((0, 0, 1), (1, 0, 0)).plucker)
    assert q.is_ideal and pl == HomPlane((0, 0, 1, 0))
    diag = plucker_from_points((1, 0, 0, 0), (1, 1, 1, 0))
    q, pl = span_structure(X_AXIS, diag)
    assert q == HomPoint((1, 0, 0, 0)) and pl == HomPlane((0, 0, 0, 1))
    for h in ((1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0)):
        assert pl.incident(h)
    with pytest.raises(ValueError):
        span_structure(X_AXIS, plucker_from_points((1, 0, 0, 1), (1, 0, 1, 1)))


def test_line_plane_meet():
    q = line_plane_meet((1, 0, 0, -1), (1, 0, 0, 1), (0, 0, 0, 1))
    assert HomPoint(q) == HomPoint((1, 0, 0, 0))
    assert not any(line_plane_meet((1, 0, 0, 0), (1, 1, 0, 0), (0, 0, 0, 1)))


def test_eucl_lines_relation_examples():
    a, b = EuclLine((0, 0, 0), (1, 0, 0)), EuclLine((0, 1, 0), (1, 0, 0))
    assert eucl_lines_relation(a, b) == ("parallel", None)
    assert eucl_lines_relation(a, EuclLine((0, 0, 0), (0, 1, 0))) == ("intersecting", (0, 0, 0))
    assert eucl_lines_relation(a, EuclLine((0, 1, 0), (0, 0, 1)))[0] == "skew"
    assert eucl_lines_relation(a, EuclLine((5, 0, 0), (-3, 0, 0)))[0] == "equal"


@given(grid_lines(), grid_lines())
def test_parallel_iff_ideal_meet(L, M):
    kind, pt = eucl_lines_relation(L, M)
    q = proj_lines_meet(L.plucker, M.plucker)
    assert (kind == "parallel") == (q not in (None, EQUAL) and q.is_ideal)
    if kind == "intersecting":
        assert L.contains(pt) and M.contains(pt)


@pytest.mark.parametrize("s,base,d", [
    (((0, 0, 0), (2, 0, 0)), (0, 0, 0), (1, 0, 0)),
    (((5, 0, 0), (7, 0, 0)), (0, 0, 0), (1, 0, 0)),
    (((0, 0, 0), (1, 2, 3)), (0, 0, 0), (1, 2, 3)),
])
def test_supporting_line(s, base, d):
    L = supporting_line(Segment(*s))
    assert L.base == base and L.dir == d


def test_shear_examples():
    s = shear2d(Segment((0, 0), (0, 1)), Fraction(1, 2))
    assert s.b == (Fraction(1, 2), 1)
    segs = [Segment((1, 1), (2, 2)), Segment((3, 0), (4, 1))]
    eps, out = generic_shear_2d(segs)
    assert eps == 0 and out == segs
    segs = [Segment((0, 0), (0, 4)), Segment((1, 0), (3, 4)), Segment((-1, 1), (1, 1))]
    eps, out = generic_shear_2d(segs, rng=random.Random(3), check=True)
    assert eps not in (0, Fraction(-1, 2))
    assert all(s.a[0] != s.b[0] for s in out)


@given(st.lists(segments(2, span=4, den=1), min_size=1, max_size=7), st.integers(0, 10 ** 6))
def test_shear_preserves_disjointness(segs, seed):
    _, out = generic_shear_2d(segs, rng=random.Random(seed), eps=None)
    assert disjointness_matrix(out) == disjointness_matrix(segs)


def test_project_3d():
    same = [Segment((0, 0, 0), (1, 1, 1))]
    assert generic_project_3d(same) == same
    pair = [Segment((0, 0, 0, 0), (1, 0, 0, 0)), Segment((0, 1, 0, 0), (0, 1, 1, 1))]
    out = generic_project_3d(pair, rng=random.Random(1))
    assert segments_disjoint(*out)
    cross = [Segment((0, 0, 0, 0), (2, 2, 2, 2)), Segment((2, 0, 0, 0), (0, 2, 2, 2))]
    assert not segments_disjoint(*generic_project_3d(cross, rng=random.Random(1)))
    with pytest.raises(DimensionError):
        generic_project_3d([Segment((0, 0), (1, 1))])


@given(st.lists(segments(4, span=3, den=1), min_size=2, max_size=6), st.integers(0, 1000))
def test_projection_preserves_disjointness(segs, seed):
    out, mat = generic_project_3d(segs, rng=random.Random(seed), return_map=True)
    assert len(mat) == 3 and len(mat[0]) == 4
    assert disjointness_matrix(out) == disjointness_matrix(segs)
