import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import grid_lines, segment_lists
from disjointness.errors import DegenerateError
from disjointness.geometry import EuclLine, Segment, plucker_from_points, segments_disjoint
from disjointness.graph import Polyline, PuncturedLine, TwoSegments, build_graph, kind_of
from reference import sympy_meet


def test_parallel_lines_euclidean_vs_projective():
    lines = [EuclLine((0, y, 0), (1, 0, 0)) for y in range(3)]
    assert build_graph(lines).adj.sum() == 6
    assert build_graph(lines, space="projective").adj.sum() == 0


def test_segment_pattern():
    segs = [Segment((0, 0), (2, 2)), Segment((0, 2), (2, 0)), Segment((10, 10), (11, 10))]
    assert build_graph(segs).edges() == [(0, 2), (1, 2)]
    inter = build_graph(segs, mode="intersection")
    assert inter.edges() == [(0, 1)]


def test_duplicates_never_adjacent():
    s = Segment((0, 0), (1, 0))
    g = build_graph([s, Segment((1, 0), (0, 0)), Segment((0, 1), (1, 1))])
    assert not g.adj[0, 1] and g.adj[0, 2] and g.adj[1, 2]


def test_kind_checks():
    with pytest.raises(TypeError):
        build_graph([Segment((0, 0), (1, 0)), EuclLine((0, 0, 0), (1, 0, 0))])
    with pytest.raises(ValueError):
        build_graph([Segment((0, 0), (1, 0))], space="projective")
    with pytest.raises(ValueError):
        build_graph([plucker_from_points((1, 0, 0, 0), (1, 1, 0, 0))])
    with pytest.raises(TypeError):
        kind_of(3)
    assert build_graph([]).n == 0


def test_punctured_lines():
    with pytest.raises(DegenerateError):
        PuncturedLine(1, 0, (1, 2))
    a = PuncturedLine(1, 0, (0, 0))
    b = PuncturedLine(-1, 0, (1, -1))
    c = PuncturedLine(1, 0, (1, 1))
    d = PuncturedLine(1, 1, (0, 1))
    g = build_graph([a, b, c, d])
    assert g.adj[0, 1]          # the only common point is a's hole
    assert not g.adj[0, 2]      # same carrier line
    assert g.adj[0, 3]          # parallel carriers
    assert not g.adj[1, 2]


def test_polyline_validation():
    p = Polyline.from_points([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert p.vertices[-1] == (0, 1)
    with pytest.raises(DegenerateError):
        Polyline.from_points([(0, 0), (2, 0), (1, 0)])
    with pytest.raises(DegenerateError):
        Polyline.from_points([(0, 0), (2, 0), (2, 2), (1, -1)])
    with pytest.raises(ValueError):
        Polyline.from_points([(0, 0), (1, 0)])


def test_two_segments_validation():
    ts = TwoSegments(Segment((0, 0), (1, 1)), Segment((2, 2), (3, 3)))
    assert len(ts.segments) == 2
    with pytest.raises(DegenerateError):
        TwoSegments(Segment((0, 0), (1, 1)), Segment((2, 2), (3, 4)))
    with pytest.raises(DegenerateError):
        TwoSegments(Segment((0, 0), (2, 2)), Segment((1, 1), (3, 3)))


def test_pieces_objects_meet_if_any_piece_meets():
    a = TwoSegments(Segment((0, 0), (1, 0)), Segment((3, 0), (4, 0)))
    b = TwoSegments(Segment((Fraction(7, 2), -1), (Fraction(7, 2), -2)),
                    Segment((Fraction(7, 2), 1), (Fraction(7, 2), 2)))
    c = TwoSegments(Segment((Fraction(7, 2), -1), (Fraction(7, 2), 0)),
                    Segment((Fraction(7, 2), 1), (Fraction(7, 2), 2)))
    g = build_graph([a, b, c])
    assert g.adj[0, 1] and not g.adj[0, 2]


@given(segment_lists(2, max_size=6, span=3, den=1))
def test_graph_matches_reference(segs):
    g = build_graph(segs)
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            assert g.adj[i, j] == (not sympy_meet(segs[i], segs[j]))


@given(segment_lists(3, max_size=7), st.randoms(use_true_random=False))
def test_build_graph_permutation_equivariant(segs, rnd):
    perm = list(range(len(segs)))
    rnd.shuffle(perm)
    g = build_graph(segs)
    h = build_graph([segs[i] for i in perm])
    assert np.array_equal(h.adj, g.adj[np.ix_(perm, perm)])


@given(st.lists(grid_lines(), min_size=2, max_size=8))
def test_euclidean_and_projective_differ_only_on_parallels(lines):
    e = build_graph(lines).adj
    p = build_graph(lines, space="projective").adj
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            parallel = lines[i].dir == lines[j].dir and lines[i].base != lines[j].base
            assert (e[i, j] != p[i, j]) == parallel


def test_induced_subgraph():
    rng = random.Random(4)
    segs = [Segment((rng.randint(0, 9), rng.randint(0, 9)), (rng.randint(10, 19), rng.randint(0, 9)))
            for _ in range(8)]
    g = build_graph(segs)
    sub = g.induced([1, 3, 5])
    assert sub.adj[0, 1] == segments_disjoint(segs[1], segs[3])
    assert sub.n == 3 and sub.kind == "segment"
