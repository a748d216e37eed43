import random
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from conftest import segment_lists, segments
from disjointness.errors import DimensionError
from disjointness.geometry import Segment, segments_disjoint
from disjointness.graph import build_graph
from disjointness.oracles import exact_chromatic, exact_clique
from disjointness.planar import ORDERS, OrderId, color_planar_segments, mirsky_decompose, order_compare
from disjointness.sampling import random_planar_segments
from disjointness.verify import verify_certificate
from reference import adjacency, brute_chromatic, brute_clique

NB, NA, SB, SA = OrderId.NEST_BELOW, OrderId.NEST_ABOVE, OrderId.STAG_BELOW, OrderId.STAG_ABOVE


@pytest.mark.parametrize("s,t,expected", [
    (((0, 0), (3, 0)), ((1, 1), (2, 1)), {(NB, 1)}),
    (((0, 0), (2, 0)), ((1, 1), (3, 1)), {(SB, 1)}),
    (((0, 0), (1, 0)), ((2, 5), (3, 5)), {(SB, 1), (SA, 1)}),
    (((0, 0), (3, 0)), ((1, -1), (2, -1)), {(NA, 1)}),
    (((0, 0), (2, 2)), ((0, 2), (2, 0)), set()),
])
def test_order_compare_examples(s, t, expected):
    assert order_compare(Segment(*s), Segment(*t)) == expected
    flipped = {(o, -d) for o, d in expected}
    assert order_compare(Segment(*t), Segment(*s)) == flipped


def test_order_compare_rejects_vertical_and_spatial():
    with pytest.raises(ValueError):
        order_compare(Segment((0, 0), (0, 1)), Segment((1, 0), (2, 0)))
    with pytest.raises(DimensionError):
        order_compare(Segment((0, 0, 0), (1, 0, 0)), Segment((0, 1, 0), (1, 1, 0)))


def _nonvertical(s):
    return s.a[0] != s.b[0]


planar = segments(2, span=4, den=2).filter(_nonvertical)


def _less(s, t, o):
    return (o, 1) in order_compare(s, t)


@given(planar, planar)
def test_comparability_is_disjointness(s, t):
    rel = order_compare(s, t)
    assert bool(rel) == segments_disjoint(s, t)
    for o in ORDERS:
        assert not ((o, 1) in rel and (o, -1) in rel)


@given(planar)
def test_irreflexive(s):
    assert not order_compare(s, s)


@given(planar, planar, planar)
def test_transitive(s, t, u):
    for a, b, c in permutations((s, t, u)):
        for o in ORDERS:
            if _less(a, b, o) and _less(b, c, o):
                assert _less(a, c, o)


def test_mirsky_examples():
    stacked = [Segment((0, y), (4, y)) for y in range(3)]
    heights, chain = mirsky_decompose(stacked, NB)
    assert heights == [1, 2, 3] and chain == [0, 1, 2]
    star = [Segment((-i - 1, -1), (i + 1, 1)) for i in range(5)]
    assert mirsky_decompose(star, NB)[0] == [1] * 5
    stairs = [Segment((i, i), (i + 2, i)) for i in range(0, 8, 2)]
    # frozen: each step starts where the previous one ends, one unit higher
    assert all(_less(stairs[i], stairs[i + 1], SB) for i in range(3))
    heights, chain = mirsky_decompose(stairs, SB)
    assert heights == [1, 2, 3, 4] and chain == [0, 1, 2, 3]


def test_color_examples():
    stacked = [Segment((0, y), (4, y)) for y in range(3)]
    cert = color_planar_segments(stacked)
    g = build_graph(stacked)
    assert cert.num_colors == 3 and len(cert.clique) == 3
    assert exact_chromatic(g)[0] == exact_clique(g)[0] == 3
    star = [Segment((-i - 1, -1), (i + 1, 1)) for i in range(6)]
    cert = color_planar_segments(star)
    assert cert.num_colors == 1 and len(cert.clique) == 1
    empty = color_planar_segments([])
    assert empty.colors == [] and empty.clique == []


def test_vertical_segments_are_sheared():
    segs = [Segment((0, 0), (0, 3)), Segment((1, 0), (1, 3)), Segment((2, 0), (5, 1))]
    cert = color_planar_segments(segs, random.Random(5))
    assert cert.meta["shear"] != "0"
    assert verify_certificate(segs, cert).ok


@given(segment_lists(2, min_size=1, max_size=9, span=4), st.integers(0, 100))
def test_certificate_against_brute_force(segs, seed):
    cert = color_planar_segments(segs, random.Random(seed))
    rep = verify_certificate(segs, cert)
    assert rep.ok, rep.errors
    adj = adjacency(build_graph(segs))
    assert brute_chromatic(adj) <= cert.num_colors
    assert brute_clique(adj) >= len(cert.clique)


def test_random_ten_segments_against_oracle():
    segs = random_planar_segments(random.Random(10), 10)
    cert = color_planar_segments(segs, random.Random(0))
    g = build_graph(segs)
    assert exact_chromatic(g)[0] <= cert.num_colors <= len(cert.clique) ** 4
    assert exact_clique(g)[0] >= len(cert.clique)
