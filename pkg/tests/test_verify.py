import random

import pytest

from disjointness.certificate import Certificate, eval_bound
from disjointness.geometry import Segment
from disjointness.generators import gen_shift_pointed_lines
from disjointness.graph import build_graph
from disjointness.planar import color_planar_segments
from disjointness.sampling import random_planar_segments
from disjointness.verify import extract_ramsey_witness, is_triangle_free, verify_certificate


def test_eval_bound():
    assert eval_bound("k^4+k^3", 2) == 24
    assert eval_bound("(planes-1)*k+k^4", 3, planes=4) == 90
    with pytest.raises(ValueError):
        eval_bound("__import__('os')", 1)
    with pytest.raises(ValueError):
        eval_bound("k/2", 1)


def test_json_round_trip():
    segs = random_planar_segments(random.Random(2), 15)
    cert = color_planar_segments(segs, random.Random(2))
    back = Certificate.from_json(cert.to_json())
    assert back == cert
    assert verify_certificate(segs, back).ok


def _stacked():
    return [Segment((0, y), (3, y)) for y in range(3)]


def test_monochromatic_edge_detected():
    segs = _stacked()
    cert = color_planar_segments(segs)
    cert.colors = [0, 0, 1]
    cert.classes = cert.classes[:2]
    rep = verify_certificate(segs, cert)
    assert not rep.proper and not rep.ok


def test_bad_clique_detected():
    segs = _stacked() + [Segment((1, -1), (1, 5))]
    cert = color_planar_segments(segs)
    cert.clique = [0, 3]
    rep = verify_certificate(segs, cert)
    assert not rep.clique_ok


def test_bound_violation_detected():
    segs = _stacked()
    cert = color_planar_segments(segs)
    cert.clique = cert.clique[:1]
    assert not verify_certificate(segs, cert).bound_ok


def test_tampered_witness_detected():
    segs = [Segment((0, 0), (2, 2)), Segment((0, 2), (2, 0)), Segment((5, 0), (6, 0))]
    cert = color_planar_segments(segs)
    cert.classes[0] = {"heights": [9, 9, 9, 9]}
    assert not verify_certificate(segs, cert).witnesses_ok
    cert.classes[0] = {"nothing": 1}
    assert not verify_certificate(segs, cert).witnesses_ok


def test_wrong_length_colors():
    segs = _stacked()
    cert = color_planar_segments(segs)
    cert.colors = cert.colors[:2]
    rep = verify_certificate(segs, cert)
    assert not rep.complete and not rep.ok


def test_ramsey_examples():
    disjoint = [Segment((i, 0), (i, 1)) for i in range(32)]
    cert = color_planar_segments(disjoint, random.Random(0))
    w = extract_ramsey_witness(build_graph(disjoint), cert)
    assert w.kind == "clique" and len(w.members) == 32

    star = [Segment((-i - 1, -1), (i + 1, 1)) for i in range(32)]
    cert = color_planar_segments(star)
    w = extract_ramsey_witness(build_graph(star), cert)
    assert w.kind == "independent" and len(w.members) == 32

    segs = random_planar_segments(random.Random(100), 100)
    cert = color_planar_segments(segs, random.Random(1))
    w = extract_ramsey_witness(build_graph(segs), cert)
    assert len(w.members) >= 3 and w.inequality_holds
    assert w.n <= w.largest_class * w.clique_size ** 4


def test_ramsey_rejects_bad_clique():
    segs = _stacked() + [Segment((1, -1), (1, 5))]
    cert = color_planar_segments(segs)
    cert.clique = [0, 1, 2, 3]
    with pytest.raises(ValueError):
        extract_ramsey_witness(build_graph(segs), cert)


def test_triangle_free():
    assert is_triangle_free(build_graph(gen_shift_pointed_lines(4)))
    assert not is_triangle_free(build_graph(_stacked()))
    assert is_triangle_free(build_graph([]))
