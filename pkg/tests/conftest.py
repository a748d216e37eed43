import os
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def rationals(span=6, den=3):
    return st.builds(Fraction, st.integers(-span * den, span * den), st.integers(1, den))


def points(dim, span=6, den=3):
    return st.tuples(*[rationals(span, den)] * dim)


@st.composite
def segments(draw, dim=2, span=6, den=3):
    from disjointness.geometry import Segment
    a = draw(points(dim, span, den))
    b = draw(points(dim, span, den).filter(lambda p: p != a))
    return Segment(a, b)


@st.composite
def segment_lists(draw, dim=2, min_size=1, max_size=8, span=6, den=2):
    return draw(st.lists(segments(dim, span, den), min_size=min_size, max_size=max_size))


@st.composite
def grid_lines(draw, grid=2):
    from disjointness.geometry import EuclLine
    coord = st.integers(-grid, grid)
    a = draw(st.tuples(coord, coord, coord))
    b = draw(st.tuples(coord, coord, coord).filter(lambda p: p != a))
    return EuclLine.through(a, b)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
