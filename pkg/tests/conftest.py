import os
import sys
from fractions import Fraction

import hypothesis
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from jumploci import Character, LaurentPoly, Scalar  # noqa: E402

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_ints = st.integers(-4, 4)
nonzero_rationals = st.builds(
    Fraction, st.integers(-7, 7).filter(bool), st.integers(1, 5)
)


@st.composite
def cyclotomic_scalars(draw, conductors=(1, 3, 4, 5, 6, 8, 12)):
    m = draw(st.sampled_from(conductors))
    coeffs = draw(st.lists(st.builds(Fraction, small_ints, st.integers(1, 3)), min_size=1, max_size=6))
    return Scalar.cyclotomic(m, coeffs)


@st.composite
def exact_characters(draw, n, cyclotomic=True):
    pool = [st.builds(Scalar.rational, nonzero_rationals)]
    if cyclotomic:
        pool.append(st.builds(Scalar.zeta, st.sampled_from([3, 4, 6]), st.integers(0, 5)))
    return Character([draw(st.one_of(pool)) for _ in range(n)])


@st.composite
def laurent_polys(draw, n, max_terms=4, exp_range=2):
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(-exp_range, exp_range)] * n),
            st.integers(-3, 3).filter(bool),
            max_size=max_terms,
        )
    )
    return LaurentPoly(n, terms)


# -- acceptance reporting ---------------------------------------------------

_criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    ok = call.excinfo is None
    prev = _criteria.get(number, (title, True))
    _criteria[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
