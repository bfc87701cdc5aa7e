import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from conftest import laurent_polys
from jumploci.laurent import LaurentPoly
from jumploci.samplers import (
    auto_characters,
    dedupe,
    off_locus_points,
    on_locus_points,
    rational_roots,
    torsion_probes,
    univariate_roots,
)
from jumploci.scalars import Character, Scalar


def P(text, n=1):
    return LaurentPoly.parse(text, n)


def test_rational_roots():
    assert rational_roots([-2, 1]) == [2]
    assert rational_roots([-1, 0, 4]) == [Fraction(-1, 2), Fraction(1, 2)]
    assert rational_roots([1, 0, 1]) == []


def test_univariate_roots_include_cyclotomic():
    roots = univariate_roots(P("x1^3 - 1"))
    assert set(roots) == {Scalar.rational(1), Scalar.zeta(3), Scalar.zeta(3, 2)}
    assert univariate_roots(P("1 - 2*x1^-1")) == [Scalar.rational(2)]
    assert univariate_roots(P("3")) == []


@given(laurent_polys(1, max_terms=4, exp_range=3))
def test_univariate_roots_are_roots(f):
    if f.is_zero():
        return
    for z in univariate_roots(f):
        assert f(Character([z])).is_zero()


@given(st.integers(1, 3), st.lists(laurent_polys(3, max_terms=3, exp_range=1), max_size=2), st.integers(0, 50))
def test_on_and_off_locus_points(n, raw, seed):
    polys = [LaurentPoly(n, {e[:n]: c for e, c in f.items()}) for f in raw]
    rng = random.Random(seed)
    for rho in on_locus_points(n, polys, rng):
        assert all(f(rho).is_zero() for f in polys)
    for rho in off_locus_points(n, polys, 5, rng):
        assert not all(f(rho).is_zero() for f in polys)


def test_on_locus_linear_solve():
    f = P("x1*x2 - 2", 2)
    pts = on_locus_points(2, [f], random.Random(1))
    assert pts and all(f(p).is_zero() for p in pts)


def test_torsion_probes():
    probes = torsion_probes(2)
    assert len(probes) == 6
    assert all(not p.is_trivial() for p in probes)


def test_auto_characters_deterministic_and_sorted():
    polys = [P("x1 - 2")]
    a = auto_characters(1, polys, seed=3)
    assert a == auto_characters(1, polys, seed=3)
    assert Character.trivial(1) in a and Character([2]) in a
    assert a == dedupe(a[::-1])
