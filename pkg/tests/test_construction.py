from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import exact_characters
from jumploci.chain import homology_dims, specialize, validate
from jumploci.construction import SpaceSpec, alexander_presentation, build_space, koszul, trivial_cohomology
from jumploci.laurent import LaurentPoly
from jumploci.scalars import Character


def P(text, n):
    return LaurentPoly.parse(text, n)


def strs(mat):
    return [[str(f) for f in r] for r in mat.rows]


def test_koszul_one():
    assert strs(koszul(1).d(1)) == [["x1 - 1"]]


def test_koszul_two():
    K = koszul(2)
    assert K.d(1).rows == ((P("x1 - 1", 2), P("x2 - 1", 2)),)
    # column of e_12 is (-(x2 - 1), x1 - 1)
    assert [r[0] for r in K.d(2).rows] == [-P("x2 - 1", 2), P("x1 - 1", 2)]


@pytest.mark.parametrize("n", range(1, 7))
def test_koszul_counts_and_validity(n):
    K = koszul(n)
    assert K.counts == tuple(comb(n, i) for i in range(n + 1))
    assert validate(K) is None


@given(st.integers(1, 3), st.data())
def test_koszul_exact_off_trivial(n, data):
    rho = data.draw(exact_characters(n))
    dims = homology_dims(specialize(koszul(n), rho))
    if rho.is_trivial():
        assert dims == tuple(comb(n, i) for i in range(n + 1))
    else:
        assert dims == (0,) * (n + 1)


def test_koszul_rejects_zero():
    with pytest.raises(ValueError):
        koszul(0)


def test_build_space_n1_k2():
    C = build_space(SpaceSpec(1, 2, (P("x1 - 2", 1),)))
    assert C.counts == (1, 1, 1, 1)
    assert [strs(d) for d in C.diffs] == [[["x1 - 1"]], [["0"]], [["x1 - 2"]]]


def test_build_space_n2_k2():
    C = build_space(SpaceSpec(2, 2, (P("x1 - 1", 2),)))
    assert C.counts == (1, 2, 2, 1)
    zero = LaurentPoly(2)
    assert C.d(2).rows == ((-P("x2 - 1", 2), zero), (P("x1 - 1", 2), zero))
    assert C.d(3).rows == ((zero,), (P("x1 - 1", 2),))


def test_build_space_without_cells():
    C = build_space(SpaceSpec(1, 3, ()))
    assert C.counts == (1, 1, 0, 1)
    assert C.top_degree == 3


def test_build_space_cells_below_torus_top():
    # k + 1 < n: Koszul generators and the cell share degree 3
    C = build_space(SpaceSpec(4, 2, (P("x1 - 2", 4), P("x3 + x4", 4))))
    assert C.counts == (1, 4, 7, 6, 1)
    assert validate(C) is None


def test_spec_validation():
    with pytest.raises(ValueError):
        SpaceSpec(1, 1, ())
    with pytest.raises(ValueError):
        SpaceSpec(2, 2, (P("x1", 1),))


def test_alexander_presentation():
    A = alexander_presentation(SpaceSpec(1, 2, (P("x1 - 2", 1),)))
    assert A.shape == (1, 1) and A[0, 0] == P("x1 - 2", 1)
    assert alexander_presentation(SpaceSpec(2, 2, ())).shape == (1, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_trivial_cohomology_dichotomy(n, k):
    spec = SpaceSpec(n, k, (P("x1 - 2", n),))
    h = trivial_cohomology(spec)
    assert (h[k] > 0) == (k <= n)


def test_trivial_cohomology_when_trivial_on_locus():
    # f(1) = 0 keeps the sphere class at the trivial character even for k > n
    assert trivial_cohomology(SpaceSpec(1, 2, (P("x1 - 1", 1),)))[2] == 1
