import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import exact_characters, laurent_polys
from jumploci.chain import LaurentMatrix
from jumploci.construction import SpaceSpec, alexander_presentation
from jumploci.errors import UnsupportedDegree, UnsupportedRepresentation
from jumploci.groups import build_group
from jumploci.laurent import LaurentPoly
from jumploci.loci import ps_check, sigma_dim, sigma_member, v_support_member, verify_group, verify_main
from jumploci.scalars import Character, Scalar


def P(text, n):
    return LaurentPoly.parse(text, n)


def C(*coords):
    return Character(list(coords))


S1 = SpaceSpec(1, 2, (P("x1 - 2", 1),))
S2 = SpaceSpec(2, 2, (P("x1 - 1", 2),))


def test_sigma_dim_examples():
    assert sigma_dim(S1, C(2), 2) == 1
    assert sigma_dim(S1, C(3), 0) == 0
    assert sigma_dim(S1, C(1), 0) == 1
    G = build_group(2, [P("x1 - 2", 2)])
    assert sigma_dim(G, C(2, 5), 1) == 1
    assert sigma_dim(G, C(2, 5), 0) == 0
    assert sigma_dim(G, C(1, 1), 0) == 1
    with pytest.raises(UnsupportedDegree):
        sigma_dim(G, C(2, 5), 2)
    with pytest.raises(UnsupportedDegree):
        sigma_dim(S1, C(2), 7)


def test_sigma_member_examples():
    assert sigma_member(S2, C(1, 5), 2, 1)
    assert sigma_member(S2, C(1, 1), 2, 2)
    assert not sigma_member(S2, C(2, 5), 2, 1)
    with pytest.raises(ValueError):
        sigma_member(S2, C(1, 1), 2, 0)


@given(exact_characters(2), st.integers(0, 3), st.integers(1, 3))
def test_membership_monotone_in_r(rho, i, r):
    if sigma_member(S2, rho, i, r + 1):
        assert sigma_member(S2, rho, i, r)


def test_v_support_examples():
    A = alexander_presentation(S1)
    assert v_support_member(A, C(2))
    assert not v_support_member(A, C(3))
    assert v_support_member(LaurentMatrix(1, 1, 0), C(5))
    B = LaurentMatrix(2, 1, 2, [[P("x1 - 1", 2), P("x2 - 1", 2)]])
    assert v_support_member(B, C(1, 1))
    assert not v_support_member(B, C(1, 2))


@st.composite
def specs_with_characters(draw):
    n = draw(st.integers(1, 3))
    k = draw(st.integers(2, 3))
    polys = tuple(draw(st.lists(laurent_polys(n, max_terms=3, exp_range=1), max_size=2)))
    return SpaceSpec(n, k, polys), draw(exact_characters(n))


@given(specs_with_characters())
def test_top_degree_matches_alexander_support(pair):
    spec, rho = pair
    if rho.is_trivial():
        return
    assert sigma_member(spec, rho, spec.k) == v_support_member(alexander_presentation(spec), rho)


def test_ps_check_examples():
    assert ps_check(S1, C(2), 2)
    assert ps_check(S1, C(3), 2)
    for l in range(3):
        assert ps_check(S1, C(1), l)
    with pytest.raises(UnsupportedDegree):
        ps_check(S1, C(2), 3)


def test_verify_main_examples():
    rep = verify_main(S1, [C(1), C(2), C(3), C(-1)])
    assert rep.passed
    assert rep.members(2) == [C(2)]
    rep = verify_main(S2, [C(1, 1), C(1, 5), C(2, 5)])
    assert rep.passed
    assert set(rep.members(2)) == {C(1, 5), C(1, 1)}


def test_verify_main_free_sphere():
    spec = SpaceSpec(2, 3, ())
    chars = [C(a, b) for a in (2, -3, Scalar.zeta(3)) for b in (5, Scalar.zeta(4), -1)][:9] + [C(7, 7)]
    rep = verify_main(spec, chars)
    assert rep.passed
    assert len(rep.members(3)) == 10


def test_verify_rejects_float():
    with pytest.raises(UnsupportedRepresentation):
        verify_main(S1, [Character([Scalar.from_complex(2.0)])])


def test_verify_group_examples():
    rep = verify_group(2, [P("x1 - 2", 2)], [C(1, 1), C(2, 5), C(2, 1), C(3, 1), C(1, 7)])
    assert rep.passed
    assert set(rep.members(1)) == {C(1, 1), C(2, 5), C(2, 1)}
    rep = verify_group(1, [], [C(1), C(5)])
    assert rep.passed and rep.members(1) == [C(1)]
    rep = verify_group(2, [P("x1 - 1", 2), P("x2 - 1", 2)], [C(1, 1), C(1, 2), C(2, 1)])
    assert rep.passed and rep.members(1) == [C(1, 1)]


def test_report_json_is_sorted_and_stable():
    chars = [C(3), C(2), C(1)]
    a = verify_main(S1, chars).to_json()
    b = verify_main(S1, chars[::-1]).to_json()
    assert a == b
    assert a["verdict"] == "pass" and a["summary"]["failed"] == 0


def test_parallel_matches_serial():
    chars = [C(q) for q in (1, 2, 3, -1, 5, Scalar.zeta(3))]
    assert verify_main(S1, chars, jobs=2).to_json() == verify_main(S1, chars).to_json()


@given(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), exact_characters(2))
def test_unit_multiples_define_the_same_locus(J, rho):
    f = P("x1*x2 - 2", 2)
    spec = SpaceSpec(2, 2, (f,))
    shifted = SpaceSpec(2, 2, (LaurentPoly.monomial(J, -1) * f,))
    assert verify_main(spec, [rho]).records[0].observed == verify_main(shifted, [rho]).records[0].observed
