import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, oracle_member, points, polys
from reesalg.ideals import (
    GroebnerLimitExceeded,
    Ideal,
    ZeroIdealError,
    contains_unit,
    diff_ideal,
    extract_monomial_part,
    groebner_basis,
    groebner_limits,
    ideal_membership,
    ideal_order_at,
    ideal_power,
    ideal_product,
    ideal_sum,
    ideals_equal,
    variety_is_empty,
)
from reesalg.polyalg import INF, Poly


def I(*gens):
    return Ideal(tuple(P(g) for g in gens), 2)


def test_sum_product_power():
    assert ideal_sum(I("x"), I("y")).generators == I("x", "y").generators
    assert ideal_product(I("x"), I("y")).generators == (P("x*y"),)
    assert set(ideal_power(I("x", "y"), 2).generators) == {P("x^2"), P("x*y"), P("y^2")}


def test_ideal_order_at():
    assert ideal_order_at(I("x^2+y^3", "x*y"), (0, 0)) == 2
    assert ideal_order_at(Ideal((), 2), (0, 0)) == INF
    # (0, -1) is not on the curve: the order there is 0
    assert ideal_order_at(I("x^2+y^3"), (0, -1)) == 0


def test_diff_ideal():
    assert set(diff_ideal(I("x^2"), 1).generators) == {P("x^2"), P("2*x")}
    J = I("x^2+y^3", "x*y")
    assert diff_ideal(J, 0).generators == J.generators
    assert contains_unit(diff_ideal(I("x^2+y^3"), 2))


def test_extract_monomial_part():
    exps, cof = extract_monomial_part(I("x^2*y^3 + x^3*y^3"), (0, 1))
    assert exps == (2, 3) and cof.generators == (P("1 + x"),)
    exps, cof = extract_monomial_part(I("x+y"), (0,))
    assert exps == (0,) and cof.generators == (P("x+y"),)
    exps, cof = extract_monomial_part(I("x^2"), (0,))
    assert exps == (2,) and cof.generators == (P("1"),)
    with pytest.raises(ZeroIdealError):
        extract_monomial_part(Ideal((), 2), (0,))


def test_membership_examples():
    assert ideal_membership(P("x^2*y"), I("x^2"))
    assert not ideal_membership(P("x"), I("x^2"))
    assert ideal_membership(P("y"), I("x^2+y", "x^2"))


def test_limit_is_explicit():
    J = I("x^5 - y^4 + x*y", "x^3*y^2 - x - y^3")
    with groebner_limits(max_reductions=1):
        with pytest.raises(GroebnerLimitExceeded):
            groebner_basis(Ideal(J.generators + (P("x^4*y + 7"),), 2))


def test_variety_is_empty_with_units():
    assert not variety_is_empty(I("x*y - 1"))
    assert variety_is_empty(I("x*y - 1"), units=(P("1 - x*y"),))
    assert variety_is_empty(I("x"), units=(P("x"),))
    assert not variety_is_empty(I("x"), units=(P("y - 1"),))
    assert variety_is_empty(I("x"), units=(Poly.zero(2),))


@settings(max_examples=40, deadline=None)
@given(st.lists(polys(d=2, max_degree=3, nonzero=True), min_size=1, max_size=3), polys(d=2, max_degree=4))
def test_membership_matches_sympy(gens, f):
    J = Ideal(tuple(gens), 2)
    assert ideal_membership(f, J) == oracle_member(f, gens, 2)


@settings(max_examples=40, deadline=None)
@given(st.lists(polys(d=2, max_degree=3, nonzero=True), min_size=2, max_size=3), polys(d=2, max_degree=4))
def test_membership_representation_independent(gens, f):
    # add a multiple of the first generator to the last
    J = Ideal(tuple(gens), 2)
    g = list(gens)
    g[-1] = g[-1] + P("x - 2*y") * g[0]
    if g[-1].is_zero():
        return
    J2 = Ideal(tuple(g), 2)
    assert ideal_membership(f, J) == ideal_membership(f, J2)


@settings(max_examples=40)
@given(st.lists(polys(d=2, nonzero=True), min_size=1, max_size=2), st.lists(polys(d=2, nonzero=True), min_size=1, max_size=2), points(d=2))
def test_order_of_sum_and_product(a, b, p):
    A, B = Ideal(tuple(a), 2), Ideal(tuple(b), 2)
    assert ideal_order_at(ideal_sum(A, B), p) == min(ideal_order_at(A, p), ideal_order_at(B, p))
    assert ideal_order_at(ideal_product(A, B), p) == ideal_order_at(A, p) + ideal_order_at(B, p)


@settings(max_examples=25, deadline=None)
@given(polys(d=2, max_degree=4, nonzero=True), st.integers(0, 2), st.integers(0, 2))
def test_diff_ideal_composes(f, r, s):
    A = diff_ideal(diff_ideal(Ideal((f,), 2), r), s)
    B = diff_ideal(Ideal((f,), 2), r + s)
    assert ideals_equal(A, B)


@given(st.lists(polys(d=2, nonzero=True), min_size=1, max_size=3))
def test_extract_roundtrip(gens):
    J = Ideal(tuple(gens), 2)
    exps, cof = extract_monomial_part(J, (0, 1))
    mono = Poly.monomial(exps)
    assert set(mono * g for g in cof.generators) == set(J.generators)
