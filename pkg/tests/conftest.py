"""Shared test helpers and a sympy oracle."""

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from reesalg.polyalg import Poly, parse_poly
from reesalg.rees import ReesAlgebra

XY = ("x", "y")
XYZ = ("x", "y", "z")


def P(text, names=XY):
    return parse_poly(text, names)


def alg(spec, names=XY):
    """ReesAlgebra from [("x^2+y^3", 2), ...]."""
    return ReesAlgebra(tuple((P(f, names), n) for f, n in spec), len(names))


SUITE = {
    "cusp1": [("x^2+y^3", 1)],
    "cusp": [("x^2+y^3", 2)],
    "xy": [("x*y", 1)],
    "node": [("x^2-y^2", 1)],
    "whitney": [("x^2-y^2*z", 2)],
    "x3y5": [("x^3+y^5", 2)],
}


def suite_algebra(name):
    return alg(SUITE[name], XYZ if name == "whitney" else XY)


# ---------------------------------------------------------------------------
# sympy oracle


def syms(d):
    return sympy.symbols(f"s0:{d}")


def to_sympy(f: Poly):
    xs = syms(f.dim)
    expr = sympy.Integer(0)
    for m, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for x, e in zip(xs, m):
            term *= x ** e
        expr += term
    return expr


def from_sympy(expr, d) -> Poly:
    xs = syms(d)
    sp = sympy.Poly(sympy.expand(expr), *xs)
    return Poly({m: Fraction(int(c.p), int(c.q)) for m, c in sp.terms()}, d)


def oracle_order_at(f: Poly, p) -> float:
    """Lowest total degree after translating p to the origin, by sympy."""
    if f.is_zero():
        return float("inf")
    xs = syms(f.dim)
    shifted = sympy.expand(to_sympy(f).subs({x: x + sympy.Rational(c.numerator, c.denominator) for x, c in zip(xs, map(Fraction, p))}, simultaneous=True))
    return min(sum(m) for m in sympy.Poly(shifted, *xs).monoms())


def oracle_member(f: Poly, gens, d) -> bool:
    xs = syms(d)
    G = sympy.groebner([to_sympy(g) for g in gens], *xs, order="grlex", domain="QQ")
    return G.contains(to_sympy(f))


# ---------------------------------------------------------------------------
# hypothesis strategies

coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=2)


@st.composite
def polys(draw, d=2, max_degree=3, max_terms=4, nonzero=False):
    n = draw(st.integers(min_value=1 if nonzero else 0, max_value=max_terms))
    terms = {}
    for _ in range(n):
        m = tuple(draw(st.integers(0, max_degree)) for _ in range(d))
        if sum(m) > max_degree:
            continue
        terms[m] = draw(coeffs)
    f = Poly(terms, d)
    if nonzero and f.is_zero():
        f = Poly({tuple(draw(st.integers(0, 1)) for _ in range(d)): Fraction(1)}, d)
    return f


@st.composite
def points(draw, d=2):
    return tuple(draw(st.fractions(min_value=-2, max_value=2, max_denominator=3)) for _ in range(d))


@st.composite
def algebras(draw, d=2, max_gens=3, max_degree=4, max_weight=4):
    k = draw(st.integers(1, max_gens))
    gens = tuple((draw(polys(d, max_degree, nonzero=True)), draw(st.integers(1, max_weight))) for _ in range(k))
    return ReesAlgebra(gens, d)
