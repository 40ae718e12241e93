from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import P, XYZ, alg, algebras
from reesalg.basicobj import MarkedObject
from reesalg.blowup import (
    CenterSpec,
    Chart,
    DivisorRecord,
    NotPermissibleError,
    blowup_charts,
    blowup_substitution,
    is_permissible,
    total_transform,
    transform_marked,
    weighted_transform,
)
from reesalg.rees import diff_closure, odot, same_pieces
from reesalg.resolution import giraud_check
from reesalg.singular import contains_point, ord_at

CUSP = alg([("x^2+y^3", 2)])


def test_is_permissible_examples():
    assert is_permissible(CUSP, CenterSpec((0, 1)))
    assert not is_permissible(alg([("x", 1)]), CenterSpec((1,)))
    assert is_permissible(alg([("x^2", 2)]), CenterSpec((0,)))


def test_center_spec_validation():
    with pytest.raises(ValueError):
        CenterSpec(())
    assert CenterSpec((1, 0, 1)).S == (0, 1)


def test_blowup_charts_plane():
    charts = blowup_charts(Chart.root(2), CenterSpec((0, 1)))
    assert len(charts) == 2
    (cx, sx), (cy, sy) = charts
    assert sx == (P("x"), P("x*y")) and sy == (P("x*y"), P("y"))
    assert cx.e_vars == (0,) and cy.e_vars == (1,)
    assert cx.id == "0/x" and cy.id == "0/y"


def test_codim_one_is_identity():
    [(ch, sub)] = blowup_charts(Chart.root(2), CenterSpec((0,)))
    assert sub == (P("x"), P("y"))
    assert ch.e_vars == (0,)


def test_total_transform():
    assert total_transform(CUSP, (P("x*y"), P("y"))).gens == ((P("x^2*y^2+y^3"), 2),)
    assert total_transform(CUSP, (P("x"), P("y"))) == CUSP


def test_weighted_transform():
    assert weighted_transform(CUSP, (P("x*y"), P("y")), 1).gens == ((P("x^2+y"), 2),)
    with pytest.raises(NotPermissibleError):
        weighted_transform(alg([("x+y^2", 2)]), (P("x*y"), P("y")), 1)


def test_pair_transform_matches_factorization():
    # J O' = I(H')^b J' for J = (x^3 + y^4), b = 2, chart y
    f = P("x^3+y^4")
    G = alg([("x^3+y^4", 2)])
    sub = blowup_substitution(2, (0, 1), 1)
    [(g, n)] = weighted_transform(G, sub, 1).gens
    assert g * P("y^2") == f.compose(sub)


def test_transform_marked_bookkeeping():
    M = MarkedObject.on_root(CUSP)
    charts = transform_marked(M, CenterSpec((0, 1)))
    assert [c.chart.record(c.chart.e_vars[0]).a for c in charts] == [0, 0]
    N = MarkedObject.on_root(alg([("x^2", 1)]))
    [child] = transform_marked(N, CenterSpec((0,)))
    assert child.chart.record(0).a == 1
    assert child.algebra.gens == ((P("x"), 1),)


def test_transform_marked_rejects_non_permissible():
    with pytest.raises(NotPermissibleError):
        transform_marked(MarkedObject.on_root(CUSP), CenterSpec((1,)))


def test_chart_rejects_duplicate_divisors():
    with pytest.raises(ValueError):
        Chart("0", ("x", "y"), (DivisorRecord(0, 1), DivisorRecord(0, 2)))


def test_three_blowups_track_divisors():
    ch = Chart.root(3, XYZ)
    ch1, _ = blowup_charts(ch, CenterSpec((0, 1, 2)))[2]      # z-chart, E = {z}
    ch2, _ = blowup_charts(ch1, CenterSpec((0, 1)))[0]        # x-chart, E = {x, z}
    ch3, sub3 = blowup_charts(ch2, CenterSpec((0, 2)))[1]     # z-chart again
    assert ch3.e_vars == (0, 2)
    assert ch3.record(2).label == 3 and ch3.record(0).label == 2
    # the root map is the composite of the three substitutions
    x, y, z = P("x", XYZ), P("y", XYZ), P("z", XYZ)
    assert ch1.to_root == (x * z, y * z, z)
    assert ch2.to_root == (x * z, x * y * z, z)
    assert ch3.to_root == (x * z * z, x * z * y * z, z)


def test_chart_gluing_orders_agree():
    G = alg([("x^2-y^3+x*y^2", 2)])
    (cx, sx), (cy, sy) = blowup_charts(Chart.root(2), CenterSpec((0, 1)))
    Gx, Gy = weighted_transform(G, sx, 0), weighted_transform(G, sy, 1)
    # (1, u) in the x-chart and (1/u, u) in the y-chart are the same point
    for u in (Fraction(1, 2), Fraction(2), Fraction(-3)):
        p_x = (Fraction(1), u)            # x = 1, y = u in the x-chart
        p_y = (1 / u, u)                  # the same point in the y-chart
        assert ord_at(Gx, p_x) == ord_at(Gy, p_y)


def test_order_does_not_rise_after_blowup():
    G = alg([("x^3+y^4+x*y^3", 2)])
    w = ord_at(G, (0, 0))
    for j, (ch, sub) in zip((0, 1), blowup_charts(Chart.root(2), CenterSpec((0, 1)))):
        H = weighted_transform(G, sub, j)
        for t in (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2)):
            p = (Fraction(0), t) if j == 0 else (t, Fraction(0))
            if contains_point(H, p):
                assert ord_at(H, p) <= w


def test_simplicity_preserved():
    G = alg([("x^2+y^3", 2)])
    for j, (ch, sub) in zip((0, 1), blowup_charts(Chart.root(2), CenterSpec((0, 1)))):
        H = weighted_transform(G, sub, j)
        for t in (Fraction(0), Fraction(1), Fraction(-1)):
            p = (Fraction(0), t) if j == 0 else (t, Fraction(0))
            if contains_point(H, p):
                assert ord_at(H, p) == 1


def test_transform_commutes_with_odot():
    G1, G2 = alg([("x^2+y^3", 2)]), alg([("x*y", 2)])
    for j, (_, sub) in zip((0, 1), blowup_charts(Chart.root(2), CenterSpec((0, 1)))):
        lhs = weighted_transform(odot(G1, G2), sub, j)
        rhs = odot(weighted_transform(G1, sub, j), weighted_transform(G2, sub, j))
        assert same_pieces(lhs, rhs)


def test_giraud_on_examples():
    assert giraud_check(CUSP, CenterSpec((0, 1)))
    assert giraud_check(alg([("x^2-y^2*z", 2)], XYZ), CenterSpec((0, 1, 2)))
