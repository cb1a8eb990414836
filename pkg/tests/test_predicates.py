from __future__ import annotations

import pytest

from axincircle.geometry import (PointSite, horizontal_segment,
                                 reflect_instance, InstanceRecord,
                                 vertical_segment)
from axincircle.oracle import oracle_incircle, solve_voronoi_circle
from axincircle.predicates import (DegenerateConfiguration,
                                   UnsupportedConfiguration,
                                   center_descriptor, descriptor_pps,
                                   descriptor_pss_parallel,
                                   descriptor_pss_perp, generic_point,
                                   incircle, incircle_pppp, incircle_ppps,
                                   incircle_ppsp, incircle_sssp)
from axincircle.signs import DegreeAudit, RootChoice
from support import translate_record

P = PointSite
H = horizontal_segment
V = vertical_segment


def test_pppp(e1):
    a, b, c = e1
    assert incircle(a, b, c, P(0, 0)) == -1
    assert incircle(a, b, c, P(3, 4)) == 0
    assert incircle(a, b, c, P(6, 0)) == 1


def test_ppps(e1):
    a, b, c = e1
    assert incircle(a, b, c, H(0, -10, 10)) == -1
    # the line y=3 meets the circle at x = +-4; the segment lies right of 4
    assert incircle(a, b, c, H(3, 6, 10)) == 1
    # tangent at (0,5) with endpoints straddling
    assert incircle(a, b, c, H(5, -10, 10)) == 0
    # vertical query goes through the reflection reduction
    assert incircle(a, b, c, V(0, -10, 10)) == -1
    assert incircle(a, b, c, V(5, 1, 9)) == 0


def test_ppps_endpoint_on_circle(e1):
    a, b, c = e1
    # endpoint on the circle, segment crossing the interior
    assert incircle(a, b, c, H(4, -3, 10)) == -1
    # endpoint on the circle, segment leaving outward
    assert incircle(a, b, c, H(4, -10, -3)) == 0
    assert incircle(a, b, c, H(4, 3, 10)) == 0


def test_ppsp(e3):
    a, b, cd = e3
    assert incircle(a, b, cd, P(0, 5)) == -1
    assert incircle(a, b, cd, P(3, 9)) == 0
    assert incircle(a, b, cd, P(5, -1)) == 1   # opposite side of the line
    assert incircle(a, b, cd, P(0, 0)) == 0    # the tangency foot itself


def test_ppsp_collinear_query(e3):
    a, b, cd = e3
    on_line_inside = P(-2, 9)
    assert incircle(a, b, cd, on_line_inside) == -1
    on_line_outside = P(-8, 6)
    assert incircle(a, b, cd, on_line_outside) == 1
    assert incircle(a, b, cd, a) == 0          # coincides with a site point


def test_ppsp_long_segment_crossing_ab_line():
    """cd stretches far past the line through a and b; the naive reduction to
    a segment query returns the wrong sign here."""
    a, b = P(0, 1000), P(-400, 800)
    cd = H(0, -3000, 700)
    q = P(-200, 899)
    assert incircle(a, b, cd, q) == -1
    assert oracle_incircle(a, b, cd, q) == -1
    far = P(-2000, 500)
    assert incircle(a, b, cd, far) == oracle_incircle(a, b, cd, far)


def test_ppss(e3):
    a, b, cd = e3
    assert incircle(a, b, cd, H(5, -1, 1)) == -1
    assert incircle(a, b, cd, V(5, 0, 9)) == 0
    # endpoint (4,8) lies on the circle, the rest outside
    assert incircle(a, b, cd, H(8, 4, 10)) == 0
    assert incircle(a, b, cd, H(8, -10, 10)) == -1


def test_ppss_aligned_heights():
    # a.y == b.y: rational center (0, 21/8), radius 29/8
    a, b, cd = P(-5, 5), P(5, 5), H(-1, -20, 20)
    sol = solve_voronoi_circle(a, b, cd)
    assert sol.yk.a * 8 == 21 * sol.yk.c or sol.yk.compare(
        solve_voronoi_circle(a, b, cd).yk) == 0
    for qs in (H(5, -9, 9), H(7, -9, 9), V(0, 7, 9), V(2, -1, 9),
               H(-1, -19, -4), V(29, -8, 8)):
        assert incircle(a, b, cd, qs) == oracle_incircle(a, b, cd, qs), qs


def test_pssp(e4, e5):
    a, cd, fg = e4
    assert incircle(a, cd, fg, P(4, 8)) == 0
    assert incircle(a, cd, fg, P(0, 5)) == -1
    assert incircle(a, cd, fg, P(5, 11)) == 1  # outside the band
    a5, cd5, fg5 = e5
    assert incircle(a5, cd5, fg5, P(5, 5)) == -1
    assert incircle(a5, cd5, fg5, P(10, 10)) == 1


def test_psss(e4, e5):
    a, cd, fg = e4
    assert incircle(a, cd, fg, H(5, 6, 9)) == 1
    assert incircle(a, cd, fg, H(5, -9, 9)) == -1
    assert incircle(a, cd, fg, V(5, 1, 9)) == 0
    a5, cd5, fg5 = e5
    assert incircle(a5, cd5, fg5, V(0, 0, 9)) == 0


def test_pss_vertical_first_cyclic_order():
    """(point, vertical, horizontal) is reflection-stable and needs the
    flipped root choice; center (0,0), radius 25."""
    a = P(-7, 24)
    fgv = V(25, -20, 20)   # tangent at (25, 0)
    cdh = H(25, -20, 20)   # tangent at (0, 25)
    for q, want in ((P(0, 0), -1), (P(15, 20), 0), (P(-20, 15), 0),
                    (P(26, 0), 1), (P(7, -24), 0)):
        assert incircle(a, fgv, cdh, q) == want, q
        assert oracle_incircle(a, fgv, cdh, q) == want, q
    assert incircle(a, fgv, cdh, V(-25, -9, 9)) == 0
    assert incircle(a, fgv, cdh, H(-7, -31, -24)) == 0


def test_sssp(e2):
    ab, cd, fg = e2
    assert incircle(ab, cd, fg, P(2, 2)) == -1
    assert incircle(ab, cd, fg, P(4, 2)) == 0
    assert incircle(ab, cd, fg, P(5, 5)) == 1
    assert incircle(ab, cd, fg, P(0, 2)) == 0  # the foot on the vertical line


def test_ssss(e2):
    ab, cd, fg = e2
    assert incircle(ab, cd, fg, H(2, 1, 3)) == -1
    assert incircle(ab, cd, fg, V(4, 0, 4)) == 0
    assert incircle(ab, cd, fg, H(1, 5, 9)) == 1
    assert incircle(ab, cd, fg, V(4, 3, 9)) == 1   # tangent line, no touch
    assert incircle(ab, cd, fg, H(4, 1, 3)) == 0   # tangent along the cd line


def test_sss_vertical_pair_reflects(e2):
    ab, cd, fg = e2
    # build the y=x mirror image by hand: vertical pair, horizontal third
    abv, cdv, fgh = V(0, 0, 10), V(4, 0, 10), H(0, 0, 4)
    # reflection swaps the first two sites
    assert incircle(cdv, abv, fgh, P(2, 2)) == -1
    assert incircle(cdv, abv, fgh, P(2, 4)) == 0


def test_three_parallel_segments_rejected():
    with pytest.raises(UnsupportedConfiguration):
        incircle(H(0, 0, 1), H(2, 0, 1), H(4, 0, 1), P(0, 0))


def test_cyclic_rotation_invariance(e2, e3, e5):
    for sites, q in ((e2, P(4, 2)), (e3, P(3, 9)), (e5, V(0, 0, 9))):
        s1, s2, s3 = sites
        base = incircle(s1, s2, s3, q)
        assert incircle(s2, s3, s1, q) == base
        assert incircle(s3, s1, s2, q) == base


def test_reflection_invariance_on_fixtures(e1, e2, e3, e4, e5):
    cases = [(e1, P(3, 4)), (e1, H(5, -10, 10)), (e2, V(4, 0, 4)),
             (e3, P(3, 9)), (e3, V(5, 0, 9)), (e4, V(5, 1, 9)),
             (e5, P(10, 10)), (e5, V(0, 0, 9))]
    for sites, q in cases:
        rec = InstanceRecord("f", *sites, q)
        mir = reflect_instance(rec)
        assert incircle(*mir.sites, mir.query) == incircle(*sites, q)


def test_translation_invariance_on_fixtures(e2, e3, e5):
    for sites, q in ((e2, P(4, 2)), (e3, H(8, 4, 10)), (e5, V(0, 0, 9))):
        rec = InstanceRecord("f", *sites, q)
        for dx, dy in ((10 ** 9, -7), (-3, 10 ** 12)):
            moved = translate_record(rec, dx, dy)
            assert incircle(*moved.sites, moved.query) == incircle(*sites, q)


def test_descriptor_pps_fixture(e3):
    a, b, cd = e3
    d = descriptor_pps(a, b, cd)
    # P is proportional to x^2 + 40x with the upper root selected
    assert (d.p.q2.value, d.p.q1.value, d.p.q0.value) == (-4, -160, 0)
    assert d.x_choice is RootChoice.UPPER
    assert (d.t.q2.value, d.t.q1.value, d.t.q0.value) == (16, -1440, 6800)
    assert d.y_choice is RootChoice.LOWER
    assert (d.alpha1.value, d.alpha0.value, d.beta.value) == (8, -20, -4)
    # y_K = (alpha1*x_K + alpha0) / beta = (8*0 - 20) / -4 = 5
    assert (d.alpha1.value * 0 + d.alpha0.value) // d.beta.value == 5
    # degree pattern of the descriptor fields
    assert (d.p.q2.degree, d.p.q1.degree, d.p.q0.degree) == (1, 2, 3)
    assert (d.t.q2.degree, d.t.q1.degree, d.t.q0.degree) == (2, 3, 4)
    assert d.alpha0.degree == d.alpha1.degree + 1
    assert d.beta.degree == d.alpha1.degree
    with pytest.raises(DegenerateConfiguration):
        descriptor_pps(P(0, 5), P(4, 5), cd)


def test_descriptor_pss_parallel_fixture(e4):
    a, cd, fg = e4
    d = descriptor_pss_parallel(a, cd, fg)
    # P = x^2 + 8x, roots {-8, 0}; a above cd selects the upper root
    assert (d.p.q2.value, d.p.q1.value, d.p.q0.value) == (1, 8, 0)
    assert d.x_choice is RootChoice.UPPER
    # T is linear: 2y - 10
    assert (d.t.q2.value, d.t.q1.value, d.t.q0.value) == (0, 2, -10)
    assert (d.alpha1.value, d.alpha0.value, d.beta.value) == (0, 10, 2)
    with pytest.raises(DegenerateConfiguration):
        descriptor_pss_parallel(P(3, 0), cd, fg)


def test_descriptor_pss_perp_fixtures(e5, e_r13):
    a, cd, fg = e5
    d = descriptor_pss_perp(a, cd, fg)
    assert (d.p.q2.value, d.p.q1.value, d.p.q0.value) == (1, 14, -95)
    assert d.x_choice is RootChoice.UPPER
    assert (d.t.q2.value, d.t.q1.value, d.t.q0.value) == (1, -34, 145)
    assert d.y_choice is RootChoice.LOWER
    assert (d.alpha1.value, d.alpha0.value, d.beta.value) == (-1, 10, 1)
    a2, cd2, fg2 = e_r13
    d2 = descriptor_pss_perp(a2, cd2, fg2)
    # corrected coefficients: y^2 - 42y + 245 with roots {7, 35}
    assert (d2.t.q2.value, d2.t.q1.value, d2.t.q0.value) == (1, -42, 245)
    assert d2.y_choice is RootChoice.UPPER
    with pytest.raises(DegenerateConfiguration):
        descriptor_pss_perp(P(10, 3), cd, fg)


def test_rejected_parallel_root_has_wrong_orientation(e4):
    """The lower root of P gives the center (-8,5): its tangency order is
    (a, fg, cd), not (a, cd, fg)."""
    from axincircle.oracle import QuadExt, ccw_order_ok
    a, cd, fg = e4
    qe = QuadExt.from_int
    good = ((qe(-4), qe(8)), (qe(0), qe(0)), (qe(0), qe(10)))
    assert ccw_order_ok(*good)
    bad = ((qe(-4), qe(8)), (qe(-8), qe(0)), (qe(-8), qe(10)))
    assert not ccw_order_ok(*bad)


def test_generic_point_fixture(e4, e5):
    a, cd, fg = e4
    d = descriptor_pss_parallel(a, cd, fg)
    assert generic_point(d, a, P(0, 5)) == -1
    assert generic_point(d, a, P(4, 8)) == 0
    d5 = descriptor_pss_perp(*e5)
    assert generic_point(d5, e5[0], P(10, 10)) == 1


def test_center_descriptor_matches_oracle(e3, e5, e_r13):
    for sites in (e3, e5, e_r13):
        d, norm = center_descriptor(*sites)
        sol = solve_voronoi_circle(*norm)
        from axincircle.oracle import QuadExt
        px = (QuadExt.from_int(d.p.q2.value) * sol.xk * sol.xk
              + QuadExt.from_int(d.p.q1.value) * sol.xk
              + QuadExt.from_int(d.p.q0.value))
        assert px.is_zero()
        rel = (QuadExt.from_int(d.beta.value) * sol.yk
               - QuadExt.from_int(d.alpha1.value) * sol.xk
               - QuadExt.from_int(d.alpha0.value))
        assert rel.is_zero()


def test_degree_audit_bounds_on_fixtures(e1, e2, e3, e4, e5):
    cases = [(e1, P(1, 1), 4), (e1, H(5, -10, 10), 6), (e3, P(3, 9), 6),
             (e3, V(5, 0, 9), 6), (e4, P(4, 8), 4), (e4, V(5, 1, 9), 4),
             (e2, P(4, 2), 2), (e2, V(4, 0, 4), 2)]
    for sites, q, bound in cases:
        audit = DegreeAudit()
        incircle(*sites, q, audit)
        assert audit.max_degree <= bound, (sites, q)


def test_handlers_reject_wrong_orientation_inputs(e1):
    a, b, c = e1
    with pytest.raises(AssertionError):
        incircle_ppps(a, b, c, V(0, -10, 10))
