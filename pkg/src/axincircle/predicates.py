"""Degree-bounded incircle handlers for all eight site/query configurations.

The query's sign against the Voronoi disk of (s1, s2, s3) is decided purely by
integer sign evaluations.  Point-and-segment configurations route through a
shared engine: the center coordinates x_K, y_K are roots of quadratics P and T
with a known root choice, tied by the linear relation beta*y_K = alpha1*x_K +
alpha0, and every comparison against the center becomes a root-sign problem.

Dispatch normalizes each instance by cyclic rotation of the three sites plus
at most one reflection through y = x (which swaps the first two sites to keep
the counterclockwise tangency order).  The mixed two-segment case in which the
vertical segment cyclically precedes the horizontal one is reflection-stable;
it is handled by flipping both root choices instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .geometry import (Axis, PointSite, SegmentSite, Sign, Site, is_segment,
                       reflect_site)
from .signs import (BandPosition, DegreeAudit, DegreeTagged, LinearPoly,
                    QuadraticPoly, RootChoice, band_position, coord,
                    compare_value_to_root, dt, sign_linear_at_root, sign_of)


class UnsupportedConfiguration(ValueError):
    pass


class DegenerateConfiguration(ValueError):
    pass


_TWO = dt(2)
_FOUR = dt(4)


@dataclass(frozen=True)
class CenterDescriptor:
    """Quadratics vanishing at x_K and y_K, the root selectors, and the
    linear relation beta*y_K = alpha1*x_K + alpha0 (beta != 0)."""

    p: QuadraticPoly
    x_choice: RootChoice
    t: QuadraticPoly
    y_choice: RootChoice
    alpha1: DegreeTagged
    alpha0: DegreeTagged
    beta: DegreeTagged


def _sgn(v: DegreeTagged, audit: DegreeAudit | None) -> int:
    s, _ = sign_of(v, audit)
    return s


def _det3(r1, r2, r3) -> DegreeTagged:
    return (r1[0] * (r2[1] * r3[2] - r3[1] * r2[2])
            - r1[1] * (r2[0] * r3[2] - r3[0] * r2[2])
            + r1[2] * (r2[0] * r3[1] - r3[0] * r2[1]))


def _orientation_value(p: PointSite, q: PointSite, r: PointSite) -> DegreeTagged:
    return ((coord(q.x) - coord(p.x)) * (coord(r.y) - coord(p.y))
            - (coord(q.y) - coord(p.y)) * (coord(r.x) - coord(p.x)))


def _pencil(a: PointSite, b: PointSite, c: PointSite):
    """Minors of the lifted 4x4 determinant for the circle through a, b, c.

    u2 is the orientation determinant; u1, w1, u3 are the cofactors that build
    the extremal-coordinate polynomials T(y) and S(x).
    """
    one = dt(1)
    rows = [(coord(p.x), coord(p.y),
             coord(p.x) * coord(p.x) + coord(p.y) * coord(p.y))
            for p in (a, b, c)]
    u2 = _det3(*[(one, x, y) for x, y, _ in rows])
    u1 = _det3(*[(one, y, m) for _, y, m in rows])
    w1 = _det3(*[(one, x, m) for x, _, m in rows])
    u3 = _det3(*rows)
    return u2, u1, w1, u3


def _lifted_incircle_value(a, b, c, q) -> DegreeTagged:
    u2, u1, w1, u3 = _pencil(a, b, c)
    xq, yq = coord(q.x), coord(q.y)
    return (xq * xq + yq * yq) * u2 + xq * u1 - yq * w1 - u3


def incircle_pppp(a: PointSite, b: PointSite, c: PointSite, q: PointSite,
                  audit: DegreeAudit | None = None) -> Sign:
    """Classic four-point incircle; degree 4.  Positive means q is outside."""
    return _sgn(_lifted_incircle_value(a, b, c, q), audit)


def _finish_segment(line_sign: int, straddles: Callable[[], tuple[int, int]],
                    eq: Sign, es: Sign) -> Sign:
    """Combine the line-vs-circle sign with straddle and endpoint information.

    Preconditions: eq, es >= 0 (an interior endpoint was already reported) and
    line_sign = sign(d(K, line QS) - rho).
    """
    if line_sign > 0:
        return 1
    cq, cs = straddles()
    if line_sign == 0:
        return 0 if cq * cs <= 0 else 1
    if cq * cs < 0:
        return -1
    if eq == 0 or es == 0:
        return 0
    return 1


def incircle_ppps(a: PointSite, b: PointSite, c: PointSite, qs: SegmentSite,
                  audit: DegreeAudit | None = None) -> Sign:
    """Three points, horizontal query segment; degree 6."""
    assert qs.axis is Axis.HORIZONTAL, "dispatch reflects vertical queries"
    eq = incircle_pppp(a, b, c, qs.a, audit)
    es = incircle_pppp(a, b, c, qs.b, audit)
    if eq < 0 or es < 0:
        return -1
    u2, u1, w1, u3 = _pencil(a, b, c)
    t2 = -(_FOUR * u2 * u2)
    t = QuadraticPoly(t2, _FOUR * u2 * w1, u1 * u1 + _FOUR * u2 * u3)
    band = band_position(coord(qs.a.y), t, audit)
    line_sign = {BandPosition.OUTSIDE: 1, BandPosition.ON_BOUNDARY: 0,
                 BandPosition.INSIDE: -1}[band]

    def straddles() -> tuple[int, int]:
        # sign(x_K - x_I) = sign(2*s2*x_I + s1) because s2 < 0
        s2, s1 = t2, -(_FOUR * u2 * u1)
        cq = _sgn(_TWO * s2 * coord(qs.a.x) + s1, audit)
        cs = _sgn(_TWO * s2 * coord(qs.b.x) + s1, audit)
        return cq, cs

    return _finish_segment(line_sign, straddles, eq, es)


def incircle_ppsp(a: PointSite, b: PointSite, cd: SegmentSite, q: PointSite,
                  audit: DegreeAudit | None = None) -> Sign:
    """Two points and a horizontal segment, point query; degree 6.

    Reduces to locating the circle through (a, b, q) against the supporting
    line of cd, restricted to the side of the oriented line ab that carries
    the tangency foot of the Voronoi circle (always its left, by the ccw
    order).  Only the supporting line and the chord side enter: a plain
    segment-query reduction is unsound when cd crosses the line ab.
    """
    assert cd.axis is Axis.HORIZONTAL, "dispatch reflects vertical segments"
    yc = cd.line
    side_a = _sgn(coord(a.y) - coord(yc), audit)
    side_q = _sgn(coord(q.y) - coord(yc), audit)
    if side_q == -side_a:
        return 1
    sigma = _sgn(_orientation_value(a, b, q), audit)
    if sigma == 0:
        # q on line ab: inside iff strictly between a and b
        if a.x != b.x:
            u = _sgn(coord(q.x) - coord(a.x), audit)
            v = _sgn(coord(q.x) - coord(b.x), audit)
        else:
            u = _sgn(coord(q.y) - coord(a.y), audit)
            v = _sgn(coord(q.y) - coord(b.y), audit)
        if u * v < 0:
            return -1
        return 0 if u * v == 0 else 1
    u2, u1, w1, u3 = _pencil(a, b, q)
    t_at_yc = (-(_FOUR * u2 * u2) * coord(yc) * coord(yc)
               + (_FOUR * u2 * w1) * coord(yc) + u1 * u1 + _FOUR * u2 * u3)
    st = _sgn(t_at_yc, audit)
    if st < 0:
        line_val = 1          # the circle through a, b, q misses the line
    else:
        # chord midpoint (and tangency foot) is (-u1/(2*u2), yc); its side of
        # the oriented line ab tells which tangent branch of the pencil the
        # circle through q sits on
        e = (_TWO * u2 * (coord(b.x) - coord(a.x)) * (coord(yc) - coord(a.y))
             - (coord(b.y) - coord(a.y)) * (-u1 - _TWO * u2 * coord(a.x)))
        left = _sgn(e, audit) * _sgn(u2, audit)
        assert left != 0, "chord midpoint cannot lie on line ab"
        if st == 0:
            line_val = 0 if left > 0 else 1
        else:
            line_val = -1 if left > 0 else 1
    return -sigma * line_val


def descriptor_pps(a: PointSite, b: PointSite, cd: SegmentSite) -> CenterDescriptor:
    """Center descriptor for two points and a horizontal segment, a.y != b.y.

    P(x) is the ab-bisector substituted into the parabola with focus a and
    directrix the supporting line of cd.
    """
    if a.y == b.y:
        raise DegenerateConfiguration("equidistant points need the aligned form")
    xa, ya, xb, yb = coord(a.x), coord(a.y), coord(b.x), coord(b.y)
    yc = coord(cd.line)
    alpha1 = _TWO * (xa - xb)
    alpha0 = xb * xb + yb * yb - xa * xa - ya * ya
    beta = _TWO * (yb - ya)
    p = QuadraticPoly(
        beta,
        -(_TWO * beta * xa) - _TWO * alpha1 * (ya - yc),
        beta * xa * xa - (ya - yc) * (_TWO * alpha0 - beta * (ya + yc)),
    )
    t = QuadraticPoly(
        _FOUR * (yb - ya) * (yb - ya),
        _FOUR * (_TWO * yc - ya - yb) * (xb - xa) * (xb - xa)
        + _FOUR * (yb - ya) * (ya * ya - yb * yb),
        (xa - xb) * (xa - xb)
        * (_TWO * ya * ya + _TWO * yb * yb - _FOUR * yc * yc + (xa - xb) * (xa - xb))
        + (ya * ya - yb * yb) * (ya * ya - yb * yb),
    )
    x_choice = RootChoice.LOWER if a.y < b.y else RootChoice.UPPER
    # equal x makes T a perfect square; either root works then
    y_choice = RootChoice.UPPER if a.x <= b.x else RootChoice.LOWER
    return CenterDescriptor(p, x_choice, t, y_choice, alpha1, alpha0, beta)


def descriptor_pss_parallel(a: PointSite, cd: SegmentSite,
                            fg: SegmentSite) -> CenterDescriptor:
    """Center descriptor for a point between two horizontal segments."""
    yc, yf = cd.line, fg.line
    if a.y == yc or a.y == yf:
        raise DegenerateConfiguration("point on a supporting line")
    xa, ya = coord(a.x), coord(a.y)
    ycd, yfd = coord(yc), coord(yf)
    p = QuadraticPoly(dt(1), -(_TWO * xa), xa * xa + (ya - ycd) * (ya - yfd))
    t = QuadraticPoly(dt(0), _TWO, -(ycd + yfd))
    x_choice = RootChoice.UPPER if a.y > yc else RootChoice.LOWER
    return CenterDescriptor(p, x_choice, t, RootChoice.UPPER,
                            dt(0), ycd + yfd, _TWO)


def _other(c: RootChoice) -> RootChoice:
    return RootChoice.LOWER if c is RootChoice.UPPER else RootChoice.UPPER


def descriptor_pss_perp(a: PointSite, cd: SegmentSite, fg: SegmentSite, *,
                        ccw_swapped: bool = False) -> CenterDescriptor:
    """Center descriptor for a point, a horizontal segment cd and a vertical
    segment fg.

    The center sits on the diagonal bisector of the quadrant pair containing
    the point.  ``ccw_swapped`` means the vertical segment cyclically precedes
    the horizontal one in the tangency order, which selects the other root of
    both quadratics.
    """
    yc, xf = cd.line, fg.line
    sx = (a.x > xf) - (a.x < xf)
    sy = (a.y > yc) - (a.y < yc)
    if sx == 0 or sy == 0:
        raise DegenerateConfiguration("point on a supporting line")
    xa, ya = coord(a.x), coord(a.y)
    ycd, xfd = coord(yc), coord(xf)
    if sx == sy:
        # bisector y = x + yc - xf
        p = QuadraticPoly(dt(1), _TWO * (ycd - ya - xa),
                          (ycd - ya) * (ycd - ya) + xa * xa
                          - _TWO * xfd * (ycd - ya))
        t = QuadraticPoly(dt(1), _TWO * (xfd - xa - ya),
                          (xfd - xa - ycd) * (xfd - xa - ycd)
                          + ya * ya - ycd * ycd)
        alpha1, alpha0 = dt(1), ycd - xfd
    else:
        # bisector y = -x + yc + xf
        p = QuadraticPoly(dt(1), _TWO * (ya - ycd - xa),
                          (ycd - ya) * (ycd - ya) + xa * xa
                          + _TWO * xfd * (ycd - ya))
        t = QuadraticPoly(dt(1), _TWO * (xa - ya - xfd),
                          (xa - xfd) * (xa - xfd) + ya * ya
                          - _TWO * xa * ycd + _TWO * ycd * xfd)
        alpha1, alpha0 = dt(-1), ycd + xfd
    x_choice = RootChoice.UPPER if sy > 0 else RootChoice.LOWER
    y_choice = RootChoice.UPPER if sx > 0 else RootChoice.LOWER
    if ccw_swapped:
        x_choice = _other(x_choice)
        y_choice = _other(y_choice)
    return CenterDescriptor(p, x_choice, t, y_choice, alpha1, alpha0, dt(1))


def generic_point(d: CenterDescriptor, a: PointSite, q: PointSite,
                  audit: DegreeAudit | None = None) -> Sign:
    """Sign of d^2(K, q) - d^2(K, a) for the on-circle point site a.

    beta*(d^2(K,q) - d^2(K,a)) expands to (-I1)*x_K + I0, so the answer is
    sign(beta) times the sign of that linear form at the chosen root of P.
    """
    xa, ya, xq, yq = coord(a.x), coord(a.y), coord(q.x), coord(q.y)
    i1 = _TWO * d.beta * (xq - xa) + _TWO * d.alpha1 * (yq - ya)
    i0 = (d.beta * (xq * xq + yq * yq - xa * xa - ya * ya)
          - _TWO * d.alpha0 * (yq - ya))
    sb = _sgn(d.beta, audit)
    if i1.value == 0:
        return sb * _sgn(i0, audit)
    return sb * sign_linear_at_root(LinearPoly(-i1, i0), d.p, d.x_choice, audit)


def generic_segment(d: CenterDescriptor, cd_line: int, qs: SegmentSite,
                    endpoint_signs: tuple[Sign, Sign],
                    audit: DegreeAudit | None = None) -> Sign:
    """Segment query against the circle described by ``d``.

    ``cd_line`` is the y of a horizontal tangent site segment, so the radius
    equals |y_K - cd_line|.  ``endpoint_signs`` are the point-query signs of
    the endpoints, both >= 0 (a negative endpoint short-circuits upstream).
    The absolute values in d(K, line QS) - d(K, CD) are resolved by comparing
    against the chosen roots of T (and P), turning the difference into a
    linear form evaluated at a known root.
    """
    eq, es = endpoint_signs
    ycd = coord(cd_line)
    syc = compare_value_to_root(ycd, d.t, d.y_choice, audit)  # sign(y_K - y_C)
    if qs.axis is Axis.HORIZONTAL:
        yq = coord(qs.a.y)
        syq = compare_value_to_root(yq, d.t, d.y_choice, audit)
        if syq >= 0:
            j1, j0 = (dt(0), ycd - yq) if syc >= 0 else (_TWO, -yq - ycd)
        else:
            j1, j0 = (dt(-2), yq + ycd) if syc >= 0 else (dt(0), yq - ycd)
        if j1.value == 0:
            line_sign = _sgn(j0, audit)
        else:
            line_sign = sign_linear_at_root(LinearPoly(j1, j0), d.t,
                                            d.y_choice, audit)

        def straddles() -> tuple[int, int]:
            cq = compare_value_to_root(coord(qs.a.x), d.p, d.x_choice, audit)
            cs = compare_value_to_root(coord(qs.b.x), d.p, d.x_choice, audit)
            return cq, cs
    else:
        xq = coord(qs.a.x)
        sxq = compare_value_to_root(xq, d.p, d.x_choice, audit)  # sign(x_K - x_Q)
        if sxq >= 0:
            if syc >= 0:
                l1, l0 = d.beta - d.alpha1, d.beta * (ycd - xq) - d.alpha0
            else:
                l1, l0 = d.beta + d.alpha1, d.beta * (-ycd - xq) + d.alpha0
        else:
            if syc >= 0:
                l1, l0 = -d.beta - d.alpha1, d.beta * (ycd + xq) - d.alpha0
            else:
                l1, l0 = -d.beta + d.alpha1, d.beta * (-ycd + xq) + d.alpha0
        sb = _sgn(d.beta, audit)
        if l1.value == 0:
            line_sign = sb * _sgn(l0, audit)
        else:
            line_sign = sb * sign_linear_at_root(LinearPoly(l1, l0), d.p,
                                                 d.x_choice, audit)

        def straddles() -> tuple[int, int]:
            cq = compare_value_to_root(coord(qs.a.y), d.t, d.y_choice, audit)
            cs = compare_value_to_root(coord(qs.b.y), d.t, d.y_choice, audit)
            return cq, cs

    return _finish_segment(line_sign, straddles, eq, es)


def incircle_ppss(a: PointSite, b: PointSite, cd: SegmentSite, qs: SegmentSite,
                  audit: DegreeAudit | None = None) -> Sign:
    """Two points, horizontal segment, segment query; degree 6."""
    assert cd.axis is Axis.HORIZONTAL
    eq = incircle_ppsp(a, b, cd, qs.a, audit)
    if eq < 0:
        return -1
    es = incircle_ppsp(a, b, cd, qs.b, audit)
    if es < 0:
        return -1
    if a.y == b.y:
        return _ppss_aligned(a, b, cd, qs, eq, es, audit)
    d = descriptor_pps(a, b, cd)
    return generic_segment(d, cd.line, qs, (eq, es), audit)


def _ppss_aligned(a: PointSite, b: PointSite, cd: SegmentSite, qs: SegmentSite,
                  eq: Sign, es: Sign, audit: DegreeAudit | None) -> Sign:
    """a.y == b.y: the center is rational, x_K = (x_a+x_b)/2, y_K = U2/U1."""
    xa, ya, xb, yc = coord(a.x), coord(a.y), coord(b.x), coord(cd.line)
    u2 = (xb - xa) * (xb - xa) + _FOUR * (ya * ya - yc * yc)
    u1 = dt(8) * (ya - yc)
    su1 = _sgn(u1, audit)

    def abs_diff(p: DegreeTagged, q: DegreeTagged) -> int:
        # sign(|p| - |q|)
        sp, _ = sign_of(p, audit)
        sq, _ = sign_of(q, audit)
        return _sgn(p.flip(sp) - q.flip(sq), audit)

    if qs.axis is Axis.HORIZONTAL:
        # 2*|U1| * (|y_K - y_Q| - |y_K - y_C|) up to the positive factor
        line_sign = abs_diff(u2 - u1 * coord(qs.a.y), u2 - u1 * yc)

        def straddles() -> tuple[int, int]:
            cq = _sgn(xa + xb - _TWO * coord(qs.a.x), audit)
            cs = _sgn(xa + xb - _TWO * coord(qs.b.x), audit)
            return cq, cs
    else:
        # |U1*(x_A + x_B - 2x_Q)| - 2*|U2 - U1*y_C|
        line_sign = abs_diff(u1 * (xa + xb - _TWO * coord(qs.a.x)),
                             _TWO * (u2 - u1 * yc))

        def straddles() -> tuple[int, int]:
            cq = _sgn(u2 - u1 * coord(qs.a.y), audit) * su1
            cs = _sgn(u2 - u1 * coord(qs.b.y), audit) * su1
            return cq, cs

    return _finish_segment(line_sign, straddles, eq, es)


def incircle_pssp(a: PointSite, cd: SegmentSite, fg: SegmentSite, q: PointSite,
                  audit: DegreeAudit | None = None, *,
                  ccw_swapped: bool = False) -> Sign:
    """Point site between two segments, point query; degree 4.

    cd is horizontal; fg is horizontal (parallel subcase) or vertical.
    ``ccw_swapped`` marks the vertical-before-horizontal tangency order.
    """
    assert cd.axis is Axis.HORIZONTAL
    if fg.axis is Axis.HORIZONTAL:
        syc = _sgn(coord(q.y) - coord(cd.line), audit)
        syf = _sgn(coord(q.y) - coord(fg.line), audit)
        if syc == syf and syc != 0:
            return 1          # strictly outside the band between the lines
        d = descriptor_pss_parallel(a, cd, fg)
    else:
        d = descriptor_pss_perp(a, cd, fg, ccw_swapped=ccw_swapped)
    return generic_point(d, a, q, audit)


def incircle_psss(a: PointSite, cd: SegmentSite, fg: SegmentSite,
                  qs: SegmentSite, audit: DegreeAudit | None = None, *,
                  ccw_swapped: bool = False) -> Sign:
    """Point site between two segments, segment query; degree 4."""
    assert cd.axis is Axis.HORIZONTAL
    parallel = fg.axis is Axis.HORIZONTAL
    if parallel and qs.axis is Axis.HORIZONTAL:
        syc = _sgn(coord(qs.a.y) - coord(cd.line), audit)
        syf = _sgn(coord(qs.a.y) - coord(fg.line), audit)
        if syc == syf and syc != 0:
            return 1
    eq = incircle_pssp(a, cd, fg, qs.a, audit, ccw_swapped=ccw_swapped)
    if eq < 0:
        return -1
    es = incircle_pssp(a, cd, fg, qs.b, audit, ccw_swapped=ccw_swapped)
    if es < 0:
        return -1
    if parallel:
        d = descriptor_pss_parallel(a, cd, fg)
    else:
        d = descriptor_pss_perp(a, cd, fg, ccw_swapped=ccw_swapped)
    return generic_segment(d, cd.line, qs, (eq, es), audit)


def incircle_sssp(ab: SegmentSite, cd: SegmentSite, fg: SegmentSite,
                  q: PointSite, audit: DegreeAudit | None = None) -> Sign:
    """Two horizontal segments and a vertical one, point query; degree 2."""
    assert ab.axis is Axis.HORIZONTAL and cd.axis is Axis.HORIZONTAL
    assert fg.axis is Axis.VERTICAL
    ya, yc, xf = ab.line, cd.line, fg.line
    s = _sgn(coord(yc) - coord(ya), audit)
    # the center lies on side s of line ab, side -s of cd, side s of fg
    if _sgn(coord(q.y) - coord(ya), audit) == -s:
        return 1
    if _sgn(coord(q.y) - coord(yc), audit) == s:
        return 1
    if _sgn(coord(q.x) - coord(xf), audit) == -s:
        return 1
    dxf = coord(xf) - coord(q.x)
    expr = (_FOUR * dxf * (dxf + coord(yc) - coord(ya))
            + (coord(yc) + coord(ya) - _TWO * coord(q.y))
            * (coord(yc) + coord(ya) - _TWO * coord(q.y)))
    return _sgn(expr, audit)


def incircle_ssss(ab: SegmentSite, cd: SegmentSite, fg: SegmentSite,
                  qs: SegmentSite, audit: DegreeAudit | None = None) -> Sign:
    """Two horizontal segments and a vertical one, segment query; degree 2."""
    eq = incircle_sssp(ab, cd, fg, qs.a, audit)
    if eq < 0:
        return -1
    es = incircle_sssp(ab, cd, fg, qs.b, audit)
    if es < 0:
        return -1
    ya, yc, xf = ab.line, cd.line, fg.line
    if qs.axis is Axis.HORIZONTAL:
        # the circle's y-range is exactly the band between lines ab and cd
        t1 = _sgn(coord(qs.a.y) - coord(ya), audit)
        t2 = _sgn(coord(qs.a.y) - coord(yc), audit)
        line_sign = t1 * t2

        def straddles() -> tuple[int, int]:
            # sign(2*(x_K - x_I)) with x_K = xf + (yc - ya)/2
            cq = _sgn(_TWO * (coord(xf) - coord(qs.a.x)) + coord(yc) - coord(ya),
                      audit)
            cs = _sgn(_TWO * (coord(xf) - coord(qs.b.x)) + coord(yc) - coord(ya),
                      audit)
            return cq, cs
    else:
        b1 = _TWO * (coord(qs.a.x) - coord(xf)) - (coord(yc) - coord(ya))
        b2 = coord(yc) - coord(ya)
        s1, _ = sign_of(b1, audit)
        s2, _ = sign_of(b2, audit)
        line_sign = _sgn(b1.flip(s1) - b2.flip(s2), audit)  # |2(xQ-xK)| - 2rho

        def straddles() -> tuple[int, int]:
            cq = _sgn(coord(ya) + coord(yc) - _TWO * coord(qs.a.y), audit)
            cs = _sgn(coord(ya) + coord(yc) - _TWO * coord(qs.b.y), audit)
            return cq, cs

    return _finish_segment(line_sign, straddles, eq, es)


def _reflect4(s1: Site, s2: Site, s3: Site, q: Site):
    """Reflect through y = x, swapping the first two sites to preserve the
    counterclockwise tangency order."""
    return (reflect_site(s2), reflect_site(s1), reflect_site(s3),
            reflect_site(q))


def normalize_instance(s1: Site, s2: Site, s3: Site, query: Site):
    """Rotate and reflect an instance into its handler's canonical frame.

    Returns (kind, (t1, t2, t3), query, ccw_swapped) where kind is one of
    "ppp", "pps", "pss", "sss"; segments are oriented as the handlers expect
    (pps/sss: horizontal second/first pair; pss: horizontal cd before vertical
    fg with ccw_swapped flagging a vertical-first tangency order).
    """
    sites = (s1, s2, s3)
    seg_idx = [i for i, s in enumerate(sites) if is_segment(s)]
    nseg = len(seg_idx)
    if nseg == 0:
        if is_segment(query) and query.axis is Axis.VERTICAL:
            s1, s2, s3, query = _reflect4(s1, s2, s3, query)
        return "ppp", (s1, s2, s3), query, False
    if nseg == 1:
        i = seg_idx[0]
        a, b, cd = sites[(i + 1) % 3], sites[(i + 2) % 3], sites[i]
        if cd.axis is Axis.VERTICAL:
            a, b, cd, query = _reflect4(a, b, cd, query)
        return "pps", (a, b, cd), query, False
    if nseg == 2:
        i = ({0, 1, 2} - set(seg_idx)).pop()
        a, u, v = sites[i], sites[(i + 1) % 3], sites[(i + 2) % 3]
        if u.axis is Axis.VERTICAL and v.axis is Axis.VERTICAL:
            # reflecting (a, u, v) gives (Ru, Ra, Rv); rotate the point first
            a, u, v = reflect_site(a), reflect_site(v), reflect_site(u)
            query = reflect_site(query)
        if v.axis is Axis.HORIZONTAL and u.axis is Axis.VERTICAL:
            return "pss", (a, v, u), query, True
        return "pss", (a, u, v), query, False
    axes = [s.axis for s in sites]
    odd = [i for i in range(3) if axes.count(axes[i]) == 1]
    if not odd:
        raise UnsupportedConfiguration("three parallel segments have no "
                                       "tritangent circle")
    i = odd[0]
    ab, cd, fg = sites[(i + 1) % 3], sites[(i + 2) % 3], sites[i]
    if fg.axis is Axis.HORIZONTAL:
        ab, cd, fg, query = _reflect4(ab, cd, fg, query)
    return "sss", (ab, cd, fg), query, False


def center_descriptor(s1: Site, s2: Site, s3: Site):
    """Descriptor of the Voronoi center in the normalized frame, plus the
    normalized sites it refers to.  Only defined for pps/pss triples with a
    quadratic center (DegenerateConfiguration otherwise)."""
    kind, sites, _, swapped = normalize_instance(s1, s2, s3, PointSite(0, 0))
    if kind == "pps":
        return descriptor_pps(*sites), sites
    if kind == "pss":
        a, cd, fg = sites
        if fg.axis is Axis.HORIZONTAL:
            return descriptor_pss_parallel(a, cd, fg), sites
        return descriptor_pss_perp(a, cd, fg, ccw_swapped=swapped), sites
    raise DegenerateConfiguration(f"no center descriptor for {kind}")


def incircle(s1: Site, s2: Site, s3: Site, query: Site,
             audit: DegreeAudit | None = None) -> Sign:
    """Incircle predicate for the Voronoi circle of (s1, s2, s3), ccw order.

    +1: query disjoint from the closed disk; 0: tangent; -1: meets the open
    disk.  Requires that the Voronoi circle exists and the sites are
    axes-aligned; those preconditions are not re-checked here.
    """
    kind, sites, query, swapped = normalize_instance(s1, s2, s3, query)
    if kind == "ppp":
        if not is_segment(query):
            return incircle_pppp(*sites, query, audit)
        return incircle_ppps(*sites, query, audit)
    if kind == "pps":
        if not is_segment(query):
            return incircle_ppsp(*sites, query, audit)
        return incircle_ppss(*sites, query, audit)
    if kind == "pss":
        if not is_segment(query):
            return incircle_pssp(*sites, query, audit, ccw_swapped=swapped)
        return incircle_psss(*sites, query, audit, ccw_swapped=swapped)
    if not is_segment(query):
        return incircle_sssp(*sites, query, audit)
    return incircle_ssss(*sites, query, audit)
