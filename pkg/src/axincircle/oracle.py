"""Independent exact reference for the incircle predicate.

The oracle solves for the Voronoi circle in the quadratic extension field
Q(sqrt(D)) and answers queries by exact distance comparison.  It deliberately
avoids the degree-bounded machinery: candidate centers come from solving the
governing system (bisector substituted into the circle or parabola condition),
both quadratic roots are tried, and the surviving branch is the one whose
tangency points appear in counterclockwise order.  Segment queries use exact
clamped point-to-segment distances rather than straddle tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .geometry import (Axis, PointSite, SegmentSite, Sign, Site, is_segment)
from .signs import RootChoice


class MixedDiscriminant(ValueError):
    pass


class NoValidCircle(ValueError):
    pass


def _isign(x: int) -> int:
    return (x > 0) - (x < 0)


class QuadExt:
    """(a + b*sqrt(d)) / c with integer a, b, c > 0 and d >= 0.

    d == 0 encodes a rational; a perfect-square d is rationalized away on
    construction so that sign computations can short-circuit.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int) -> None:
        if c == 0:
            raise ZeroDivisionError("QuadExt denominator")
        if d < 0:
            raise ValueError("negative radicand")
        if b:
            r = isqrt(d)
            if r * r == d:
                a += b * r
                b = 0
        if not b:
            d = 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(abs(a), abs(b)), c)
        if g > 1:
            a //= g
            b //= g
            c //= g
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def from_int(cls, n: int) -> "QuadExt":
        return cls(n, 0, 1, 0)

    @classmethod
    def from_ratio(cls, num: int, den: int) -> "QuadExt":
        return cls(num, 0, den, 0)

    def _join(self, other: "QuadExt") -> int:
        if self.d and other.d and self.d != other.d:
            raise MixedDiscriminant(f"{self.d} vs {other.d}")
        return self.d or other.d

    def __add__(self, other: "QuadExt") -> "QuadExt":
        d = self._join(other)
        return QuadExt(self.a * other.c + other.a * self.c,
                       self.b * other.c + other.b * self.c,
                       self.c * other.c, d)

    def __sub__(self, other: "QuadExt") -> "QuadExt":
        return self + (-other)

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.c, self.d)

    def __mul__(self, other: "QuadExt") -> "QuadExt":
        d = self._join(other)
        return QuadExt(self.a * other.a + self.b * other.b * d,
                       self.a * other.b + self.b * other.a,
                       self.c * other.c, d)

    def sq(self) -> "QuadExt":
        return self * self

    def sign(self) -> Sign:
        sa, sb = _isign(self.a), _isign(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        t = self.a * self.a - self.b * self.b * self.d
        return sa if t > 0 else (sb if t < 0 else 0)

    def compare(self, other: "QuadExt") -> Sign:
        return (self - other).sign()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __repr__(self) -> str:
        return f"({self.a} + {self.b}*sqrt({self.d}))/{self.c}"


@dataclass(frozen=True)
class CircleSolution:
    xk: QuadExt
    yk: QuadExt
    rho2: QuadExt
    branch: RootChoice | None


def _qe_affine(p: int, q: int, r: int, x: QuadExt) -> QuadExt:
    """(p*x + q) / r evaluated exactly in the field of x."""
    return QuadExt(p * x.a + q * x.c, p * x.b, r * x.c, x.d)


def _quad_roots(a: int, b: int, c: int) -> list[tuple[QuadExt, RootChoice]]:
    """Real roots of a*x^2 + b*x + c (a != 0) tagged lower/upper."""
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    roots = []
    for s in (-1, 1):
        root = QuadExt(-b, s, 2 * a, disc)
        lower = (s < 0) == (a > 0)
        roots.append((root, RootChoice.LOWER if lower else RootChoice.UPPER))
    if disc == 0:
        return roots[:1]
    return roots


def _transpose_site(s: Site) -> Site:
    if isinstance(s, PointSite):
        return PointSite(s.y, s.x)
    axis = Axis.VERTICAL if s.axis is Axis.HORIZONTAL else Axis.HORIZONTAL
    return SegmentSite(PointSite(s.a.y, s.a.x), PointSite(s.b.y, s.b.x), axis)


def _candidates_ppp(a: PointSite, b: PointSite, c: PointSite):
    den = 2 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))
    if den == 0:
        return []
    mb = (b.x - a.x) ** 2 + (b.y - a.y) ** 2
    mc = (c.x - a.x) ** 2 + (c.y - a.y) ** 2
    ux = (c.y - a.y) * mb - (b.y - a.y) * mc
    uy = (b.x - a.x) * mc - (c.x - a.x) * mb
    xk = QuadExt.from_ratio(a.x * den + ux, den)
    yk = QuadExt.from_ratio(a.y * den + uy, den)
    rho2 = (xk - QuadExt.from_int(a.x)).sq() + (yk - QuadExt.from_int(a.y)).sq()
    return [(xk, yk, rho2, None)]


def _candidates_pps(a: PointSite, b: PointSite, seg: SegmentSite):
    """Circle through two points, tangent to a horizontal line y = y0."""
    y0 = seg.line
    out = []
    if a.y != b.y:
        alpha1 = 2 * (a.x - b.x)
        alpha0 = b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y
        beta = 2 * (b.y - a.y)
        # substitute the bisector into (x - ax)^2 = (ay - y0)(2y - ay - y0)
        qa = beta
        qb = -2 * beta * a.x - 2 * (a.y - y0) * alpha1
        qc = beta * a.x * a.x - (a.y - y0) * (2 * alpha0 - beta * (a.y + y0))
        for xk, branch in _quad_roots(qa, qb, qc):
            yk = _qe_affine(alpha1, alpha0, beta, xk)
            rho2 = (yk - QuadExt.from_int(y0)).sq()
            out.append((xk, yk, rho2, branch))
    else:
        if a.y == y0:
            return []
        # bisector is vertical: single tangent circle
        num = (b.x - a.x) ** 2 + 4 * (a.y * a.y - y0 * y0)
        den = 8 * (a.y - y0)
        xk = QuadExt.from_ratio(a.x + b.x, 2)
        yk = QuadExt.from_ratio(num, den)
        rho2 = (yk - QuadExt.from_int(y0)).sq()
        out.append((xk, yk, rho2, None))
    return out


def _candidates_pss(a: PointSite, s2: SegmentSite, s3: SegmentSite):
    if s2.axis is s3.axis:
        # both horizontal here (callers transpose the both-vertical case)
        yc, yf = s2.line, s3.line
        if yc == yf:
            return []
        n = (a.y - yf) * (yc - a.y)
        if n < 0:
            return []
        yk = QuadExt.from_ratio(yc + yf, 2)
        rho2 = QuadExt.from_ratio((yc - yf) ** 2, 4)
        out = []
        sides = ((-1, RootChoice.LOWER), (1, RootChoice.UPPER)) if n else \
                ((1, None),)
        for s, branch in sides:
            out.append((QuadExt(a.x, s, 1, n), yk, rho2, branch))
        return out
    h, v = (s2, s3) if s2.axis is Axis.HORIZONTAL else (s3, s2)
    yc, xf = h.line, v.line
    out = []
    for eps in (1, -1):
        # center on y = eps*x + (yc - eps*xf); tangent to both lines
        g = yc - a.y - eps * xf
        qb = -2 * a.x + 2 * eps * g + 2 * xf
        qc = a.x * a.x + g * g - xf * xf
        for xk, branch in _quad_roots(1, qb, qc):
            yk = _qe_affine(eps, yc - eps * xf, 1, xk)
            rho2 = (xk - QuadExt.from_int(xf)).sq()
            out.append((xk, yk, rho2, branch))
    return out


def _candidates_sss(s1: SegmentSite, s2: SegmentSite, s3: SegmentSite):
    # two horizontal lines plus one vertical (callers transpose otherwise)
    pair = [s for s in (s1, s2, s3) if s.axis is Axis.HORIZONTAL]
    perp = [s for s in (s1, s2, s3) if s.axis is Axis.VERTICAL]
    if len(pair) != 2:
        return []
    ya, yc = pair[0].line, pair[1].line
    xf = perp[0].line
    if ya == yc:
        return []
    yk = QuadExt.from_ratio(ya + yc, 2)
    rho2 = QuadExt.from_ratio((ya - yc) ** 2, 4)
    out = []
    for s in (-1, 1):
        xk = QuadExt.from_ratio(2 * xf + s * abs(ya - yc), 2)
        out.append((xk, yk, rho2, None))
    return out


def tangency_point(site: Site, sol: CircleSolution) -> tuple[QuadExt, QuadExt]:
    """Exact point where the solution circle meets one of its defining sites."""
    if isinstance(site, PointSite):
        return (QuadExt.from_int(site.x), QuadExt.from_int(site.y))
    if site.axis is Axis.HORIZONTAL:
        return (sol.xk, QuadExt.from_int(site.line))
    return (QuadExt.from_int(site.line), sol.yk)


def ccw_order_ok(t1: tuple[QuadExt, QuadExt], t2: tuple[QuadExt, QuadExt],
                 t3: tuple[QuadExt, QuadExt]) -> bool:
    """Three distinct concyclic points are listed counterclockwise iff their
    orientation determinant is positive."""
    d = (t2[0] - t1[0]) * (t3[1] - t1[1]) - (t2[1] - t1[1]) * (t3[0] - t1[0])
    return d.sign() > 0


def _candidate_ok(sites: tuple[Site, Site, Site], xk: QuadExt, yk: QuadExt,
                  rho2: QuadExt) -> bool:
    if rho2.sign() <= 0:
        return False
    sol = CircleSolution(xk, yk, rho2, None)
    tps = []
    for site in sites:
        tx, ty = tangency_point(site, sol)
        # tangency residual must vanish exactly
        res = (tx - xk).sq() + (ty - yk).sq() - rho2
        if not res.is_zero():
            return False
        if is_segment(site):
            lo, hi = site.span
            t = tx if site.axis is Axis.HORIZONTAL else ty
            if not (t.compare(QuadExt.from_int(lo)) > 0
                    and t.compare(QuadExt.from_int(hi)) < 0):
                return False
        tps.append((tx, ty))
    for i in range(3):
        for j in range(i + 1, 3):
            if (tps[i][0] - tps[j][0]).is_zero() and (tps[i][1] - tps[j][1]).is_zero():
                return False
    return ccw_order_ok(*tps)


def _solve_candidates(s1: Site, s2: Site, s3: Site):
    sites = (s1, s2, s3)
    segs = [i for i, s in enumerate(sites) if is_segment(s)]
    nseg = len(segs)
    transposed = False
    if nseg == 1:
        i = segs[0]
        rot = (sites[(i + 1) % 3], sites[(i + 2) % 3], sites[i])
        if rot[2].axis is Axis.VERTICAL:
            rot, transposed = tuple(map(_transpose_site, rot)), True
        cands = _candidates_pps(*rot)
    elif nseg == 2:
        i = [j for j in range(3) if j not in segs][0]
        rot = (sites[i], sites[(i + 1) % 3], sites[(i + 2) % 3])
        if rot[1].axis is Axis.VERTICAL and rot[2].axis is Axis.VERTICAL:
            rot, transposed = tuple(map(_transpose_site, rot)), True
        cands = _candidates_pss(*rot)
    elif nseg == 0:
        cands = _candidates_ppp(*sites)
    else:
        axes = [s.axis for s in sites]
        odd = [i for i in range(3) if axes.count(axes[i]) == 1]
        if not odd:
            return []
        rot = sites
        if axes[odd[0]] is Axis.HORIZONTAL:
            rot, transposed = tuple(map(_transpose_site, rot)), True
        cands = _candidates_sss(*rot)
    if transposed:
        cands = [(yk, xk, rho2, br) for (xk, yk, rho2, br) in cands]
    return [c for c in cands if _candidate_ok(sites, c[0], c[1], c[2])]


@lru_cache(maxsize=8192)
def solve_voronoi_circle(s1: Site, s2: Site, s3: Site) -> CircleSolution:
    """Exact Voronoi circle discovering s1, s2, s3 counterclockwise.

    Raises NoValidCircle when no tangency/side/order-consistent circle exists.
    """
    passing = _solve_candidates(s1, s2, s3)
    if not passing:
        raise NoValidCircle(f"no circle for {s1}, {s2}, {s3}")
    if len(passing) > 1:
        # geometrically impossible for valid sites; kept as a tripwire
        raise NoValidCircle(f"ambiguous circle for {s1}, {s2}, {s3}")
    xk, yk, rho2, branch = passing[0]
    return CircleSolution(xk, yk, rho2, branch)


def circle_exists(s1: Site, s2: Site, s3: Site) -> bool:
    try:
        solve_voronoi_circle(s1, s2, s3)
        return True
    except NoValidCircle:
        return False


def _point_dist2(sol: CircleSolution, x: int, y: int) -> QuadExt:
    return (sol.xk - QuadExt.from_int(x)).sq() + (sol.yk - QuadExt.from_int(y)).sq()


def _segment_dist2(sol: CircleSolution, seg: SegmentSite) -> QuadExt:
    lo, hi = seg.span
    if seg.axis is Axis.HORIZONTAL:
        along, other, line = sol.xk, sol.yk, seg.line
    else:
        along, other, line = sol.yk, sol.xk, seg.line
    d2 = (other - QuadExt.from_int(line)).sq()
    if along.compare(QuadExt.from_int(lo)) < 0:
        d2 = d2 + (along - QuadExt.from_int(lo)).sq()
    elif along.compare(QuadExt.from_int(hi)) > 0:
        d2 = d2 + (along - QuadExt.from_int(hi)).sq()
    return d2


def oracle_incircle(s1: Site, s2: Site, s3: Site, query: Site) -> Sign:
    """Reference predicate: +1 disjoint from the closed disk, 0 tangent,
    -1 meeting the open disk."""
    sol = solve_voronoi_circle(s1, s2, s3)
    if isinstance(query, PointSite):
        d2 = _point_dist2(sol, query.x, query.y)
    else:
        d2 = _segment_dist2(sol, query)
    return (d2 - sol.rho2).sign()
