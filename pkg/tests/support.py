"""Independent reference evaluators and small helpers shared by the tests.

The root-sign reference evaluates L at a quadratic root the obvious way:
a 256-bit scaled-integer interval around sqrt(disc), falling back to the
fraction-free formula (2*l0*q2 - l1*q1) +- l1*sqrt(disc) compared by squaring
when the interval straddles zero.  It shares no code with the production
case-analysis path.
"""

from __future__ import annotations

from math import isqrt

from axincircle.geometry import (Axis, InstanceRecord, PointSite, SegmentSite,
                                 Site)
from axincircle.signs import RootChoice

BITS = 256


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def root_sign_interval(l1: int, l0: int, q2: int, q1: int, q0: int,
                       which: RootChoice, bits: int = BITS) -> int | None:
    """Sign of l1*r + l0 by interval arithmetic, or None if undecided."""
    if q2 < 0:
        q2, q1, q0 = -q2, -q1, -q0
    disc = q1 * q1 - 4 * q2 * q0
    scale = 1 << bits
    s_lo = isqrt(disc * scale * scale)
    s_hi = s_lo + 1
    if which is RootChoice.UPPER:
        n_lo, n_hi = -q1 * scale + s_lo, -q1 * scale + s_hi
    else:
        n_lo, n_hi = -q1 * scale - s_hi, -q1 * scale - s_lo
    den = 2 * q2 * scale
    if l1 >= 0:
        v_lo, v_hi = l1 * n_lo + l0 * den, l1 * n_hi + l0 * den
    else:
        v_lo, v_hi = l1 * n_hi + l0 * den, l1 * n_lo + l0 * den
    if v_lo > 0:
        return 1
    if v_hi < 0:
        return -1
    return None


def root_sign_exact(l1: int, l0: int, q2: int, q1: int, q0: int,
                    which: RootChoice) -> int:
    """Sign of l1*r + l0 via (2*l0*q2 - l1*q1) +- l1*sqrt(disc)."""
    if q2 < 0:
        q2, q1, q0 = -q2, -q1, -q0
    disc = q1 * q1 - 4 * q2 * q0
    x = 2 * l0 * q2 - l1 * q1
    b = l1 if which is RootChoice.UPPER else -l1
    r = isqrt(disc)
    if r * r == disc:
        return sgn(x + b * r)
    sx, sb = sgn(x), sgn(b)
    if sb == 0:
        return sx
    if sx == 0 or sx == sb:
        return sb if sx == 0 else sx
    t = x * x - b * b * disc
    return sx if t > 0 else (sb if t < 0 else 0)


def root_sign_reference(l1: int, l0: int, q2: int, q1: int, q0: int,
                        which: RootChoice) -> int:
    v = root_sign_interval(l1, l0, q2, q1, q0, which)
    if v is None:
        v = root_sign_exact(l1, l0, q2, q1, q0, which)
    return v


def root_minus_value_reference(v: int, q2: int, q1: int, q0: int,
                               which: RootChoice) -> int:
    # sign(r - v) == sign of L(r) for L(x) = x - v
    return root_sign_reference(1, -v, q2, q1, q0, which)


def translate_site(s: Site, dx: int, dy: int) -> Site:
    if isinstance(s, PointSite):
        return PointSite(s.x + dx, s.y + dy)
    return SegmentSite(PointSite(s.a.x + dx, s.a.y + dy),
                       PointSite(s.b.x + dx, s.b.y + dy), s.axis)


def translate_record(rec: InstanceRecord, dx: int, dy: int) -> InstanceRecord:
    return InstanceRecord(rec.id, translate_site(rec.s1, dx, dy),
                          translate_site(rec.s2, dx, dy),
                          translate_site(rec.s3, dx, dy),
                          translate_site(rec.query, dx, dy),
                          expected=rec.expected)
