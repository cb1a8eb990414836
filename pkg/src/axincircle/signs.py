"""Degree-tagged exact integers and sign evaluation at quadratic roots.

Every quantity whose sign a predicate inspects is an exact integer carrying a
formal algebraic degree: input coordinates have degree 1, literal constants
degree 0, multiplication adds degrees and addition takes the max.  Taking a
sign reports the operand's degree to the active audit accumulator, which is
how the per-configuration degree bounds are certified at runtime.

The core procedure evaluates the sign of a linear polynomial L at a chosen
root of a quadratic Q without ever forming the square root: it inspects
sign(Q(x*)) and sign(Q'(x*)) at the root x* of L, both available fraction-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ZeroLeadingCoefficient(ValueError):
    pass


class NegativeDiscriminant(ArithmeticError):
    pass


class InhomogeneousSum(AssertionError):
    """Operands of a sum disagree in formal degree; almost surely a formula typo."""


class DegreeTagged:
    """An exact integer paired with its formal algebraic degree."""

    __slots__ = ("value", "degree")

    def __init__(self, value: int, degree: int) -> None:
        self.value = value
        self.degree = degree

    def __add__(self, other: "DegreeTagged") -> "DegreeTagged":
        if self.value and other.value and self.degree != other.degree:
            raise InhomogeneousSum(f"{self.degree} + {other.degree}")
        return DegreeTagged(self.value + other.value, max(self.degree, other.degree))

    def __sub__(self, other: "DegreeTagged") -> "DegreeTagged":
        if self.value and other.value and self.degree != other.degree:
            raise InhomogeneousSum(f"{self.degree} - {other.degree}")
        return DegreeTagged(self.value - other.value, max(self.degree, other.degree))

    def __mul__(self, other: "DegreeTagged") -> "DegreeTagged":
        return DegreeTagged(self.value * other.value, self.degree + other.degree)

    def __neg__(self) -> "DegreeTagged":
        return DegreeTagged(-self.value, self.degree)

    def flip(self, s: int) -> "DegreeTagged":
        """Multiply by a sign in {-1, +1} without touching the degree."""
        return self if s >= 0 else -self

    def __repr__(self) -> str:
        return f"DegreeTagged({self.value}, deg={self.degree})"


def dt(value: int, degree: int = 0) -> DegreeTagged:
    return DegreeTagged(value, degree)


def coord(value: int) -> DegreeTagged:
    """Wrap an input coordinate (formal degree 1)."""
    return DegreeTagged(value, 1)


class DegreeAudit:
    """Per-call accumulator of the maximum degree whose sign was taken."""

    __slots__ = ("max_degree", "signs_taken")

    def __init__(self) -> None:
        self.max_degree = 0
        self.signs_taken = 0

    def observe(self, degree: int) -> None:
        self.signs_taken += 1
        if degree > self.max_degree:
            self.max_degree = degree


def sign_of(v: DegreeTagged, audit: DegreeAudit | None = None) -> tuple[int, int]:
    """Exact sign of ``v`` plus the degree reported to the audit."""
    if audit is not None:
        audit.observe(v.degree)
    x = v.value
    return ((x > 0) - (x < 0)), v.degree


class RootChoice(Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class LinearPoly:
    l1: DegreeTagged
    l0: DegreeTagged


@dataclass(frozen=True)
class QuadraticPoly:
    """q2*x^2 + q1*x + q0; a degenerate quadratic (q2 == 0) is tolerated by the
    root operations and treated as the linear polynomial q1*x + q0."""

    q2: DegreeTagged
    q1: DegreeTagged
    q0: DegreeTagged


class BandPosition(Enum):
    INSIDE = "inside"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


def sign_linear_at_root(lin: LinearPoly, quad: QuadraticPoly,
                        which: RootChoice,
                        audit: DegreeAudit | None = None) -> int:
    """Sign of l1*r + l0 where r is the chosen root x1 <= x2 of the quadratic.

    Requires a non-negative discriminant; a violation is raised only when it
    is detectable from the inspected signs.  l1 == 0 falls back to sign(l0);
    a degenerate quadratic uses its unique linear root.
    """
    l1, l0 = lin.l1, lin.l0
    if quad.q2.value == 0:
        if quad.q1.value == 0:
            raise ZeroLeadingCoefficient("quadratic has no root")
        sq1, _ = sign_of(quad.q1, audit)
        # L(-q0/q1) has the sign of (l0*q1 - l1*q0) * sign(q1)
        s, _ = sign_of(l0 * quad.q1 - l1 * quad.q0, audit)
        return s * sq1
    if l1.value == 0:
        s, _ = sign_of(l0, audit)
        return s
    sl, _ = sign_of(l1, audit)
    sq2, _ = sign_of(quad.q2, audit)
    l1n, l0n = l1.flip(sl), l0.flip(sl)
    q2n, q1n, q0n = quad.q2.flip(sq2), quad.q1.flip(sq2), quad.q0.flip(sq2)

    qv = q2n * l0n * l0n - q1n * l1n * l0n + q0n * l1n * l1n
    bound = 2 * l1.degree + quad.q2.degree + 2
    assert qv.degree <= bound, "sign expression exceeds its degree budget"
    s_q, _ = sign_of(qv, audit)
    if s_q < 0:
        # the root of L lies strictly between x1 and x2
        core = 1 if which is RootChoice.UPPER else -1
        return sl * core

    dv = q1n * l1n - dt(2) * q2n * l0n
    assert dv.degree <= bound
    s_d, _ = sign_of(dv, audit)
    if s_q > 0:
        if s_d == 0:
            raise NegativeDiscriminant("vertex above axis: no real roots")
        core = 1 if s_d < 0 else -1
        return sl * core
    # the root of L coincides with one of the roots of Q
    if s_d == 0:
        return 0
    if s_d < 0:  # it is x1
        core = 0 if which is RootChoice.LOWER else 1
    else:        # it is x2
        core = 0 if which is RootChoice.UPPER else -1
    return sl * core


def compare_value_to_root(v: DegreeTagged, quad: QuadraticPoly,
                          which: RootChoice,
                          audit: DegreeAudit | None = None) -> int:
    """Sign of r - v for the chosen root r of the quadratic."""
    if quad.q2.value == 0:
        if quad.q1.value == 0:
            raise ZeroLeadingCoefficient("quadratic has no root")
        sq1, _ = sign_of(quad.q1, audit)
        s, _ = sign_of(quad.q1 * v + quad.q0, audit)
        return -s * sq1
    sq2, _ = sign_of(quad.q2, audit)
    q2n, q1n, q0n = quad.q2.flip(sq2), quad.q1.flip(sq2), quad.q0.flip(sq2)
    s_q, _ = sign_of(q2n * v * v + q1n * v + q0n, audit)
    if s_q < 0:
        # v strictly between the roots
        return 1 if which is RootChoice.UPPER else -1
    s_d, _ = sign_of(dt(2) * q2n * v + q1n, audit)
    if s_q > 0:
        if s_d == 0:
            raise NegativeDiscriminant("vertex above axis: no real roots")
        return 1 if s_d < 0 else -1
    # v is one of the roots
    if s_d == 0:
        return 0
    if s_d < 0:  # v == x1
        return 0 if which is RootChoice.LOWER else 1
    return 0 if which is RootChoice.UPPER else -1


def band_position(v: DegreeTagged, quad: QuadraticPoly,
                  audit: DegreeAudit | None = None) -> BandPosition:
    """Locate v relative to the open interval between the two roots."""
    if quad.q2.value == 0:
        raise ZeroLeadingCoefficient("band test needs a true quadratic")
    sq2, _ = sign_of(quad.q2, audit)
    s_q, _ = sign_of(quad.q2 * v * v + quad.q1 * v + quad.q0, audit)
    if s_q == 0:
        return BandPosition.ON_BOUNDARY
    return BandPosition.INSIDE if s_q == -sq2 else BandPosition.OUTSIDE
