"""Sites and predicate instances for axes-aligned Voronoi incircle tests.

Coordinates are arbitrary-precision integers.  Rational inputs must be
pre-scaled by the caller: every expression whose sign is taken is homogeneous
in the coordinates, so clearing a common denominator changes no sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

Sign = int  # -1, 0 or +1

CONFIGS = ("PPPP", "PPPS", "PPSP", "PPSS", "PSSP", "PSSS", "SSSP", "SSSS")


class Axis(Enum):
    HORIZONTAL = "h"
    VERTICAL = "v"


class ValidationError(ValueError):
    """An instance violates a structural invariant; ``field`` names the culprit."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field


class NotAxisAligned(ValidationError):
    pass


class DegenerateSegment(ValidationError):
    pass


class SitesNotDisjoint(ValidationError):
    pass


class ConfigMismatch(ValidationError):
    pass


@dataclass(frozen=True)
class PointSite:
    x: int
    y: int


@dataclass(frozen=True)
class SegmentSite:
    """Axis-aligned segment given by its two endpoints.

    Site segments are open (endpoints excluded); a query segment is closed.
    """

    a: PointSite
    b: PointSite
    axis: Axis

    @classmethod
    def from_endpoints(cls, ax: int, ay: int, bx: int, by: int,
                       where: str = "segment") -> "SegmentSite":
        if ax == bx and ay == by:
            raise DegenerateSegment(where, f"zero-length segment at ({ax}, {ay})")
        if ay == by:
            return cls(PointSite(ax, ay), PointSite(bx, by), Axis.HORIZONTAL)
        if ax == bx:
            return cls(PointSite(ax, ay), PointSite(bx, by), Axis.VERTICAL)
        raise NotAxisAligned(where, f"({ax}, {ay})-({bx}, {by}) is neither "
                                    "horizontal nor vertical")

    @property
    def line(self) -> int:
        """Fixed coordinate of the supporting line (y if horizontal, x if vertical)."""
        return self.a.y if self.axis is Axis.HORIZONTAL else self.a.x

    @property
    def span(self) -> tuple[int, int]:
        """Sorted range of the varying coordinate."""
        if self.axis is Axis.HORIZONTAL:
            lo, hi = self.a.x, self.b.x
        else:
            lo, hi = self.a.y, self.b.y
        return (lo, hi) if lo <= hi else (hi, lo)

    def check(self, where: str = "segment") -> None:
        if self.a == self.b:
            raise DegenerateSegment(where, "zero-length segment")
        if self.axis is Axis.HORIZONTAL and self.a.y != self.b.y:
            raise NotAxisAligned(where, "endpoints disagree with horizontal axis")
        if self.axis is Axis.VERTICAL and self.a.x != self.b.x:
            raise NotAxisAligned(where, "endpoints disagree with vertical axis")


Site = Union[PointSite, SegmentSite]


def horizontal_segment(y: int, x1: int, x2: int) -> SegmentSite:
    return SegmentSite.from_endpoints(x1, y, x2, y)


def vertical_segment(x: int, y1: int, y2: int) -> SegmentSite:
    return SegmentSite.from_endpoints(x, y1, x, y2)


def is_segment(s: Site) -> bool:
    return isinstance(s, SegmentSite)


def orientation(p: PointSite, q: PointSite, r: PointSite) -> Sign:
    """Sign of the ccw turn p->q->r (degree-2 expression)."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (d > 0) - (d < 0)


def reflect_site(s: Site) -> Site:
    """Reflect through the line y=x: points swap coordinates, axes flip."""
    if isinstance(s, PointSite):
        return PointSite(s.y, s.x)
    axis = Axis.VERTICAL if s.axis is Axis.HORIZONTAL else Axis.HORIZONTAL
    return SegmentSite(PointSite(s.a.y, s.a.x), PointSite(s.b.y, s.b.x), axis)


def config_tag(s1: Site, s2: Site, s3: Site, query: Site) -> str:
    nseg = sum(map(is_segment, (s1, s2, s3)))
    return ("PPP", "PPS", "PSS", "SSS")[nseg] + ("S" if is_segment(query) else "P")


@dataclass(frozen=True)
class InstanceRecord:
    """One predicate instance: circle sites s1..s3 in ccw order plus a query."""

    id: str
    s1: Site
    s2: Site
    s3: Site
    query: Site
    config: str = ""
    expected: Sign | None = None

    def __post_init__(self) -> None:
        if not self.config:
            object.__setattr__(self, "config", config_tag(self.s1, self.s2,
                                                          self.s3, self.query))

    @property
    def sites(self) -> tuple[Site, Site, Site]:
        return (self.s1, self.s2, self.s3)


def reflect_instance(rec: InstanceRecord) -> InstanceRecord:
    """Reflect through y=x.  Reflection reverses circle orientation, so the
    first two sites swap to keep the ccw tangency order."""
    return InstanceRecord(rec.id, reflect_site(rec.s2), reflect_site(rec.s1),
                          reflect_site(rec.s3), reflect_site(rec.query),
                          expected=rec.expected)


def _point_inside_open_segment(p: PointSite, s: SegmentSite) -> bool:
    if s.axis is Axis.HORIZONTAL:
        if p.y != s.line:
            return False
        lo, hi = s.span
        return lo < p.x < hi
    if p.x != s.line:
        return False
    lo, hi = s.span
    return lo < p.y < hi


def _open_segments_intersect(s: SegmentSite, t: SegmentSite) -> bool:
    if s.axis is t.axis:
        if s.line != t.line:
            return False
        (alo, ahi), (blo, bhi) = s.span, t.span
        return max(alo, blo) < min(ahi, bhi)
    h, v = (s, t) if s.axis is Axis.HORIZONTAL else (t, s)
    hlo, hhi = h.span
    vlo, vhi = v.span
    return hlo < v.line < hhi and vlo < h.line < vhi


def _sites_disjoint(a: Site, b: Site) -> bool:
    # Open-segment semantics: a point site may coincide with a segment
    # endpoint, but not with an interior point.
    if isinstance(a, PointSite) and isinstance(b, PointSite):
        return a != b
    if isinstance(a, PointSite):
        return not _point_inside_open_segment(a, b)
    if isinstance(b, PointSite):
        return not _point_inside_open_segment(b, a)
    return not _open_segments_intersect(a, b)


def validate_instance(rec: InstanceRecord) -> None:
    """Raise a ValidationError if the record is structurally invalid.

    Does not check that the Voronoi circle exists; that requires the oracle.
    """
    named = (("s1", rec.s1), ("s2", rec.s2), ("s3", rec.s3), ("query", rec.query))
    for name, site in named:
        if isinstance(site, SegmentSite):
            site.check(name)
    sites = named[:3]
    for i in range(3):
        for j in range(i + 1, 3):
            if not _sites_disjoint(sites[i][1], sites[j][1]):
                raise SitesNotDisjoint(sites[i][0],
                                       f"overlaps {sites[j][0]} as a point set")
    derived = config_tag(rec.s1, rec.s2, rec.s3, rec.query)
    if rec.config != derived:
        raise ConfigMismatch("config", f"tag {rec.config!r} does not match "
                                       f"site types ({derived})")
