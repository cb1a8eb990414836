"""Deterministic random instance generation around Pythagorean circles.

Each instance starts from an integer center and a radius that is a multiple of
a Pythagorean hypotenuse, so the circle carries plenty of lattice points and
its four axis-parallel tangent lines have integer offsets.  Point sites are
lattice points of the circle, segment sites live on tangent lines with the
tangency foot strictly inside, and with the configured probability the query
is placed exactly on the circle boundary (expected sign 0).

Output is fully determined by (seed, index): each instance derives its own RNG
stream, so parallel workers cannot perturb the result.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .geometry import (CONFIGS, Axis, InstanceRecord, PointSite, SegmentSite,
                       Site, orientation, validate_instance)
from .oracle import NoValidCircle, oracle_incircle, solve_voronoi_circle

MAX_ATTEMPTS = 64
MIN_BOUND = 16

_TRIPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25),
            (20, 21, 29), (12, 35, 37), (9, 40, 41), (28, 45, 53))

_SIDES = ("top", "bottom", "left", "right")


class GenerationExhausted(RuntimeError):
    def __init__(self, index: int, config: str) -> None:
        super().__init__(f"gave up after {MAX_ATTEMPTS} attempts on "
                         f"instance {index} ({config})")


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


def _instance_rng(seed: int, index: int) -> random.Random:
    return random.Random(_splitmix64(_splitmix64(seed) ^ index))


@dataclass(frozen=True)
class _Circle:
    kx: int
    ky: int
    r: int
    leg_a: int
    leg_b: int

    def lattice_points(self) -> list[tuple[int, int]]:
        r, a, b = self.r, self.leg_a, self.leg_b
        offs = [(r, 0), (0, r), (-r, 0), (0, -r)]
        for dx, dy in ((a, b), (b, a)):
            offs += [(dx, dy), (-dx, dy), (dx, -dy), (-dx, -dy)]
        return [(self.kx + dx, self.ky + dy) for dx, dy in offs]

    def foot(self, side: str) -> tuple[int, int]:
        return {"top": (self.kx, self.ky + self.r),
                "bottom": (self.kx, self.ky - self.r),
                "left": (self.kx - self.r, self.ky),
                "right": (self.kx + self.r, self.ky)}[side]


def _draw_circle(rng: random.Random, bound: int) -> _Circle:
    usable = [t for t in _TRIPLES if 4 * t[2] <= bound] or [_TRIPLES[0]]
    p, q, h = rng.choice(usable)
    m = rng.randint(1, max(1, bound // (4 * h)))
    r = m * h
    lim = max(0, bound - 2 * r)
    kx = rng.randint(-lim, lim)
    ky = rng.randint(-lim, lim)
    return _Circle(kx, ky, r, m * p, m * q)


def _tangent_segment(rng: random.Random, c: _Circle, side: str) -> SegmentSite:
    fx, fy = c.foot(side)
    # extents stay below r so segments on adjacent tangent lines cannot meet
    e1 = rng.randint(1, c.r - 1)
    e2 = rng.randint(1, c.r - 1)
    if side in ("top", "bottom"):
        x1, y1, x2, y2 = fx - e1, fy, fx + e2, fy
    else:
        x1, y1, x2, y2 = fx, fy - e1, fx, fy + e2
    if rng.random() < 0.5:
        (x1, y1), (x2, y2) = (x2, y2), (x1, y1)
    return SegmentSite.from_endpoints(x1, y1, x2, y2)


def _pick_points(rng: random.Random, c: _Circle, n: int,
                 banned: set[tuple[int, int]]) -> list[PointSite]:
    pool = [p for p in c.lattice_points() if p not in banned]
    chosen = rng.sample(pool, n)
    return [PointSite(x, y) for x, y in chosen]


def _ccw_sites(rng: random.Random, tagged: list[tuple[Site, tuple[int, int]]]):
    """Order the (site, anchor) pairs counterclockwise, then rotate randomly."""
    anchors = [PointSite(*a) for _, a in tagged]
    if orientation(*anchors) == 0:
        return None
    if orientation(*anchors) < 0:
        tagged = [tagged[0], tagged[2], tagged[1]]
    k = rng.randrange(3)
    tagged = tagged[k:] + tagged[:k]
    return [s for s, _ in tagged]


def _query_point(rng: random.Random, c: _Circle) -> PointSite:
    return PointSite(rng.randint(c.kx - 2 * c.r, c.kx + 2 * c.r),
                     rng.randint(c.ky - 2 * c.r, c.ky + 2 * c.r))


def _query_segment(rng: random.Random, c: _Circle) -> SegmentSite:
    horizontal = rng.random() < 0.5
    lo, hi = -2 * c.r, 2 * c.r
    off = rng.randint(lo, hi)
    a = rng.randint(lo, hi)
    b = rng.randint(lo, hi)
    while b == a:
        b = rng.randint(lo, hi)
    if horizontal:
        return SegmentSite.from_endpoints(c.kx + a, c.ky + off,
                                          c.kx + b, c.ky + off)
    return SegmentSite.from_endpoints(c.kx + off, c.ky + a,
                                      c.kx + off, c.ky + b)


def _on_circle_point(rng: random.Random, c: _Circle,
                     banned: set[tuple[int, int]]) -> PointSite:
    pool = [p for p in c.lattice_points() if p not in banned]
    return PointSite(*rng.choice(pool))


def _touching_segment(rng: random.Random, c: _Circle) -> SegmentSite:
    """A segment meeting the circle in exactly one boundary point."""
    if rng.random() < 0.5:
        # tangent-line segment containing the foot
        side = rng.choice(_SIDES)
        fx, fy = c.foot(side)
        e1 = rng.randint(0, 2 * c.r)
        e2 = rng.randint(0 if e1 else 1, 2 * c.r)
        if side in ("top", "bottom"):
            return SegmentSite.from_endpoints(fx - e1, fy, fx + e2, fy)
        return SegmentSite.from_endpoints(fx, fy - e1, fx, fy + e2)
    # spur: start on the circle, run straight away from it
    x0, y0 = rng.choice(c.lattice_points())
    length = rng.randint(1, 2 * c.r)
    if rng.random() < 0.5:
        d = (x0 > c.kx) - (x0 < c.kx) or rng.choice((-1, 1))
        return SegmentSite.from_endpoints(x0, y0, x0 + d * length, y0)
    d = (y0 > c.ky) - (y0 < c.ky) or rng.choice((-1, 1))
    return SegmentSite.from_endpoints(x0, y0, x0, y0 + d * length)


def _build(rng: random.Random, config: str, bound: int,
           degenerate: bool) -> InstanceRecord | None:
    c = _draw_circle(rng, bound)
    kind = config[:3]
    tagged: list[tuple[Site, tuple[int, int]]] = []
    used_feet: set[tuple[int, int]] = set()

    if kind == "SSS":
        pair = rng.choice((("top", "bottom"), ("left", "right")))
        perp = rng.choice(("left", "right") if pair[0] == "top"
                          else ("top", "bottom"))
        sides = [pair[0], pair[1], perp]
    elif kind == "PSS":
        if rng.random() < 0.5:
            sides = list(rng.choice((("top", "bottom"), ("left", "right"))))
        else:
            sides = [rng.choice(("top", "bottom")), rng.choice(("left", "right"))]
            rng.shuffle(sides)
    elif kind == "PPS":
        sides = [rng.choice(_SIDES)]
    else:
        sides = []

    for side in sides:
        seg = _tangent_segment(rng, c, side)
        foot = c.foot(side)
        used_feet.add(foot)
        tagged.append((seg, foot))

    points = _pick_points(rng, c, 3 - len(sides), used_feet)
    for p in points:
        tagged.append((p, (p.x, p.y)))
    rng.shuffle(tagged)
    sites = _ccw_sites(rng, tagged)
    if sites is None:
        return None

    point_coords = {(p.x, p.y) for p in points}
    if degenerate:
        if config[3] == "P":
            query: Site = _on_circle_point(rng, c, point_coords)
        else:
            query = _touching_segment(rng, c)
        expected: int | None = 0
    else:
        query = _query_point(rng, c) if config[3] == "P" else _query_segment(rng, c)
        expected = None
    return InstanceRecord("", sites[0], sites[1], sites[2], query,
                          expected=expected)


def generate_instance(seed: int, index: int, config: str, bound: int,
                      degenerate_fraction: Fraction) -> InstanceRecord:
    """Build the ``index``-th valid instance for the given configuration."""
    if config not in CONFIGS:
        raise ValueError(f"unknown configuration {config!r}")
    if bound < MIN_BOUND:
        raise ValueError(f"bound must be at least {MIN_BOUND}")
    rng = _instance_rng(seed, index)
    degenerate = rng.randrange(degenerate_fraction.denominator) \
        < degenerate_fraction.numerator
    for _ in range(MAX_ATTEMPTS):
        rec = _build(rng, config, bound, degenerate)
        if rec is None:
            continue
        try:
            validate_instance(rec)
            solve_voronoi_circle(rec.s1, rec.s2, rec.s3)
        except (ValueError, NoValidCircle):
            continue
        if degenerate and oracle_incircle(rec.s1, rec.s2, rec.s3,
                                          rec.query) != 0:
            continue
        rec = InstanceRecord(f"{index:07d}-{config.lower()}", rec.s1, rec.s2,
                             rec.s3, rec.query, expected=rec.expected)
        return rec
    raise GenerationExhausted(index, config)


def config_for_index(config_filter: str, index: int) -> str:
    """Round-robin over all configurations when the filter is "mixed"."""
    if config_filter == "mixed":
        return CONFIGS[index % len(CONFIGS)]
    return config_filter


def iter_instances(seed: int, count: int, config_filter: str, bound: int,
                   degenerate_fraction: Fraction):
    for index in range(count):
        cfg = config_for_index(config_filter, index)
        yield generate_instance(seed, index, cfg, bound, degenerate_fraction)
