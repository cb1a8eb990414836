from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from axincircle.geometry import (Axis, ConfigMismatch, DegenerateSegment,
                                 InstanceRecord, NotAxisAligned, PointSite,
                                 SegmentSite, SitesNotDisjoint, config_tag,
                                 horizontal_segment, orientation,
                                 reflect_instance, reflect_site,
                                 validate_instance, vertical_segment)

coords = st.integers(min_value=-10 ** 9, max_value=10 ** 9)


def test_segment_construction():
    s = SegmentSite.from_endpoints(0, 2, 5, 2)
    assert s.axis is Axis.HORIZONTAL and s.line == 2 and s.span == (0, 5)
    s = SegmentSite.from_endpoints(3, 9, 3, -1)
    assert s.axis is Axis.VERTICAL and s.line == 3 and s.span == (-1, 9)
    with pytest.raises(NotAxisAligned):
        SegmentSite.from_endpoints(0, 0, 1, 1)
    with pytest.raises(DegenerateSegment):
        SegmentSite.from_endpoints(0, 0, 0, 0)


def test_validate_accepts_basic_pppp():
    rec = InstanceRecord("ok", PointSite(0, 5), PointSite(-5, 0),
                         PointSite(5, 0), PointSite(0, 0))
    validate_instance(rec)
    assert rec.config == "PPPP"


def test_validate_rejects_bad_segments():
    bad = SegmentSite(PointSite(0, 0), PointSite(1, 1), Axis.HORIZONTAL)
    rec = InstanceRecord("bad", PointSite(9, 9), PointSite(2, 7), bad,
                         PointSite(0, 1))
    with pytest.raises(NotAxisAligned) as err:
        validate_instance(rec)
    assert err.value.field == "s3"
    degenerate = SegmentSite(PointSite(0, 0), PointSite(0, 0), Axis.HORIZONTAL)
    rec = InstanceRecord("deg", PointSite(9, 9), PointSite(2, 7), degenerate,
                         PointSite(0, 1))
    with pytest.raises(DegenerateSegment):
        validate_instance(rec)


def test_validate_disjointness():
    seg = horizontal_segment(0, -5, 5)
    inside = InstanceRecord("x", PointSite(0, 0), PointSite(1, 7), seg,
                            PointSite(2, 2))
    with pytest.raises(SitesNotDisjoint):
        validate_instance(inside)
    # a shared endpoint is tolerated
    endpoint = InstanceRecord("y", PointSite(-5, 0), PointSite(1, 7), seg,
                              PointSite(2, 2))
    validate_instance(endpoint)
    crossing = InstanceRecord("z", PointSite(9, 9), vertical_segment(0, -1, 1),
                              seg, PointSite(2, 2))
    with pytest.raises(SitesNotDisjoint):
        validate_instance(crossing)
    touching = InstanceRecord("t", PointSite(9, 9), vertical_segment(5, 0, 4),
                              seg, PointSite(2, 2))
    validate_instance(touching)  # meet only at (5, 0), an endpoint of both


def test_validate_config_mismatch():
    rec = InstanceRecord("m", PointSite(0, 5), PointSite(-5, 0),
                         PointSite(5, 0), PointSite(0, 0), config="PPSP")
    with pytest.raises(ConfigMismatch):
        validate_instance(rec)


def test_config_tags():
    p, s = PointSite(0, 0), horizontal_segment(1, 0, 1)
    assert config_tag(p, p, p, p) == "PPPP"
    assert config_tag(p, s, p, s) == "PPSS"
    assert config_tag(s, p, s, p) == "PSSP"
    assert config_tag(s, s, s, s) == "SSSS"


def test_reflect_site_examples():
    assert reflect_site(PointSite(3, 7)) == PointSite(7, 3)
    assert reflect_site(PointSite(4, 4)) == PointSite(4, 4)
    r = reflect_site(horizontal_segment(2, 0, 5))
    assert r.axis is Axis.VERTICAL and r.a == PointSite(2, 0) and r.b == PointSite(2, 5)


@given(coords, coords)
def test_reflect_point_involution(x, y):
    p = PointSite(x, y)
    assert reflect_site(reflect_site(p)) == p


@given(coords, coords, coords, st.booleans())
def test_reflect_segment_involution(c, lo, hi, horiz):
    if lo == hi:
        hi += 1
    s = horizontal_segment(c, lo, hi) if horiz else vertical_segment(c, lo, hi)
    assert reflect_site(reflect_site(s)) == s


def test_reflect_instance_swaps_first_two(e3):
    a, b, cd = e3
    rec = InstanceRecord("r", a, b, cd, PointSite(3, 9))
    ref = reflect_instance(rec)
    assert ref.s1 == reflect_site(b) and ref.s2 == reflect_site(a)
    assert ref.s3.axis is Axis.VERTICAL
    back = reflect_instance(ref)
    assert (back.s2, back.s1, back.s3, back.query) == (rec.s1, rec.s2, rec.s3,
                                                       rec.query)


def test_orientation_examples():
    assert orientation(PointSite(0, 0), PointSite(1, 0), PointSite(0, 1)) == 1
    assert orientation(PointSite(0, 0), PointSite(1, 1), PointSite(2, 2)) == 0
    assert orientation(PointSite(0, 0), PointSite(0, 1), PointSite(1, 0)) == -1


@given(*[coords] * 6)
def test_orientation_antisymmetry(ax, ay, bx, by, cx, cy):
    p, q, r = PointSite(ax, ay), PointSite(bx, by), PointSite(cx, cy)
    assert orientation(p, q, r) == -orientation(q, p, r)
