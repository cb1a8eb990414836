from __future__ import annotations

import pytest

from axincircle.geometry import (PointSite, horizontal_segment,
                                 vertical_segment)


@pytest.fixture(scope="session")
def e1():
    """Circle through three points, center (0,0), radius 5."""
    return (PointSite(0, 5), PointSite(-5, 0), PointSite(5, 0))


@pytest.fixture(scope="session")
def e2():
    """Two horizontal segments and a vertical one; center (2,2), radius 2."""
    return (horizontal_segment(0, 0, 10), horizontal_segment(4, 0, 10),
            vertical_segment(0, 0, 4))


@pytest.fixture(scope="session")
def e3():
    """Two points above a horizontal segment; center (0,5), radius 5."""
    return (PointSite(0, 10), PointSite(-4, 8), horizontal_segment(0, -7, 7))


@pytest.fixture(scope="session")
def e4():
    """Point between two horizontal segments; center (0,5), radius 5."""
    return (PointSite(-4, 8), horizontal_segment(0, -7, 7),
            horizontal_segment(10, -7, 7))


@pytest.fixture(scope="session")
def e5():
    """Point with horizontal and vertical segments; center (5,5), radius 5."""
    return (PointSite(2, 9), horizontal_segment(0, -1, 8),
            vertical_segment(10, 1, 9))


@pytest.fixture(scope="session")
def e_r13():
    """Point in the other diagonal quadrant pair; center (25,35), radius 35."""
    return (PointSite(4, 7), horizontal_segment(0, 20, 30),
            vertical_segment(-10, 30, 40))
