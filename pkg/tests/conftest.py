import itertools
import random

import pytest

from eszk import Point, Polygon
from eszk.geometry import _is_strict


def det(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])


def on_segment(a, b, p):
    if det(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def point_in_hull(p, pts):
    """Brute-force exact membership of p in conv(pts): Caratheodory over
    single points, segments and triangles."""
    pts = list(set(pts))
    if tuple(p) in {tuple(q) for q in pts}:
        return True
    for a, b in itertools.combinations(pts, 2):
        if on_segment(a, b, p):
            return True
    for a, b, c in itertools.combinations(pts, 3):
        d1, d2, d3 = det(a, b, p), det(b, c, p), det(c, a, p)
        if d1 == 0 and d2 == 0 and d3 == 0:
            # degenerate triple collinear with p; the segment loop above
            # already decided containment in its convex hull
            continue
        if (d1 >= 0 and d2 >= 0 and d3 >= 0) or (d1 <= 0 and d2 <= 0 and d3 <= 0):
            return True
    return False


def extreme_points_brute(pts):
    """A point is extreme iff it is not in the hull of the other points."""
    distinct = list(set(pts))
    return {p for p in distinct if not point_in_hull(p, [q for q in distinct if q != p])}


def random_polygon(rng, n, box):
    return Polygon((rng.randint(-box, box), rng.randint(-box, box)) for _ in range(n))


def random_strict_polygon(rng, n, box):
    while True:
        vs = [Point(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(n)]
        if _is_strict(vs):
            return Polygon(vs)


def random_convex_polygon(rng, n, box):
    """Strictly convex strict n-gon: n corners of a random hull, in order."""
    from eszk import convex_hull

    while True:
        pts = {(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(6 * n)}
        cycle, _ = convex_hull(pts)
        if len(cycle) >= n:
            picks = sorted(rng.sample(range(len(cycle)), n))
            return Polygon(cycle[i] for i in picks)


@pytest.fixture
def seven_gon():
    return Polygon([(-13, 0), (15, 0), (0, 16), (18, 39), (27, -15), (10, 20), (16, 30)])


@pytest.fixture
def unit_square():
    return Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def rng():
    return random.Random(987654321)
