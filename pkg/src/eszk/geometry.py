"""Exact integer planar primitives.

Orientation determinant, polygon classification (strict / ordinary /
dimension), strict convex hull, and randomized perturbation into strict
position.  Everything in this module is integer arithmetic end to end;
no floating point is used or produced.  Coordinates are capped at
COORD_BOUND so that the orientation determinant of any admissible triple
fits in a double-width signed integer, which keeps the file formats
portable to fixed-width implementations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import ExhaustionError, InputError

COORD_BOUND = 10**9

# Resample cap for perturbation; failure is astronomically unlikely for
# jitter >= 1 but the loop must stay total.
PERTURB_MAX_ATTEMPTS = 64


class Point(NamedTuple):
    x: int
    y: int


def _check_coord(value, label: str = "coordinate") -> int:
    if type(value) is not int:
        raise InputError(f"{label} must be a plain int, got {type(value).__name__}: {value!r}")
    if not -COORD_BOUND <= value <= COORD_BOUND:
        raise InputError(f"{label} {value} exceeds the bound {COORD_BOUND}")
    return value


def as_point(p) -> Point:
    """Coerce an (x, y) pair to a validated Point."""
    try:
        x, y = p
    except (TypeError, ValueError):
        raise InputError(f"not an (x, y) pair: {p!r}") from None
    return Point(_check_coord(x, "x"), _check_coord(y, "y"))


class Polygon:
    """Ordered sequence of at least one integer point.

    Order matters and duplicate vertices are allowed; edge i joins vertex
    i to vertex i+1, with the last edge closing back to vertex 0.
    Instances are immutable value objects.
    """

    __slots__ = ("vertices",)

    def __init__(self, points: Iterable):
        vs = tuple(as_point(p) for p in points)
        if not vs:
            raise InputError("a polygon needs at least one vertex")
        object.__setattr__(self, "vertices", vs)

    def __setattr__(self, name, value):
        raise AttributeError("Polygon is immutable")

    def __reduce__(self):
        # bypass slot-state restoration, which the setattr guard blocks
        return (Polygon, (self.vertices,))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "Polygon(%s)" % (list(map(tuple, self.vertices)),)

    def encoding(self) -> tuple[int, ...]:
        """Flattened (x0, y0, ..., xn-1, yn-1) image of the vertex list."""
        return tuple(c for v in self.vertices for c in v)


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    strict: bool       # no three vertices (by index) collinear
    ordinary: bool     # all vertices pairwise distinct
    dimension: int     # 0 = single point, 1 = collinear, 2 = planar


def _det(ax, ay, bx, by, cx, cy):
    # Twice the signed area of triangle (a, b, c).
    return (bx - ax) * (cy - ay) - (cx - ax) * (by - ay)


def orient2d(a, b, c) -> int:
    """Signed orientation determinant of the ordered point triple (a, b, c).

    Positive means a counterclockwise turn, negative clockwise, zero
    collinear.  Antisymmetric under swapping any two arguments and
    invariant under translation.  Exact; inputs must respect COORD_BOUND.
    """
    ax, ay = as_point(a)
    bx, by = as_point(b)
    cx, cy = as_point(c)
    return _det(ax, ay, bx, by, cx, cy)


def _dimension(vs) -> int:
    first = vs[0]
    others = [v for v in vs if v != first]
    if not others:
        return 0
    b = others[0]
    for c in others[1:]:
        if _det(first.x, first.y, b.x, b.y, c.x, c.y) != 0:
            return 2
    return 1


def _is_strict(vs) -> bool:
    n = len(vs)
    if n < 3:
        return True
    if len(set(vs)) != n:
        # two equal vertices plus any third are collinear
        return False
    for (ax, ay), (bx, by), (cx, cy) in itertools.combinations(vs, 3):
        if (bx - ax) * (cy - ay) == (cx - ax) * (by - ay):
            return False
    return True


def classify(P: Polygon) -> ClassificationReport:
    """Report vertex count, strictness, ordinariness and dimension."""
    vs = P.vertices
    n = len(vs)
    ordinary = len(set(vs)) == n
    dimension = _dimension(vs)
    if n < 3:
        strict = True
    elif not ordinary or dimension < 2:
        strict = False
    else:
        strict = _is_strict(vs)
    return ClassificationReport(n=n, strict=strict, ordinary=ordinary, dimension=dimension)


def convex_hull(points) -> tuple[list[Point], frozenset[Point]]:
    """Strict convex hull of a point set.

    Returns (hull_cycle, extreme_points): the cycle lists exactly the
    extreme points in counterclockwise order, never a point interior to a
    hull edge.  Degenerate inputs give a one-point cycle (single distinct
    point) or a two-point cycle (collinear set: the two endpoints).
    Coincident input points are deduplicated before the scan.
    """
    pts = sorted({as_point(p) for p in points})
    if not pts:
        raise InputError("convex_hull needs at least one point")
    if len(pts) == 1:
        return [pts[0]], frozenset(pts)

    def half(seq):
        h = []
        for p in seq:
            # <= 0 pops collinear points, keeping corners only
            while len(h) >= 2 and _det(h[-2].x, h[-2].y, h[-1].x, h[-1].y, p.x, p.y) <= 0:
                h.pop()
            h.append(p)
        return h

    lower = half(pts)
    upper = half(reversed(pts))
    cycle = lower[:-1] + upper[:-1]
    return cycle, frozenset(cycle)


def perturb_to_strict(P: Polygon, scale: int, jitter: int, seed) -> Polygon:
    """Scale a polygon by an integer factor and jitter it into strict position.

    Vertex i becomes (scale*x_i + u_i, scale*y_i + w_i) with fresh integer
    offsets |u_i|, |w_i| <= jitter, resampled until the result is strict.
    Requires jitter < scale/2 so distinct vertices stay distinct, and the
    scaled coordinates must respect COORD_BOUND.  Deterministic for a
    fixed seed.  A strict polygon with jitter 0 comes back as its exact
    scale-multiple (the identity when scale is 1).
    """
    if scale < 1:
        raise InputError(f"scale must be >= 1, got {scale}")
    if jitter < 0:
        raise InputError(f"jitter must be >= 0, got {jitter}")
    if 2 * jitter >= scale:
        raise InputError(f"jitter {jitter} must be smaller than scale/2 = {scale / 2:g}")
    worst = max(max(abs(v.x), abs(v.y)) for v in P.vertices)
    if worst * scale + jitter > COORD_BOUND:
        raise InputError(
            f"scaled coordinates would reach {worst * scale + jitter}, over the bound {COORD_BOUND}"
        )

    rng = random.Random(seed)
    for attempt in range(1, PERTURB_MAX_ATTEMPTS + 1):
        candidate = Polygon(
            (scale * v.x + rng.randint(-jitter, jitter), scale * v.y + rng.randint(-jitter, jitter))
            for v in P.vertices
        )
        if _is_strict(candidate.vertices):
            return candidate
    raise ExhaustionError(
        f"no strict perturbation found in {PERTURB_MAX_ATTEMPTS} attempts "
        f"(scale={scale}, jitter={jitter})",
        attempts=PERTURB_MAX_ATTEMPTS,
    )
