"""Convexity decisions for ordered polygons.

A polygon here is convex when the union of its edges equals the boundary
of the convex hull of its vertex set.  Two independent deciders live in
this module:

* ``sign_test`` -- the fast route for strict polygons: convexity is
  equivalent to 3n-8 orientation determinants sharing one sign.
* ``oracle_test`` -- the definition-level route for arbitrary polygons:
  compare the edge union against the hull boundary with exact integer
  interval arithmetic.

``is_convex`` dispatches between them; the two routes are cross-checked
against each other in the test suite and must never disagree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapabilityError, PreconditionError
from .geometry import Polygon, _det, _dimension, _is_strict, classify, convex_hull

# Factorial enumeration cap for the permutation-based operations.
PERMUTATION_LIMIT = 8

METHOD_SIGN_TEST = "sign_test"
METHOD_ORACLE = "oracle"
METHOD_SMALL_N = "small_n"
METHOD_DIM_LE_1 = "dim_le_1"


@dataclass(frozen=True)
class ConvexityVerdict:
    convex: bool
    method: str                 # one of the METHOD_* constants
    witness: str | None = None  # set exactly when convex is False


@dataclass(frozen=True)
class ToOneSideWitness:
    """One integer inward normal per edge.

    For edge j the normal n_j satisfies <n_j, V_r> >= <n_j, V_j> for every
    vertex V_r, with equality at V_{j+1}.  Normals are not unit length:
    only sign comparisons matter, and those are invariant under positive
    scaling, so we stay in integer arithmetic.
    """

    normals: tuple[tuple[int, int], ...]


def _sign_triples(n):
    # Index triples whose orientation signs must all agree on a strict
    # convex n-gon (n >= 4); 3n-8 of them, short-circuit order.
    for i in range(2, n - 1):
        yield (i - 1, i, i + 1)
    for j in range(1, n - 1):
        yield (0, j, j + 1)
    for k in range(3, n):
        yield (0, 1, k)


def _sign_verdict(vs) -> ConvexityVerdict:
    # Assumes vs is strict with len >= 4.
    ref = 0
    ref_triple = None
    for a, b, c in _sign_triples(len(vs)):
        d = _det(vs[a].x, vs[a].y, vs[b].x, vs[b].y, vs[c].x, vs[c].y)
        s = 1 if d > 0 else -1
        if ref == 0:
            ref, ref_triple = s, (a, b, c)
        elif s != ref:
            return ConvexityVerdict(
                False,
                METHOD_SIGN_TEST,
                witness=(
                    f"vertex triple {(a, b, c)} has orientation {s} "
                    f"but triple {ref_triple} has orientation {ref}"
                ),
            )
    return ConvexityVerdict(True, METHOD_SIGN_TEST)


def sign_test(P: Polygon) -> ConvexityVerdict:
    """Minimal orientation-sign convexity test for strict polygons, n >= 4.

    Scans the 3n-8 determinants whose common sign characterizes
    convexity, stopping at the first mismatch; the witness names the
    first failing triple.  Raises PreconditionError on non-strict or
    short input (use oracle_test there).
    """
    rep = classify(P)
    if not rep.strict or rep.n < 4:
        raise PreconditionError(
            f"sign_test needs a strict polygon with n >= 4 "
            f"(got n={rep.n}, strict={rep.strict}); use oracle_test instead"
        )
    return _sign_verdict(P.vertices)


def _on_segment(p, q, a) -> bool:
    # Is a on the closed segment [p, q]?  (p == q degenerates to a point.)
    if _det(p.x, p.y, q.x, q.y, a.x, a.y) != 0:
        return False
    return (
        min(p.x, q.x) <= a.x <= max(p.x, q.x)
        and min(p.y, q.y) <= a.y <= max(p.y, q.y)
    )


def _oracle_verdict(vs) -> ConvexityVerdict:
    n = len(vs)
    if _dimension(vs) <= 1:
        # Hull is a point or segment; the edge walk is connected and
        # touches both endpoints, so it covers the whole hull.
        return ConvexityVerdict(True, METHOD_ORACLE)

    hull, _ = convex_hull(vs)
    h = len(hull)

    # (a) Every polygon edge must lie inside a single hull edge segment.
    # A straight segment inside the boundary of a convex region sits on a
    # supporting line, and on a strict hull the boundary piece of any
    # supporting line is one edge (or one corner), so testing "both
    # endpoints on one common hull edge" is exact -- an edge crossing a
    # corner would continue strictly outside the hull and fail anyway.
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        if not any(
            _on_segment(hull[t], hull[(t + 1) % h], a)
            and _on_segment(hull[t], hull[(t + 1) % h], b)
            for t in range(h)
        ):
            return ConvexityVerdict(
                False,
                METHOD_ORACLE,
                witness=f"edge {i} from {tuple(a)} to {tuple(b)} leaves the hull boundary",
            )

    # (b) Every hull edge must be covered by the polygon edges lying on
    # its line.  Points on the edge are parameterized by the exact
    # integer inner product with the edge direction (0 .. |d|^2), so the
    # 1-D interval union needs no division.
    for t in range(h):
        p, q = hull[t], hull[(t + 1) % h]
        dx, dy = q.x - p.x, q.y - p.y
        full = dx * dx + dy * dy
        intervals = []
        for i in range(n):
            a, b = vs[i], vs[(i + 1) % n]
            if (
                _det(p.x, p.y, q.x, q.y, a.x, a.y) == 0
                and _det(p.x, p.y, q.x, q.y, b.x, b.y) == 0
            ):
                sa = (a.x - p.x) * dx + (a.y - p.y) * dy
                sb = (b.x - p.x) * dx + (b.y - p.y) * dy
                intervals.append((sa, sb) if sa <= sb else (sb, sa))
        intervals.sort()
        covered = 0
        for lo, hi in intervals:
            if lo > covered:
                break
            if hi > covered:
                covered = hi
        if covered < full:
            return ConvexityVerdict(
                False,
                METHOD_ORACLE,
                witness=f"hull edge from {tuple(p)} to {tuple(q)} is not covered by polygon edges",
            )

    return ConvexityVerdict(True, METHOD_ORACLE)


def oracle_test(P: Polygon) -> ConvexityVerdict:
    """Definition-level convexity decision for arbitrary polygons.

    Decides with exact arithmetic whether the union of the edges equals
    the boundary of the convex hull of the vertices.  Polygons of
    dimension <= 1 are convex outright; otherwise every edge must lie on
    the hull boundary and every hull edge must be fully covered.
    """
    return _oracle_verdict(P.vertices)


def _is_convex_vertices(vs) -> ConvexityVerdict:
    n = len(vs)
    if n <= 3:
        return ConvexityVerdict(True, METHOD_SMALL_N)
    if _dimension(vs) <= 1:
        return ConvexityVerdict(True, METHOD_DIM_LE_1)
    if _is_strict(vs):
        return _sign_verdict(vs)
    return _oracle_verdict(vs)


def is_convex(P: Polygon) -> ConvexityVerdict:
    """Decide convexity by the cheapest sound route.

    n <= 3 and dimension <= 1 polygons are convex; strict polygons with
    n >= 4 go through sign_test; everything else through oracle_test.
    Agrees with oracle_test on every input.
    """
    return _is_convex_vertices(P.vertices)


def _perp_ccw(dx: int, dy: int) -> tuple[int, int]:
    # Rotate (dx, dy) by +90 degrees; for a CCW-ordered edge this points
    # to the inside.
    return (-dy, dx)


def to_one_side(P: Polygon) -> ToOneSideWitness | None:
    """Search for per-edge supporting halfplanes.

    Returns a witness iff every edge admits a nonzero linear functional
    vanishing on its direction with all vertices on the non-negative side
    relative to the edge start.  A nondegenerate edge has exactly two
    candidate normals (up to positive scaling); a degenerate edge accepts
    any supporting direction, found among the hull edge normals.
    """
    vs = P.vertices
    n = len(vs)
    dim = _dimension(vs)
    if dim == 0:
        return ToOneSideWitness(((1, 0),) * n)
    if dim == 1:
        b = next(v for v in vs if v != vs[0])
        normal = _perp_ccw(b.x - vs[0].x, b.y - vs[0].y)
        # all vertices project equally onto a normal of the carrier line
        return ToOneSideWitness((normal,) * n)

    hull, _ = convex_hull(vs)
    h = len(hull)
    normals = []
    for j in range(n):
        a, b = vs[j], vs[(j + 1) % n]
        if a != b:
            dets = [_det(a.x, a.y, b.x, b.y, v.x, v.y) for v in vs]
            if all(d >= 0 for d in dets):
                normals.append(_perp_ccw(b.x - a.x, b.y - a.y))
            elif all(d <= 0 for d in dets):
                nx, ny = _perp_ccw(b.x - a.x, b.y - a.y)
                normals.append((-nx, -ny))
            else:
                return None
        else:
            # Degenerate edge: a supporting functional at the point a
            # exists iff a lies on the hull boundary; the inward normal
            # of a hull edge through a is one.
            for t in range(h):
                p, q = hull[t], hull[(t + 1) % h]
                if _on_segment(p, q, a):
                    normals.append(_perp_ccw(q.x - p.x, q.y - p.y))
                    break
            else:
                return None
    return ToOneSideWitness(tuple(normals))


def is_pre_convex(P: Polygon) -> bool:
    """Does some permutation of the vertex sequence form a convex polygon?

    For strict polygons this is equivalent to the vertex set being
    exactly the extreme points of its hull.  Non-strict polygons fall
    back to exhaustive permutation search, which is honest but factorial,
    so it is capped at n = 8.
    """
    rep = classify(P)
    if rep.strict:
        _, extreme = convex_hull(P.vertices)
        return set(P.vertices) == set(extreme)
    if rep.n > PERMUTATION_LIMIT:
        raise CapabilityError(
            f"pre-convexity of a non-strict polygon is decided by exhaustive "
            f"permutation search, capped at n = {PERMUTATION_LIMIT} (got n = {rep.n})"
        )
    vs = P.vertices
    # Convexity is invariant under cyclic shifts, so pin vertex 0 first.
    for rest in itertools.permutations(range(1, rep.n)):
        ordered = (vs[0],) + tuple(vs[i] for i in rest)
        if _is_convex_vertices(ordered).convex:
            return True
    return False


def convex_permutations(P: Polygon) -> tuple[int, list[tuple[int, ...]]]:
    """Census of the vertex orders that form a convex polygon.

    Enumerates all n! index permutations and keeps the convex ones;
    capped at n = 8.  For a strictly convex strict polygon with n >= 3
    the count is exactly 2n (the cyclic shifts and their reversals).
    """
    n = len(P)
    if n > PERMUTATION_LIMIT:
        raise CapabilityError(
            f"permutation census is factorial and capped at n = {PERMUTATION_LIMIT} (got n = {n})"
        )
    rep = classify(P)
    vs = P.vertices
    hits: list[tuple[int, ...]] = []
    if n <= 3 or rep.dimension <= 1:
        # every reordering keeps n <= 3 / dimension <= 1, hence convex
        hits = list(itertools.permutations(range(n)))
    elif rep.strict:
        # strictness is permutation-invariant: classify once, sign-test each
        for perm in itertools.permutations(range(n)):
            if _sign_verdict(tuple(vs[i] for i in perm)).convex:
                hits.append(perm)
    else:
        for perm in itertools.permutations(range(n)):
            if _oracle_verdict(tuple(vs[i] for i in perm)).convex:
                hits.append(perm)
    return len(hits), hits
