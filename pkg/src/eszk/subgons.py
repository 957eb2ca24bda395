"""Sub-polygon enumeration, convex sub-k-gon search, and triple colorings.

A sub-k-gon is the polygon formed by a strictly increasing k-tuple of
vertex indices, order preserved.  For strict polygons the convexity of a
sub-4-gon is equivalent to its four vertex triples sharing one
orientation sign, which turns convex-subgon search into a Ramsey-style
hunt for totally monochromatic index subsets.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping

from .convexity import _is_convex_vertices, _oracle_verdict, _sign_verdict, _sign_triples
from .errors import CapabilityError, ExhaustionError, InputError, PreconditionError
from .geometry import Polygon, _det, classify, perturb_to_strict

GOOD = "good"
BAD = "bad"

# Hard cap on exhaustive subset enumeration (roughly a minute at desk scale).
DEFAULT_BUDGET = 10**7

# Perturbation parameters for searching non-strict polygons; the result is
# always re-verified on the original, so nothing rests on these.
_PERTURB_SCALE = 10**4
_PERTURB_JITTER = 1
_PERTURB_SEED = 0


@dataclass(frozen=True)
class TripleColoring:
    """Good/bad classification of every 3-element index subset of a
    strict polygon: good iff the orientation determinant is positive."""

    n: int
    colors: Mapping[tuple[int, int, int], str]


def validate_index_subset(s, n: int) -> tuple[int, ...]:
    """Check that s is a strictly increasing tuple of indices in [0, n)."""
    idx = tuple(s)
    if not idx:
        raise InputError("index subset must not be empty")
    prev = -1
    for i in idx:
        if type(i) is not int:
            raise InputError(f"index {i!r} is not a plain int")
        if not 0 <= i < n:
            raise InputError(f"index {i} out of range for a {n}-gon")
        if i <= prev:
            raise InputError(f"indices must be strictly increasing, got {idx}")
        prev = i
    return idx


def sub_polygon(P: Polygon, s) -> Polygon:
    """The sub-polygon (V_{i0}, ..., V_{ik-1}) for increasing indices s."""
    idx = validate_index_subset(s, len(P))
    return Polygon(P.vertices[i] for i in idx)


def triple_coloring(P: Polygon) -> TripleColoring:
    """Color every index triple good (positive orientation) or bad
    (negative).  Defined only for strict polygons, where no determinant
    vanishes."""
    rep = classify(P)
    if not rep.strict:
        raise PreconditionError("triple_coloring needs a strict polygon")
    vs = P.vertices
    colors = {}
    for i, j, k in itertools.combinations(range(rep.n), 3):
        d = _det(vs[i].x, vs[i].y, vs[j].x, vs[j].y, vs[k].x, vs[k].y)
        colors[(i, j, k)] = GOOD if d > 0 else BAD
    return TripleColoring(n=rep.n, colors=colors)


def find_totally_monochromatic(coloring: TripleColoring, m: int):
    """First (lexicographically) m-subset all of whose triples share one
    color, or None.  Partial subsets are extended only while every
    completed triple agrees, which prunes most of the search tree."""
    if m < 3:
        raise InputError(f"m must be >= 3, got {m}")
    n = coloring.n
    if m > n:
        return None
    colors = coloring.colors
    chosen: list[int] = []

    def extend(start: int, color):
        t = len(chosen)
        if t == m:
            return tuple(chosen), color
        for v in range(start, n - (m - t) + 1):
            new_color = color
            ok = True
            if t >= 2:
                for a, b in itertools.combinations(chosen, 2):
                    c = colors[(a, b, v)]
                    if new_color is None:
                        new_color = c
                    elif c != new_color:
                        ok = False
                        break
            if ok:
                chosen.append(v)
                found = extend(v + 1, new_color)
                if found:
                    return found
                chosen.pop()
        return None

    return extend(0, None)


def count_convex_subgons(
    P: Polygon,
    k: int,
    include_subsets: bool = False,
    budget: int = DEFAULT_BUDGET,
    oracle_only: bool = False,
) -> tuple[int, list[tuple[int, ...]] | None]:
    """Count the convex sub-k-gons by exhaustive subset enumeration.

    Returns (count, subsets) where subsets lists the convex index tuples
    when include_subsets is set.  With oracle_only the definition-level
    test is applied to every sub-polygon, bypassing the fast sign route;
    certificate verification relies on that mode.
    """
    n = len(P)
    if not 1 <= k <= n:
        raise InputError(f"k must satisfy 1 <= k <= {n}, got {k}")
    total = math.comb(n, k)
    if total > budget:
        raise CapabilityError(f"C({n},{k}) = {total} subsets exceed the budget {budget}")
    vs = P.vertices
    strict_parent = not oracle_only and classify(P).strict
    count = 0
    subsets: list[tuple[int, ...]] | None = [] if include_subsets else None
    for idx in itertools.combinations(range(n), k):
        sub = tuple(vs[i] for i in idx)
        if oracle_only:
            ok = _oracle_verdict(sub).convex
        elif strict_parent:
            # sub-polygons of a strict polygon are strict
            ok = True if k <= 3 else _sign_verdict(sub).convex
        else:
            ok = _is_convex_vertices(sub).convex
        if ok:
            count += 1
            if subsets is not None:
                subsets.append(idx)
    return count, subsets


def _dfs_strict(vs, k: int, budget: int):
    # Depth-first search over increasing index tuples of a strict polygon.
    # A partial tuple is extended by v only if every 4-subset completed by
    # v is monochromatic (equivalently: a convex sub-4-gon).  An accepted
    # k-tuple has all sub-4-gons convex, hence is convex.
    n = len(vs)
    sign: dict[tuple[int, int, int], int] = {}

    def s(a: int, b: int, c: int) -> int:
        key = (a, b, c)
        val = sign.get(key)
        if val is None:
            d = _det(vs[a].x, vs[a].y, vs[b].x, vs[b].y, vs[c].x, vs[c].y)
            val = 1 if d > 0 else -1
            sign[key] = val
        return val

    visited = 0
    chosen: list[int] = []

    def extend(start: int):
        nonlocal visited
        t = len(chosen)
        if t == k:
            return tuple(chosen)
        for v in range(start, n - (k - t) + 1):
            visited += 1
            if visited > budget:
                raise CapabilityError(f"subgon search exceeded the budget of {budget} nodes")
            ok = True
            if t >= 3:
                for a, b, c in itertools.combinations(chosen, 3):
                    ref = s(a, b, c)
                    if s(a, b, v) != ref or s(a, c, v) != ref or s(b, c, v) != ref:
                        ok = False
                        break
            if ok:
                chosen.append(v)
                found = extend(v + 1)
                if found:
                    return found
                chosen.pop()
        return None

    return extend(0)


def find_convex_subgon(P: Polygon, k: int, budget: int = DEFAULT_BUDGET):
    """Find an index subset whose sub-k-gon is convex, or None.

    k <= 3 subsets are always convex.  Strict polygons use a pruned DFS
    over monochromatic 4-subsets; non-strict polygons are perturbed into
    strict position, searched there, and any hit is re-verified on the
    original polygon -- with exhaustive enumeration as the fallback, so
    the perturbation is an accelerator, never an authority.  The returned
    subset is the lexicographically least one the search route produces.
    """
    n = len(P)
    if not 1 <= k <= n:
        raise InputError(f"k must satisfy 1 <= k <= {n}, got {k}")
    if k <= 3:
        return tuple(range(k))
    vs = P.vertices

    if classify(P).strict:
        found = _dfs_strict(vs, k, budget)
        if found is not None and not _is_convex_vertices(tuple(vs[i] for i in found)).convex:
            # unreachable unless the 4-subset pruning logic is broken;
            # fall through to plain enumeration rather than trust it
            found = None
        if found is not None:
            return found
        if k == 4:
            return None  # the DFS was already exhaustive over 4-subsets
    else:
        try:
            perturbed = perturb_to_strict(P, _PERTURB_SCALE, _PERTURB_JITTER, _PERTURB_SEED)
        except (InputError, ExhaustionError):
            perturbed = None
        if perturbed is not None:
            hit = _dfs_strict(perturbed.vertices, k, budget)
            if hit is not None and _is_convex_vertices(tuple(vs[i] for i in hit)).convex:
                return hit

    # ground-truth fallback: lexicographic enumeration with early exit
    total = math.comb(n, k)
    if total > budget:
        raise CapabilityError(f"C({n},{k}) = {total} subsets exceed the budget {budget}")
    for idx in itertools.combinations(range(n), k):
        if _is_convex_vertices(tuple(vs[i] for i in idx)).convex:
            return idx
    return None


# re-export for callers that want the raw triple order of the sign test
sign_condition_triples = _sign_triples
