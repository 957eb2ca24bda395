"""Lower-bound certificates and stochastic search for extremal polygons.

An n-gon exhaustively verified to contain no convex sub-k-gon proves
that the least forcing size for convex sub-k-gons is at least n+1.  The
classical 7-gon below witnesses the k = 4 bound of 8; the annealing
search tries to find (and grow) further such configurations.  Every
claim is re-checked by the definition-level oracle: a certificate never
rests on the optimized code path.
"""

from __future__ import annotations

import concurrent.futures
import itertools
import math
import random
from dataclasses import dataclass, replace

from .errors import InputError, PreconditionError
from .geometry import COORD_BOUND, Polygon, _det, classify
from .subgons import DEFAULT_BUDGET, count_convex_subgons, sign_condition_triples

# 7 vertices with no convex sub-4-gon among all 35 index subsets
# (exhaustively verified); witnesses bound >= 8 for k = 4.
SEVEN_GON_CERTIFICATE = Polygon(
    [(-13, 0), (15, 0), (0, 16), (18, 39), (27, -15), (10, 20), (16, 30)]
)

_SAMPLE_ATTEMPTS = 256


@dataclass(frozen=True)
class BoundRecord:
    """Best known bounds on the least n forcing a convex sub-k-gon."""

    k: int
    lower: int
    lower_provenance: str
    upper: int | None = None
    upper_provenance: str | None = None
    symbolic_upper: str | None = None


@dataclass(frozen=True)
class Certificate:
    """Exhaustive non-convexity record: verified means every one of the
    C(n, k) sub-k-gons failed the definition-level convexity oracle,
    proving the bound claimed_bound = n + 1."""

    polygon: Polygon
    k: int
    claimed_bound: int
    verified: bool
    subgon_total: int

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "vertices": [[v.x, v.y] for v in self.polygon.vertices],
            "claimed_bound": self.claimed_bound,
            "verified": self.verified,
            "subgon_total": self.subgon_total,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        try:
            polygon = Polygon(tuple(v) for v in d["vertices"])
            return cls(
                polygon=polygon,
                k=int(d["k"]),
                claimed_bound=int(d["claimed_bound"]),
                verified=bool(d["verified"]),
                subgon_total=int(d["subgon_total"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed certificate record: {exc}") from exc


@dataclass(frozen=True)
class SearchConfig:
    """Reproducible annealing parameters.

    Restart r runs with a seed derived deterministically from (seed, r),
    so parallel and serial execution give bit-identical results.  When
    initial is set, every restart starts from that polygon instead of a
    random strict sample.
    """

    n: int
    k: int
    seed: int
    box: int = 50
    max_iterations: int = 5000
    restarts: int = 200
    t0: float = 2.0
    decay: float = 0.999
    radius: int = 5
    initial: Polygon | None = None

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise InputError("n and k must be positive")
        if self.k > self.n:
            raise InputError(f"k = {self.k} exceeds n = {self.n}")
        if self.seed < 0:
            raise InputError("seed must be non-negative")
        if not 1 <= self.box <= COORD_BOUND:
            raise InputError(f"box must be in [1, {COORD_BOUND}]")
        if self.max_iterations < 1 or self.restarts < 1 or self.radius < 1:
            raise InputError("max_iterations, restarts and radius must be positive")
        if not self.t0 > 0:
            raise InputError("t0 must be positive")
        if not 0 < self.decay <= 1:
            raise InputError("decay must be in (0, 1]")
        if self.initial is not None:
            if len(self.initial) != self.n:
                raise InputError(
                    f"initial polygon has {len(self.initial)} vertices, config says n = {self.n}"
                )
            if any(max(abs(v.x), abs(v.y)) > self.box for v in self.initial.vertices):
                raise InputError("initial polygon leaves the coordinate box")


@dataclass(frozen=True)
class SearchResult:
    best: Polygon
    objective: int          # number of convex sub-k-gons of best
    certificate: Certificate | None


def bounds_for(k: int, certificates=()) -> BoundRecord:
    """Best known bounds for the least n forcing a convex sub-k-gon.

    k <= 3 is exact (every such polygon is convex).  k = 4 carries the
    built-in 7-gon lower bound of 8 and the Ramsey upper bound of 13.
    For k >= 5 the upper bound is only symbolic ("R(k,13;4)"), and the
    lower bound starts at the trivial k.  Verified certificates from the
    store raise lower bounds beyond the built-ins.
    """
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if k <= 3:
        prov = "every polygon with at most three vertices is convex"
        return BoundRecord(k=k, lower=k, lower_provenance=prov, upper=k, upper_provenance=prov)
    if k == 4:
        record = BoundRecord(
            k=4,
            lower=8,
            lower_provenance="built-in 7-gon certificate with no convex sub-4-gon",
            upper=13,
            upper_provenance=(
                "hypergraph Ramsey number R(4,4;3) = 13 via the orientation-sign "
                "triple coloring; carries over to non-strict polygons by perturbation"
            ),
        )
    else:
        record = BoundRecord(
            k=k,
            lower=k,
            lower_provenance=f"trivial: a {k - 1}-gon has no sub-{k}-gon",
            symbolic_upper=f"R({k},13;4)",
        )
    for cert in certificates:
        if cert.k == k and cert.verified and cert.claimed_bound > record.lower:
            if record.upper is not None and cert.claimed_bound > record.upper:
                raise InputError(
                    f"stored certificate claims bound {cert.claimed_bound} for k={k}, "
                    f"contradicting the exact upper bound {record.upper}; the store is corrupt"
                )
            record = replace(
                record,
                lower=cert.claimed_bound,
                lower_provenance=(
                    f"verified certificate: {len(cert.polygon)}-gon with no convex sub-{k}-gon"
                ),
            )
    return record


def verify_certificate(P: Polygon, k: int, budget: int = DEFAULT_BUDGET) -> Certificate:
    """Exhaustively test every sub-k-gon with the definition-level oracle.

    The fast sign route is deliberately not trusted here: a bound claim
    must not rest on the optimized path.
    """
    count, _ = count_convex_subgons(P, k, budget=budget, oracle_only=True)
    return Certificate(
        polygon=P,
        k=k,
        claimed_bound=len(P) + 1,
        verified=(count == 0),
        subgon_total=math.comb(len(P), k),
    )


def _derived_seed(seed: int, index: int) -> int:
    return (seed << 32) + index


def _coords_strict(coords) -> bool:
    for (ax, ay), (bx, by), (cx, cy) in itertools.combinations(coords, 3):
        if (bx - ax) * (cy - ay) == (cx - ax) * (by - ay):
            return False
    return True


def _sample_strict(rng: random.Random, n: int, box: int):
    for _ in range(_SAMPLE_ATTEMPTS):
        coords = [(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(n)]
        if n < 3 or _coords_strict(coords):
            return coords
    raise InputError(
        f"could not sample a strict {n}-gon in the box [-{box}, {box}]^2; "
        f"the box is too small for this n"
    )


class _SubgonCounter:
    """Incremental count of convex sub-k-gons of a strict polygon.

    Caches the orientation sign of every vertex triple and the convexity
    flag of every k-subset; moving one vertex refreshes only the triples
    and subsets containing it.  For a strict polygon a sub-k-gon is
    convex exactly when its sign-condition triples agree, so the cached
    count always equals what count_convex_subgons reports.
    """

    def __init__(self, coords, k: int):
        self.n = n = len(coords)
        self.k = k
        self.coords = list(coords)
        self.triples_with = [[] for _ in range(n)]
        self.sign = {}
        for t in itertools.combinations(range(n), 3):
            a, b, c = t
            d = _det(*coords[a], *coords[b], *coords[c])
            if d == 0:
                raise ValueError("counter requires a strict polygon")
            self.sign[t] = 1 if d > 0 else -1
            for v in t:
                self.triples_with[v].append(t)
        self.subset_checks = {}
        self.subsets_with = [[] for _ in range(n)]
        self.flag = {}
        for s in itertools.combinations(range(n), k):
            if k >= 4:
                self.subset_checks[s] = tuple(
                    (s[a], s[b], s[c]) for a, b, c in sign_condition_triples(k)
                )
            for v in s:
                self.subsets_with[v].append(s)
            self.flag[s] = self._convex(s, {})
        self.count = sum(self.flag.values())

    def _convex(self, s, new_signs) -> bool:
        # new_signs overlays self.sign for a proposed move
        if self.k <= 3:
            return True
        sign = self.sign
        checks = self.subset_checks[s]
        t0 = checks[0]
        ref = new_signs.get(t0)
        if ref is None:
            ref = sign[t0]
        for t in checks[1:]:
            val = new_signs.get(t)
            if val is None:
                val = sign[t]
            if val != ref:
                return False
        return True

    def propose(self, v: int, point):
        """Evaluate moving vertex v to point; None if that breaks strictness."""
        coords = self.coords
        px, py = point
        new_signs = {}
        for t in self.triples_with[v]:
            a, b, c = t
            ax, ay = (px, py) if a == v else coords[a]
            bx, by = (px, py) if b == v else coords[b]
            cx, cy = (px, py) if c == v else coords[c]
            d = (bx - ax) * (cy - ay) - (cx - ax) * (by - ay)
            if d == 0:
                return None
            new_signs[t] = 1 if d > 0 else -1
        delta = 0
        new_flags = {}
        for s in self.subsets_with[v]:
            f = self._convex(s, new_signs)
            if f != self.flag[s]:
                new_flags[s] = f
                delta += 1 if f else -1
        return delta, new_signs, new_flags

    def commit(self, v: int, point, delta: int, new_signs, new_flags):
        self.coords[v] = tuple(point)
        self.sign.update(new_signs)
        self.flag.update(new_flags)
        self.count += delta


def _run_restart(cfg: SearchConfig, index: int, record_trace: bool = False):
    """One annealing restart; returns (objective, coords[, trace])."""
    rng = random.Random(_derived_seed(cfg.seed, index))
    if cfg.initial is not None:
        coords = [(v.x, v.y) for v in cfg.initial.vertices]
    else:
        coords = _sample_strict(rng, cfg.n, cfg.box)
    counter = _SubgonCounter(coords, cfg.k)
    best_count = counter.count
    best_coords = list(counter.coords)
    trace = [best_count]
    temperature = cfg.t0
    for _ in range(cfg.max_iterations):
        if best_count == 0:
            break
        v = rng.randrange(cfg.n)
        dx = rng.randint(-cfg.radius, cfg.radius)
        dy = rng.randint(-cfg.radius, cfg.radius)
        x, y = counter.coords[v]
        p = (x + dx, y + dy)
        if abs(p[0]) <= cfg.box and abs(p[1]) <= cfg.box:
            outcome = counter.propose(v, p)
            if outcome is not None:
                delta, new_signs, new_flags = outcome
                if delta <= 0 or rng.random() < math.exp(-delta / temperature):
                    counter.commit(v, p, delta, new_signs, new_flags)
                    if counter.count < best_count:
                        best_count = counter.count
                        best_coords = list(counter.coords)
        temperature *= cfg.decay
        if record_trace:
            trace.append(best_count)
    if record_trace:
        return best_count, best_coords, trace
    return best_count, best_coords


def _restart_task(args):
    cfg, index = args
    return _run_restart(cfg, index)


def search_extremal(cfg: SearchConfig, workers: int = 1) -> SearchResult:
    """Annealing minimization of the convex sub-k-gon count over strict
    n-gons in the coordinate box.

    Moves jitter one vertex by an offset in [-radius, radius]^2; moves
    that leave the box or break strictness are rejected; worsening moves
    are accepted with probability exp(-delta/T) under a geometric
    temperature schedule.  Restarts are independent and deterministically
    seeded, and the winner is the minimum over (objective, encoding), so
    any worker count returns the identical result.  The reported
    objective is re-counted independently, and an objective of zero is
    turned into an exhaustively verified certificate.
    """
    if workers < 1:
        raise InputError("workers must be >= 1")
    if workers == 1:
        outcomes = [_run_restart(cfg, r) for r in range(cfg.restarts)]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(
                pool.map(
                    _restart_task,
                    ((cfg, r) for r in range(cfg.restarts)),
                    chunksize=max(1, cfg.restarts // (4 * workers)),
                )
            )
    best_count, best_coords = min(
        outcomes, key=lambda oc: (oc[0], tuple(c for xy in oc[1] for c in xy))
    )
    best = Polygon(best_coords)
    recount, _ = count_convex_subgons(best, cfg.k)
    if recount != best_count:
        raise RuntimeError(
            f"internal inconsistency: search reported {best_count} convex "
            f"sub-{cfg.k}-gons but an independent recount found {recount}"
        )
    certificate = verify_certificate(best, cfg.k) if best_count == 0 else None
    return SearchResult(best=best, objective=best_count, certificate=certificate)


def grow(P: Polygon, cfg: SearchConfig) -> Polygon | None:
    """Extend a certified polygon by one vertex, keeping objective zero.

    Tries cfg.max_iterations sampled coordinates, each at every insertion
    position; a candidate must stay strict and is accepted only after
    exhaustive re-verification.  Returns the first certified (n+1)-gon,
    or None -- absence of a hit proves nothing.
    """
    base = verify_certificate(P, cfg.k)
    if not base.verified:
        raise PreconditionError(
            f"grow needs a verified certificate; the input {len(P)}-gon has "
            f"convex sub-{cfg.k}-gons"
        )
    if not classify(P).strict:
        return None  # no insertion into a non-strict polygon can be strict
    n = len(P)
    vs = [(v.x, v.y) for v in P.vertices]
    rng = random.Random(cfg.seed)
    for _ in range(cfg.max_iterations):
        p = (rng.randint(-cfg.box, cfg.box), rng.randint(-cfg.box, cfg.box))
        for pos in range(n + 1):
            candidate = vs[:pos] + [p] + vs[pos:]
            if not _new_vertex_strict(candidate, pos):
                continue
            poly = Polygon(candidate)
            quick, _ = count_convex_subgons(poly, cfg.k)
            if quick:
                continue
            cert = verify_certificate(poly, cfg.k)
            if cert.verified:
                return poly
    return None


def _new_vertex_strict(coords, pos: int) -> bool:
    # Strictness of (strict base + one inserted vertex) only needs the
    # triples through the new vertex.
    n = len(coords)
    px, py = coords[pos]
    for a, b in itertools.combinations((i for i in range(n) if i != pos), 2):
        ax, ay = coords[a]
        bx, by = coords[b]
        if (ax - px) * (by - py) == (bx - px) * (ay - py):
            return False
    return True
