import pytest

from eszk import (
    Certificate,
    InputError,
    Polygon,
    PreconditionError,
    SEVEN_GON_CERTIFICATE,
    SearchConfig,
    bounds_for,
    count_convex_subgons,
    grow,
    search_extremal,
    sub_polygon,
    verify_certificate,
)
from eszk.extremal import _run_restart


class TestBounds:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_exact_small_k(self, k):
        record = bounds_for(k)
        assert record.lower == record.upper == k

    def test_k4(self):
        record = bounds_for(4)
        assert (record.lower, record.upper) == (8, 13)
        assert record.lower_provenance and record.upper_provenance

    def test_k5_symbolic(self):
        record = bounds_for(5)
        assert record.upper is None
        assert record.symbolic_upper == "R(5,13;4)"
        assert record.lower == 5

    def test_k_validation(self):
        with pytest.raises(InputError):
            bounds_for(0)

    def test_certificates_raise_lower(self):
        cert = verify_certificate(SEVEN_GON_CERTIFICATE, 4)
        assert bounds_for(4, [cert]).lower == 8
        fake_nine = Certificate(
            polygon=SEVEN_GON_CERTIFICATE, k=4, claimed_bound=10, verified=True, subgon_total=35
        )
        assert bounds_for(4, [fake_nine]).lower == 10
        unverified = Certificate(
            polygon=SEVEN_GON_CERTIFICATE, k=4, claimed_bound=99, verified=False, subgon_total=35
        )
        assert bounds_for(4, [unverified]).lower == 8

    def test_no_numeric_upper_beyond_four(self):
        for k in (5, 6, 9):
            assert bounds_for(k).upper is None

    def test_contradictory_certificate_rejected(self):
        impossible = Certificate(
            polygon=SEVEN_GON_CERTIFICATE, k=4, claimed_bound=14, verified=True, subgon_total=35
        )
        with pytest.raises(InputError):
            bounds_for(4, [impossible])


class TestVerifyCertificate:
    def test_seven_gon(self):
        cert = verify_certificate(SEVEN_GON_CERTIFICATE, 4)
        assert cert.verified
        assert cert.claimed_bound == 8
        assert cert.subgon_total == 35

    def test_square_fails(self, unit_square):
        cert = verify_certificate(unit_square, 4)
        assert not cert.verified and cert.claimed_bound == 5

    def test_tampered_seven_gon_fails(self, seven_gon):
        vs = list(seven_gon.vertices)
        vs[3] = (18, -39)
        tampered = Polygon(vs)
        assert count_convex_subgons(tampered, 4, oracle_only=True)[0] > 0
        assert not verify_certificate(tampered, 4).verified

    def test_roundtrip(self):
        cert = verify_certificate(SEVEN_GON_CERTIFICATE, 4)
        again = Certificate.from_dict(cert.to_dict())
        assert again == cert
        assert verify_certificate(again.polygon, again.k).verified

    def test_json_shape(self):
        d = verify_certificate(SEVEN_GON_CERTIFICATE, 4).to_dict()
        assert set(d) == {"k", "vertices", "claimed_bound", "verified", "subgon_total"}
        assert d["vertices"][0] == [-13, 0]


class TestSearchConfig:
    def test_defaults(self):
        cfg = SearchConfig(n=7, k=4, seed=1)
        assert (cfg.box, cfg.max_iterations, cfg.restarts) == (50, 5000, 200)
        assert (cfg.t0, cfg.decay, cfg.radius) == (2.0, 0.999, 5)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n": 0, "k": 1, "seed": 1},
            {"n": 4, "k": 5, "seed": 1},
            {"n": 7, "k": 4, "seed": -1},
            {"n": 7, "k": 4, "seed": 1, "box": 0},
            {"n": 7, "k": 4, "seed": 1, "decay": 0.0},
            {"n": 7, "k": 4, "seed": 1, "t0": 0.0},
            {"n": 7, "k": 4, "seed": 1, "radius": 0},
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(InputError):
            SearchConfig(**kwargs)

    def test_initial_must_match(self, seven_gon):
        with pytest.raises(InputError):
            SearchConfig(n=6, k=4, seed=1, initial=seven_gon)
        with pytest.raises(InputError):
            SearchConfig(n=7, k=4, seed=1, box=20, initial=seven_gon)


SMALL = dict(restarts=6, max_iterations=400)


class TestSearch:
    def test_seeded_with_certificate_is_immediate(self, seven_gon):
        cfg = SearchConfig(n=7, k=4, seed=1, restarts=2, max_iterations=10, initial=seven_gon)
        result = search_extremal(cfg)
        assert result.objective == 0
        assert result.best == seven_gon
        assert result.certificate is not None and result.certificate.verified

    def test_objective_matches_recount(self):
        cfg = SearchConfig(n=6, k=4, seed=3, **SMALL)
        result = search_extremal(cfg)
        recount, _ = count_convex_subgons(result.best, 4)
        assert recount == result.objective

    def test_deterministic_across_runs(self):
        cfg = SearchConfig(n=6, k=4, seed=11, **SMALL)
        a = search_extremal(cfg)
        b = search_extremal(cfg)
        assert a.best == b.best and a.objective == b.objective

    def test_parallel_equals_serial(self):
        cfg = SearchConfig(n=6, k=4, seed=5, **SMALL)
        serial = search_extremal(cfg, workers=1)
        parallel = search_extremal(cfg, workers=3)
        assert serial.best == parallel.best
        assert serial.objective == parallel.objective

    def test_parallel_with_initial_polygon(self, seven_gon):
        # configs cross process boundaries; polygons must survive pickling
        import pickle

        cfg = SearchConfig(n=7, k=4, seed=1, restarts=4, max_iterations=5, initial=seven_gon)
        assert pickle.loads(pickle.dumps(cfg)) == cfg
        result = search_extremal(cfg, workers=2)
        assert result.objective == 0 and result.best == seven_gon

    def test_best_trace_non_increasing(self):
        cfg = SearchConfig(n=7, k=4, seed=2, restarts=1, max_iterations=600)
        _, _, trace = _run_restart(cfg, 0, record_trace=True)
        assert all(a >= b for a, b in zip(trace, trace[1:]))

    def test_workers_validation(self):
        cfg = SearchConfig(n=5, k=4, seed=1, restarts=1, max_iterations=1)
        with pytest.raises(InputError):
            search_extremal(cfg, workers=0)

    def test_small_box_unsatisfiable(self):
        # 3x3 lattice cannot hold a strict 7-gon
        cfg = SearchConfig(n=7, k=4, seed=1, box=1, restarts=1, max_iterations=1)
        with pytest.raises(InputError):
            search_extremal(cfg)

    def test_certificate_when_objective_zero(self):
        # n = 5 extremal polygons are plentiful; a short run finds one
        cfg = SearchConfig(n=5, k=4, seed=1, restarts=20, max_iterations=800)
        result = search_extremal(cfg)
        if result.objective == 0:
            assert result.certificate is not None and result.certificate.verified
            assert count_convex_subgons(result.best, 4, oracle_only=True)[0] == 0
        else:
            assert result.certificate is None


class TestGrow:
    def test_precondition(self, unit_square):
        cfg = SearchConfig(n=5, k=4, seed=1, restarts=1, max_iterations=5)
        with pytest.raises(PreconditionError):
            grow(unit_square, cfg)

    def test_grow_from_certified_five_gon(self, seven_gon):
        base = sub_polygon(seven_gon, (0, 1, 2, 3, 4))
        assert verify_certificate(base, 4).verified
        cfg = SearchConfig(n=6, k=4, seed=4, restarts=1, max_iterations=40)
        grown = grow(base, cfg)
        if grown is not None:
            assert len(grown) == 6
            assert verify_certificate(grown, 4).verified

    def test_grow_deterministic(self, seven_gon):
        base = sub_polygon(seven_gon, (0, 1, 2, 3, 4))
        cfg = SearchConfig(n=6, k=4, seed=4, restarts=1, max_iterations=40)
        assert grow(base, cfg) == grow(base, cfg)

    def test_grow_the_seven_gon(self, seven_gon):
        # an 8-gon extension is an open target; none is an acceptable
        # outcome, any hit must certify at n = 8
        cfg = SearchConfig(n=8, k=4, seed=1, restarts=1, max_iterations=30)
        grown = grow(seven_gon, cfg)
        if grown is not None:
            cert = verify_certificate(grown, 4)
            assert cert.verified and cert.claimed_bound == 9
