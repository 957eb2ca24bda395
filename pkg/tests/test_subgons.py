import itertools

import pytest

from eszk import (
    BAD,
    GOOD,
    CapabilityError,
    InputError,
    Polygon,
    PreconditionError,
    count_convex_subgons,
    find_convex_subgon,
    find_totally_monochromatic,
    is_convex,
    oracle_test,
    sign_test,
    sub_polygon,
    triple_coloring,
)
from conftest import random_convex_polygon, random_polygon, random_strict_polygon

HEXAGON = [(0, 0), (4, -1), (7, 2), (6, 6), (2, 7), (-2, 3)]


class TestSubPolygon:
    def test_identity(self, seven_gon):
        assert sub_polygon(seven_gon, range(7)) == seven_gon

    def test_prefix(self, unit_square):
        assert sub_polygon(unit_square, (0, 1, 2)) == Polygon([(0, 0), (1, 0), (1, 1)])

    def test_even_indices(self, seven_gon):
        assert sub_polygon(seven_gon, (0, 2, 4, 6)) == Polygon(
            [(-13, 0), (0, 16), (27, -15), (16, 30)]
        )

    @pytest.mark.parametrize("bad", [(), (0, 0), (2, 1), (0, 9), (-1, 2)])
    def test_invalid_subsets(self, seven_gon, bad):
        with pytest.raises(InputError):
            sub_polygon(seven_gon, bad)


class TestCount:
    def test_seven_gon_has_none(self, seven_gon):
        assert count_convex_subgons(seven_gon, 4) == (0, None)
        count, subsets = count_convex_subgons(seven_gon, 4, include_subsets=True)
        assert count == 0 and subsets == []

    def test_square_single_subset(self, unit_square):
        count, subsets = count_convex_subgons(unit_square, 4, include_subsets=True)
        assert count == 1 and subsets == [(0, 1, 2, 3)]

    def test_convex_hexagon_all_fifteen(self):
        P = Polygon(HEXAGON)
        assert sign_test(P).convex
        count, subsets = count_convex_subgons(P, 4, include_subsets=True)
        assert count == 15 == len(subsets)
        # cross-check each against the definition-level oracle
        for idx in subsets:
            assert oracle_test(sub_polygon(P, idx)).convex

    def test_oracle_only_agrees(self, seven_gon):
        assert count_convex_subgons(seven_gon, 4, oracle_only=True)[0] == 0
        P = Polygon(HEXAGON)
        assert count_convex_subgons(P, 4, oracle_only=True)[0] == 15

    def test_budget(self, seven_gon):
        with pytest.raises(CapabilityError):
            count_convex_subgons(seven_gon, 3, budget=10)

    def test_k_range(self, unit_square):
        with pytest.raises(InputError):
            count_convex_subgons(unit_square, 0)
        with pytest.raises(InputError):
            count_convex_subgons(unit_square, 5)

    def test_small_k_counts_everything(self, seven_gon):
        assert count_convex_subgons(seven_gon, 3)[0] == 35
        assert count_convex_subgons(seven_gon, 1)[0] == 7

    def test_non_strict_polygon_uses_dispatch(self):
        # square plus a vertex interior to the bottom edge
        P = Polygon([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])
        count, subsets = count_convex_subgons(P, 4, include_subsets=True)
        for idx in itertools.combinations(range(5), 4):
            expected = oracle_test(sub_polygon(P, idx)).convex
            assert ((idx in subsets)) == expected
        assert count == len(subsets)


class TestFind:
    def test_seven_gon_none(self, seven_gon):
        assert find_convex_subgon(seven_gon, 4) is None

    def test_square(self, unit_square):
        assert find_convex_subgon(unit_square, 4) == (0, 1, 2, 3)

    def test_small_k_prefix(self, seven_gon):
        assert find_convex_subgon(seven_gon, 2) == (0, 1)

    def test_returns_lexicographically_least(self):
        P = Polygon(HEXAGON)
        assert find_convex_subgon(P, 4) == (0, 1, 2, 3)
        assert find_convex_subgon(P, 5) == (0, 1, 2, 3, 4)

    def test_random_strict_13_gons(self, rng):
        # statistical slice of the acceptance run
        for _ in range(50):
            P = random_strict_polygon(rng, 13, 10**6)
            found = find_convex_subgon(P, 4)
            assert found is not None
            assert oracle_test(sub_polygon(P, found)).convex

    def test_non_strict_with_solution(self):
        # collinear bottom run, convex quad available elsewhere
        P = Polygon([(0, 0), (5, 0), (10, 0), (10, 7), (0, 7), (3, 3)])
        found = find_convex_subgon(P, 4)
        assert found is not None
        assert is_convex(sub_polygon(P, found)).convex

    def test_all_collinear_subsets_are_convex(self):
        # dimension <= 1 sub-polygons are convex, so the first subset wins
        P = Polygon([(i, 0) for i in range(9)])
        assert find_convex_subgon(P, 4) == (0, 1, 2, 3)

    def test_non_strict_without_solution(self):
        # found by exhaustive oracle enumeration over all five 4-subsets
        from eszk import classify

        P = Polygon([(3, -3), (1, 4), (2, 0), (6, -1), (1, 3)])
        rep = classify(P)
        assert not rep.strict and rep.dimension == 2 and rep.ordinary
        assert count_convex_subgons(P, 4, oracle_only=True)[0] == 0
        assert find_convex_subgon(P, 4) is None

    def test_result_always_convex(self, rng):
        for _ in range(40):
            P = random_polygon(rng, rng.randint(4, 9), 6)
            found = find_convex_subgon(P, 4)
            if found is not None:
                assert is_convex(sub_polygon(P, found)).convex

    def test_presence_matches_exhaustive_count(self, rng):
        # degenerate-heavy inputs: found iff the oracle count is positive
        for _ in range(60):
            P = random_polygon(rng, rng.randint(4, 7), 4)
            count, _ = count_convex_subgons(P, 4, oracle_only=True)
            found = find_convex_subgon(P, 4)
            assert (found is not None) == (count > 0)

    def test_k_above_four_on_convex_positions(self, rng):
        for n, k in [(8, 5), (9, 6), (10, 7)]:
            P = random_convex_polygon(rng, n, 60)
            assert find_convex_subgon(P, k) == tuple(range(k))


class TestColoring:
    def test_square_all_good(self, unit_square):
        coloring = triple_coloring(unit_square)
        assert coloring.n == 4
        assert set(coloring.colors.values()) == {GOOD}

    def test_reflected_square_all_bad(self):
        coloring = triple_coloring(Polygon([(0, 0), (0, 1), (1, 1), (1, 0)]))
        assert set(coloring.colors.values()) == {BAD}

    def test_total_on_all_triples(self, seven_gon):
        coloring = triple_coloring(seven_gon)
        assert set(coloring.colors) == set(itertools.combinations(range(7), 3))

    def test_rejects_non_strict(self):
        with pytest.raises(PreconditionError):
            triple_coloring(Polygon([(0, 0), (1, 0), (2, 0), (0, 1)]))


class TestMonochromatic:
    def test_m3_is_any_triple(self, seven_gon):
        found = find_totally_monochromatic(triple_coloring(seven_gon), 3)
        assert found == ((0, 1, 2), triple_coloring(seven_gon).colors[(0, 1, 2)])

    def test_square_full_subset(self, unit_square):
        assert find_totally_monochromatic(triple_coloring(unit_square), 4) == ((0, 1, 2, 3), GOOD)

    def test_seven_gon_has_none(self, seven_gon):
        assert find_totally_monochromatic(triple_coloring(seven_gon), 4) is None

    def test_m_too_small(self, unit_square):
        with pytest.raises(InputError):
            find_totally_monochromatic(triple_coloring(unit_square), 2)

    def test_m_exceeds_n(self, unit_square):
        assert find_totally_monochromatic(triple_coloring(unit_square), 5) is None

    def test_equivalence_with_count(self, rng):
        # monochromatic 4-subset exists iff some sub-4-gon is convex
        for _ in range(80):
            P = random_strict_polygon(rng, rng.randint(4, 10), 30)
            coloring = triple_coloring(P)
            found = find_totally_monochromatic(coloring, 4)
            count, _ = count_convex_subgons(P, 4)
            assert (found is not None) == (count > 0)
            if found is not None:
                assert is_convex(sub_polygon(P, found[0])).convex


def test_hereditary_property(rng):
    # backing for the DFS pruning rule: convex strict polygons have all
    # sub-4-gons convex; a counterexample here fails the build
    for _ in range(60):
        P = random_convex_polygon(rng, rng.randint(4, 9), 50)
        assert is_convex(P).convex
        count, _ = count_convex_subgons(P, 4)
        assert count == len(list(itertools.combinations(range(len(P)), 4)))
