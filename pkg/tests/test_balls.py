import math
import random

import pytest

from gridcodes import (
    BallSpec,
    DomainError,
    Grid,
    ball_size_at,
    cross_polytope_size,
    decompose_ball_orthants,
    decompose_ball_slices,
    enumerate_ball,
    eta,
    eta_value,
    exclusion_levels,
    gamma,
    gamma_value,
    innermost_set,
    outermost_set,
    simplex_count,
)
from gridcodes.balls import orthant_subgrid_dims


class TestCountingPrimitives:
    def test_simplex_count_small(self):
        assert simplex_count(1, 4) == 5
        assert simplex_count(2, 2) == 6
        assert simplex_count(3, 0) == 1
        assert simplex_count(3, -1) == 0

    def test_simplex_count_is_partial_sum(self):
        for n in range(1, 5):
            for r in range(8):
                assert simplex_count(n, r) == sum(
                    math.comb(j + n - 1, j) for j in range(r + 1)
                )

    def test_cross_polytope_brute_force(self):
        from gridcodes.grid import enumerate_zn_ball

        for n in range(1, 4):
            for r in range(6):
                want = len(enumerate_zn_ball(n, (0,) * n, r))
                assert cross_polytope_size(n, r) == want

    def test_cross_polytope_regression(self):
        assert cross_polytope_size(2, 3) == 25


class TestExclusionLevels:
    def test_contents(self):
        levels = exclusion_levels((2, 2, 10), 5)
        assert levels[0].k == 1
        assert levels[0].subsets == ((0,), (1,))
        assert levels[0].slacks == (3, 3)
        assert levels[1].subsets == ((0, 1),)
        assert levels[1].slacks == (1,)
        assert len(levels) == 2

    def test_downward_closed(self):
        levels = exclusion_levels((2, 3, 4, 5), 9)
        sets = [set(level.subsets) for level in levels]
        for k in range(1, len(sets)):
            for subset in sets[k]:
                for i in range(len(subset)):
                    assert subset[:i] + subset[i + 1 :] in sets[k - 1]

    def test_empty_when_radius_small(self):
        assert exclusion_levels((5, 5), 3) == []


class TestEtaGamma:
    def test_eta_regressions(self):
        assert eta_value((2, 2, 10), 5) == 20
        assert eta_value((7, 7), 9) == 43
        assert eta_value((5, 2), 2) == 5
        assert eta_value((5, 2), 1) == 3

    def test_gamma_regressions(self):
        assert gamma_value((9, 4, 4), 4) == 80
        assert gamma_value((9, 4), 4) == 28
        assert gamma_value((10, 4, 4), 4) == 80

    def test_gamma_small_grid_brute_force(self):
        # Max over every center, verified by enumeration: 8 at center (2, 0).
        g = Grid((5, 2))
        sizes = {
            p: len(enumerate_ball(g, BallSpec(p, 2))) for p in g.points()
        }
        assert max(sizes.values()) == 8
        assert gamma_value((5, 2), 2) == 8
        assert gamma_value((5, 2), 1) == 4

    def test_reports(self):
        g = Grid((5, 2))
        report = eta(g, 2)
        assert report.value == 5
        assert report.kind == "eta"
        assert eta(g, 0).path == "formula-direct"
        assert gamma(g, 0).path == "gamma-trivial-small"
        assert gamma(g, 9).value == g.volume()

    def test_negative_radius(self):
        with pytest.raises(DomainError):
            eta(Grid((3,)), -1)
        with pytest.raises(DomainError):
            gamma(Grid((3,)), -2)

    def test_extremes_match_enumeration(self):
        rng = random.Random(11)
        for _ in range(12):
            dims = tuple(rng.randint(1, 6) for _ in range(rng.randint(1, 3)))
            g = Grid(dims)
            for r in range(g.diameter() + 2):
                sizes = [
                    len(enumerate_ball(g, BallSpec(p, r))) for p in g.points()
                ]
                assert eta_value(dims, r) == min(sizes), (dims, r)
                assert gamma_value(dims, r) == max(sizes), (dims, r)

    def test_monotone_and_saturating(self):
        dims = (4, 5, 3)
        volume = math.prod(dims)
        last_eta = last_gamma = 0
        for r in range(sum(dims)):
            e, c = eta_value(dims, r), gamma_value(dims, r)
            assert last_eta <= e and last_gamma <= c
            assert e <= c <= volume
            last_eta, last_gamma = e, c
        assert last_eta == last_gamma == volume

    def test_extremal_sets(self):
        g = Grid((5, 2))
        assert outermost_set(g) == {(0, 0), (0, 1), (4, 0), (4, 1)}
        assert innermost_set(g) == {(2, 0), (2, 1)}
        assert innermost_set(Grid((3,))) == {(1,)}


class TestBallSizeAt:
    def test_matches_enumeration(self):
        rng = random.Random(5)
        for _ in range(10):
            dims = tuple(rng.randint(1, 6) for _ in range(rng.randint(1, 3)))
            g = Grid(dims)
            for _ in range(6):
                x = tuple(rng.randrange(m) for m in dims)
                r = rng.randrange(g.diameter() + 2)
                want = len(enumerate_ball(g, BallSpec(x, r)))
                assert ball_size_at(g, x, r).value == want, (dims, x, r)

    def test_worked_example(self):
        g = Grid((5, 2))
        assert ball_size_at(g, (2, 0), 2).value == 8
        assert ball_size_at(g, (0, 0), 2).value == 5
        assert ball_size_at(g, (4, 1), 0).value == 1

    def test_center_validated(self):
        with pytest.raises(DomainError):
            ball_size_at(Grid((5, 2)), (5, 0), 1)


class TestDecompositions:
    def _random_cases(self, count):
        rng = random.Random(23)
        for _ in range(count):
            dims = tuple(rng.randint(1, 6) for _ in range(rng.randint(1, 3)))
            g = Grid(dims)
            x = tuple(rng.randrange(m) for m in dims)
            r = rng.randrange(g.diameter() + 2)
            yield g, x, r

    def test_slices_partition_ball(self):
        for g, x, r in self._random_cases(25):
            ball = set(enumerate_ball(g, BallSpec(x, r)))
            dec = decompose_ball_slices(g, x, r)
            pieces = [pts for _, pts in dec.pieces()]
            union = [p for pts in pieces for p in pts]
            assert len(union) == len(set(union)) == len(ball)
            assert set(union) == ball

    def test_slice_sizes_are_lower_dimensional_balls(self):
        for g, x, r in self._random_cases(25):
            if g.n < 2:
                continue
            dec = decompose_ball_slices(g, x, r)
            sub = Grid(g.dims[:-1])
            for h in range(1, r + 1):
                for sign, pts in (("+", dec.plus[h]), ("-", dec.minus[h])):
                    coord = x[-1] + h if sign == "+" else x[-1] - h
                    if not 0 <= coord <= g.dims[-1] - 1:
                        assert pts == ()
                        continue
                    assert len(pts) == ball_size_at(sub, x[:-1], r - h).value

    def test_orthants_partition_ball(self):
        for g, x, r in self._random_cases(25):
            ball = set(enumerate_ball(g, BallSpec(x, r)))
            dec = decompose_ball_orthants(g, x, r)
            union = list(dec.centric)
            for pts in dec.orthants.values():
                union.extend(pts)
            assert len(union) == len(set(union)) == len(ball)
            assert set(union) == ball
            if r < g.n:
                assert dec.orthants == {}

    def test_orthant_sizes_are_corner_balls(self):
        for g, x, r in self._random_cases(25):
            if r < g.n:
                continue
            dec = decompose_ball_orthants(g, x, r)
            for b, pts in dec.orthants.items():
                inside = all(
                    0 <= xi + bi <= m - 1
                    for xi, bi, m in zip(x, b, g.dims)
                )
                if not inside:
                    assert pts == ()
                    continue
                sub = orthant_subgrid_dims(g, x, b)
                assert len(pts) == eta_value(sub, r - g.n), (g.dims, x, r, b)
