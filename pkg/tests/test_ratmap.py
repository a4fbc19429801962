import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_map, random_moebius
from quadconj import GF, INF, QQ, Moebius, QuadExt, RationalMap, conjugate, fixed_point_data, parse_map
from quadconj.poly import Poly
from quadconj.ratmap import (
    DegenerateMapError,
    evaluate,
    holomorphic_index_sum,
    iterate_polys,
    multiplier_at,
    second_dynatomic,
)

seeds = st.integers(0, 10**9)


class TestMoebius:
    def test_canonical_scaling(self):
        assert Moebius(2, 4, 0, 2) == Moebius(1, 2, 0, 1)
        assert Moebius(-1, 0, 0, 1) == Moebius(1, 0, 0, -1)
        assert Moebius(3, 0, 0, 1, GF(7)).entries == (1, 0, 0, 5)

    def test_singular(self):
        with pytest.raises(ValueError):
            Moebius(1, 2, 2, 4)

    def test_action(self):
        h = Moebius(1, 1, 1, -1)  # (z + 1)/(z - 1)
        assert h(3) == 2
        assert h(1) is INF
        assert h(INF) == 1

    @given(seeds)
    def test_composition_and_inverse(self, seed):
        rng = random.Random(seed)
        g, h = random_moebius(rng), random_moebius(rng)
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        if h(x) is INF or (g @ h)(x) is INF:
            return
        assert (g @ h)(x) == g(h(x))
        assert (h @ h.inverse()) == Moebius.identity()

    def test_from_points(self):
        h = Moebius.from_points([0, 1, INF], [1, INF, 0])
        assert h(0) == 1 and h(1) is INF and h(INF) == 0

    def test_from_points_degenerate(self):
        with pytest.raises(ValueError):
            Moebius.from_points([0, 0, 1], [1, 2, 3])


class TestRationalMap:
    def test_degenerate(self):
        with pytest.raises(DegenerateMapError):
            RationalMap([0, 1, 1], [0, 1, 0])  # (z^2 + z)/z
        with pytest.raises(DegenerateMapError):
            RationalMap([1, 0, 1], [0, 0, 0])

    def test_canonical_scaling(self):
        a = RationalMap([2, 2, 2], [2, 2, -1])
        b = RationalMap([-4, -4, -4], [-4, -4, 2])
        assert a == b and hash(a) == hash(b)
        assert a.num[2] > 0

    def test_evaluate(self):
        m = parse_map("1/z^2")
        assert m(2) == Fraction(1, 4)
        assert m(0) is INF
        assert m(INF) == 0
        assert evaluate(parse_map("z^2 + 1"), INF) is INF

    @given(seeds)
    @settings(max_examples=50, deadline=None)
    def test_conjugation_is_an_action(self, seed):
        rng = random.Random(seed)
        phi = random_map(rng)
        g, h = random_moebius(rng, 5), random_moebius(rng, 5)
        assert conjugate(conjugate(phi, g), h) == conjugate(phi, g @ h)
        assert conjugate(conjugate(phi, h), h.inverse()) == phi

    @given(seeds)
    @settings(max_examples=50, deadline=None)
    def test_conjugation_intertwines(self, seed):
        # h o psi == phi o h pointwise
        rng = random.Random(seed)
        phi, h = random_map(rng), random_moebius(rng, 5)
        psi = conjugate(phi, h)
        for x in (0, 1, -1, 2, Fraction(1, 3), INF):
            assert h(psi(x)) == phi(h(x))

    def test_c2_symmetry(self):
        m = parse_map("2z + 5/z")
        assert conjugate(m, Moebius(-1, 0, 0, 1)) == m


class TestFixedPoints:
    def test_one_over_z_squared(self):
        data = fixed_point_data(parse_map("1/z^2"))
        assert data.total_multiplicity == 3
        assert data.multipliers() == [-2, -2, -2]
        pts = [fp.point for fp in data]
        assert pts[0] == 1
        assert pts[1].d == -3
        assert data.entries[1].minpoly == Poly([1, 1, 1])

    def test_kb(self):
        data = fixed_point_data(parse_map("2z + 5/z"))
        by_point = {fp.point if fp.point is INF else fp.point.d: fp.multiplier for fp in data}
        assert by_point[INF] == Fraction(1, 2)
        assert by_point[-5] == 3

    def test_irreducible_cubic(self):
        data = fixed_point_data(parse_map("(2z^2+2z+2)/(-z^2+2z+2)"))
        (fp,) = data.entries
        assert fp.point is None and fp.weight == 3
        assert fp.multiplier == Poly([2, 0, 0, 1])

    def test_multiple_point(self):
        data = fixed_point_data(parse_map("z^2 + 1/4"))  # parabolic point at 1/2
        assert [(fp.point, fp.multiplicity) for fp in data] == [(Fraction(1, 2), 2), (INF, 1)]
        assert multiplier_at(parse_map("z^2 + 1/4"), Fraction(1, 2)) == 1

    def test_gf(self):
        F = GF(7)
        data = fixed_point_data(parse_map("z^2 + 1", F))
        assert data.total_multiplicity == 3

    @given(seeds)
    @settings(max_examples=80, deadline=None)
    def test_holomorphic_index(self, seed):
        phi = random_map(random.Random(seed))
        try:
            total = holomorphic_index_sum(phi)
        except ValueError:  # a multiplier equals 1
            return
        assert total == 1


class TestDynatomic:
    def test_z2_minus_1(self):
        assert second_dynatomic(parse_map("z^2 - 1")).monic() == Poly([0, 1, 1])

    def test_iterate(self):
        P, Q = iterate_polys(parse_map("z^2"), 2)
        assert P == Poly([0, 0, 0, 0, 1]) and Q == Poly([1])

    def test_roots_have_period_two(self):
        phi = parse_map("z^2 - 1")
        for r in (0, -1):
            assert phi(phi(r)) == r and phi(r) != r

    def test_one_over_z_squared_cycle_is_zero_infinity(self):
        # only finite period-two point is 0, so the polynomial is linear
        assert second_dynatomic(parse_map("1/z^2")).degree == 1

    def test_quadratic_points(self):
        phi = parse_map("(z^2 - 4z + 2)/(z^2 - 2z + 2)")  # theta with d = 2, k = 1
        dyn = second_dynatomic(phi)
        from quadconj.ratmap import quadratic_roots

        r, s = quadratic_roots(dyn)
        assert r == QuadExt(0, 1, 2) or s == QuadExt(0, 1, 2)
        assert phi(phi(r)) == r
