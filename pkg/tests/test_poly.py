from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quadconj.exactnum import GF, QQ
from quadconj.poly import (
    Poly,
    bareiss_det,
    charpoly,
    charpoly_mult,
    discriminant,
    inverse_mod,
    mult_matrix,
    nullspace,
    poly_gcd,
    poly_xgcd,
    rational_roots,
    resultant,
)

small = st.integers(-9, 9)
polys = st.lists(small, min_size=1, max_size=5).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def from_roots(roots, lead=1, field=QQ):
    p = Poly([lead], field)
    for r in roots:
        p = p * Poly([-r, 1], field)
    return p


class TestArithmetic:
    def test_strip_and_degree(self):
        assert Poly([1, 2, 0, 0]).degree == 1
        assert Poly([]).degree == -1
        assert Poly([0]).is_zero()

    @given(polys, polys, polys)
    def test_ring_laws(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a
        assert a * b == b * a

    @given(polys, nonzero_polys)
    def test_divmod(self, a, b):
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_exact_div(self):
        assert (Poly([1, 1]) * Poly([2, 3])).exact_div(Poly([1, 1])) == Poly([2, 3])
        with pytest.raises(ArithmeticError):
            Poly([1, 0, 1]).exact_div(Poly([1, 1]))

    def test_eval_and_compose(self):
        p = Poly([1, 2, 3])  # 3x^2 + 2x + 1
        assert p(2) == 17
        assert p.compose(Poly([1, 1]))(1) == p(2)
        assert p.deriv() == Poly([2, 6])

    def test_over_gf(self):
        F = GF(5)
        p = Poly([1, 0, 1], F)  # x^2 + 1 = (x - 2)(x - 3) mod 5
        assert rational_roots(p) == [(F(2), 1), (F(3), 1)]


class TestGcd:
    @given(nonzero_polys, nonzero_polys, nonzero_polys)
    @settings(max_examples=60)
    def test_gcd_divides(self, a, b, c):
        g = poly_gcd(a * c, b * c)
        assert (a * c) % g == Poly([]) and (b * c) % g == Poly([])
        assert (g % c.monic()).is_zero() or c.degree == 0

    @given(nonzero_polys, nonzero_polys)
    @settings(max_examples=60)
    def test_xgcd_bezout(self, a, b):
        g, s, t = poly_xgcd(a, b)
        assert s * a + t * b == g

    def test_inverse_mod(self):
        m = Poly([-2, 0, 1])
        u = Poly([1, 1])
        inv = inverse_mod(u, m)
        assert (u * inv) % m == Poly([1])


class TestResultant:
    def test_eq4_at_origin(self):
        # numerator and denominator of the (0, 0) normal form
        assert resultant(Poly([2, 2, 2]), Poly([2, 2, -1])) == 36

    def test_formal_degree(self):
        # both vanish at infinity as binary quadratic forms
        p, q = Poly([1, 1]), Poly([2, 1])
        assert resultant(p, q, (2, 2)) == 0
        assert resultant(p, q) == 1
        # only one does
        assert resultant(Poly([1, 1]), Poly([1, 0, 1]), (2, 2)) == 2

    @given(st.lists(small, min_size=1, max_size=3), st.integers(1, 5), nonzero_polys)
    def test_root_product_oracle(self, roots, lead, q):
        p = from_roots(roots, lead)
        expected = Fraction(lead) ** q.degree
        for r in roots:
            expected *= q(r)
        if q.degree == 0:
            expected = q[0] ** len(roots)
        assert resultant(p, q) == expected

    def test_discriminant(self):
        assert discriminant(Poly([1, 0, 1])) == -4
        assert discriminant(Poly([2, 0, 0, 1])) == -108

    def test_bareiss(self):
        assert bareiss_det([[2, 1], [1, 3]]) == 5
        assert bareiss_det([[0, 1], [1, 0]]) == -1
        assert bareiss_det([[1, 2], [2, 4]]) == 0


class TestRoots:
    @given(st.lists(st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6)), min_size=1, max_size=4))
    @settings(max_examples=60)
    def test_recovers_roots(self, roots):
        p = from_roots(roots, 3)
        want = {}
        for r in roots:
            want[r] = want.get(r, 0) + 1
        assert rational_roots(p) == sorted(want.items())

    def test_irreducible_cubic(self):
        assert rational_roots(Poly([2, 0, 0, 1])) == []

    def test_zero_root(self):
        assert rational_roots(Poly([0, 0, 1, 1])) == [(-1, 1), (0, 2)]


class TestQuotientAlgebra:
    def test_inverse_of_x_mod_x2_minus_2(self):
        m = Poly([-2, 0, 1])
        assert charpoly_mult(Poly([1]), Poly([0, 1]), m) == Poly([Fraction(-1, 2), 0, 1])

    def test_charpoly_of_identity_mult(self):
        m = Poly([1, 2, 3, 1])
        assert charpoly_mult(Poly([1]), Poly([1]), m) == Poly([-1, 1]) ** 3

    @given(st.lists(small, min_size=3, max_size=3, unique=True), polys)
    @settings(max_examples=40)
    def test_roots_map_to_values(self, roots, u):
        # charpoly of u on K[x]/(prod (x - r)) is prod (x - u(r))
        m = from_roots(roots)
        want = from_roots([u(r) for r in roots])
        assert charpoly_mult(u, Poly([1]), m) == want

    def test_shared_root_rejected(self):
        with pytest.raises(ArithmeticError):
            charpoly_mult(Poly([1]), Poly([-1, 1]), Poly([-1, 0, 1]))

    def test_mult_matrix_charpoly(self):
        m = Poly([-2, 0, 1])
        M = mult_matrix(Poly([0, 1]), m)
        assert charpoly(M, QQ) == m

    def test_nullspace(self):
        ker = nullspace([[1, 2, 3], [2, 4, 6]], QQ)
        assert len(ker) == 2
        for v in ker:
            assert v[0] + 2 * v[1] + 3 * v[2] == 0
