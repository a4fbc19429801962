from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quadconj.exactnum import (
    GF,
    QQ,
    FactorBoundError,
    Mod,
    QuadExt,
    cube_root_norm_one,
    cubefree_part,
    divisors,
    factor_int,
    icbrt,
    is_cube,
    norm_one_cube_roots,
    same_square_class,
    squarefree_part,
)

nonzero_fracs = st.fractions(max_denominator=500).filter(lambda q: q != 0 and abs(q.numerator) < 10**6)


class TestMod:
    def test_arithmetic(self):
        a, b = Mod(3, 7), Mod(5, 7)
        assert a + b == Mod(1, 7)
        assert a - b == Mod(5, 7)
        assert a * b == Mod(1, 7)
        assert a / b == Mod(2, 7)
        assert -a == Mod(4, 7)
        assert a**-1 == Mod(5, 7)
        assert 2 - a == Mod(6, 7)
        assert 1 / a == Mod(5, 7)

    def test_mixed_with_fraction(self):
        assert Mod(1, 7) + Fraction(1, 2) == Mod(5, 7)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Mod(1, 5) / Mod(0, 5)

    def test_mixing_moduli(self):
        with pytest.raises(ValueError):
            Mod(1, 5) + Mod(1, 7)

    def test_eq_int(self):
        assert Mod(6, 5) == 1
        assert Mod(0, 5) == 0
        assert not Mod(0, 5)


class TestIntegers:
    def test_factor(self):
        assert factor_int(360) == {2: 3, 3: 2, 5: 1}
        assert factor_int(-97) == {97: 1}

    def test_factor_bound(self):
        with pytest.raises(FactorBoundError):
            factor_int(1000003 * 1000033, bound=1000)

    def test_divisors(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]

    @given(st.integers(-(10**12), 10**12))
    def test_icbrt(self, n):
        r = icbrt(n**3)
        assert r == n
        if icbrt(n) is not None:
            assert icbrt(n) ** 3 == n

    def test_icbrt_non_cube(self):
        assert icbrt(9) is None
        assert icbrt(-9) is None


class TestSquareCubeClasses:
    def test_squarefree_examples(self):
        dec = squarefree_part(Fraction(-12))
        assert (dec.core, dec.cofactor) == (-3, 2)
        dec = squarefree_part(Fraction(2, 9))
        assert dec.core * dec.cofactor**2 == Fraction(2, 9) and dec.core == 2

    @given(nonzero_fracs)
    def test_squarefree_recombines(self, q):
        dec = squarefree_part(q)
        assert dec.core * dec.cofactor**2 == q
        assert all(dec.core % (p * p) for p in range(2, 50))

    def test_cubefree_examples(self):
        assert cubefree_part(-8) == (-1, 2)
        assert cubefree_part(Fraction(1, 9)) == (Fraction(1, 9), 1)
        assert cubefree_part(54) == (2, 3)

    @given(nonzero_fracs)
    def test_cubefree_recombines(self, q):
        core, cof = cubefree_part(q)
        assert core * cof**3 == q

    def test_same_square_class(self):
        assert same_square_class(2, 8)
        assert not same_square_class(2, 3)
        assert not same_square_class(2, -2)
        assert same_square_class(2, 3, GF(5))  # both nonresidues mod 5

    def test_is_cube(self):
        assert is_cube(Fraction(-27, 8)) == (True, Fraction(-3, 2))
        assert is_cube(4) == (False, None)
        # every residue is a cube when p = 2 mod 3
        assert all(is_cube(a, GF(5))[0] for a in range(1, 5))
        assert sum(is_cube(a, GF(7))[0] for a in range(1, 7)) == 2

    def test_is_cube_zero(self):
        with pytest.raises(ValueError):
            is_cube(0)


class TestFields:
    def test_qq_sqrt(self):
        assert QQ.sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert QQ.sqrt(2) is None
        assert QQ.sqrt(-1) is None

    def test_split_square(self):
        assert QQ.split_square(Fraction(50)) == (2, 5)
        F = GF(7)
        for a in range(1, 7):
            c, r = F.split_square(a)
            assert c * r * r == a and c in (1, F.nonsquare)

    def test_gf_sqrt_all(self):
        F = GF(11)
        for a in range(11):
            r = F.sqrt(a)
            assert (r is not None) == F.is_square(a)
            if r is not None:
                assert r * r == a

    def test_cube_class_rep_q(self):
        assert QQ.cube_class_rep(16) == 2
        assert QQ.cube_class_rep(4) == 2  # 4 ~ 1/4 ~ 2
        assert QQ.cube_class_rep(Fraction(1, 3)) == 3
        assert QQ.cube_class_rep(-8) == 1

    def test_cube_class_rep_relation(self):
        F = GF(13)
        for t in range(1, 13):
            r = F.cube_class_rep(t)
            assert F.is_cube(r / F(t)) or F.is_cube(r * F(t))

    def test_content_normalize(self):
        assert QQ.content_normalize([Fraction(1, 2), 0, Fraction(-3, 4)]) == [-2, 0, 3]
        assert GF(7).content_normalize([1, 2, 3]) == [5, 3, 1]

    def test_gf_rejects_p_denominator(self):
        with pytest.raises(ZeroDivisionError):
            GF(5)(Fraction(1, 5))

    def test_qq_rejects_residue(self):
        with pytest.raises(TypeError):
            QQ(Mod(1, 5))


class TestQuadExt:
    def test_norm_trace(self):
        a = QuadExt(3, 2, 5)
        assert a.norm() == 9 - 20
        assert a.trace() == 6
        assert a * a.conj() == a.norm()
        assert a * a.inverse() == 1

    def test_mixed_radicands_rejected(self):
        with pytest.raises(ValueError):
            QuadExt(1, 1, 2) + QuadExt(1, 1, 3)

    @given(st.integers(-6, 6), st.integers(-6, 6), st.sampled_from([-7, -3, -2, -1, 2, 3, 5, 6, 7]))
    def test_cube_roots_found(self, u, v, d):
        gamma = QuadExt(u, v, d)
        if gamma.norm() == 0:
            return
        beta = gamma / gamma.conj()
        alpha = beta**3
        root = cube_root_norm_one(alpha)
        assert root is not None and root**3 == alpha and root.norm() == 1

    def test_non_cube(self):
        # (1 + sqrt 2)/(1 - sqrt 2) = -(3 + 2 sqrt 2) is not a cube in Q(sqrt 2)
        alpha = QuadExt(1, 1, 2) / QuadExt(1, -1, 2)
        assert alpha.norm() == 1
        assert cube_root_norm_one(alpha) is None

    def test_minus_one(self):
        assert QuadExt(-1, 0, 2) in norm_one_cube_roots(QuadExt(-1, 0, 2))

    def test_requires_norm_one(self):
        with pytest.raises(ValueError):
            cube_root_norm_one(QuadExt(2, 0, 3))

    def test_over_prime_field(self):
        F = GF(7)
        d = F.nonsquare
        for x in range(7):
            for y in range(7):
                b = QuadExt(F(x), F(y), d)
                if b.norm() != 1:
                    continue
                roots = norm_one_cube_roots(b**3, F)
                assert roots and all(r**3 == b**3 for r in roots)
