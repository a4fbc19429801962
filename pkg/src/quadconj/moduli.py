"""Multiplier invariants (sigma_1, sigma_2), automorphism classes and the symmetry locus."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .exactnum import QQ, Field
from .poly import Poly, charpoly_mult, poly_gcd, resultant
from .ratmap import Moebius, RationalMap, conjugate


class InvariantError(RuntimeError):
    """An internal consistency check failed (an arithmetic bug, not bad input)."""


class AutClass(enum.Enum):
    TRIVIAL = "Trivial"
    C2 = "C2"
    S3 = "S3"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ModuliPoint:
    sigma1: object
    sigma2: object
    field: Field = QQ

    @property
    def sigma3(self):
        return self.sigma1 - 2

    def as_tuple(self):
        return (self.sigma1, self.sigma2)


def _gamma_candidates(field: Field):
    yield Moebius.identity(field)
    c = 0
    while True:
        # z -> c + 1/z sends infinity to c
        yield Moebius(c, 1, 1, 0, field)
        c = -c if c > 0 else -c + 1


def move_infinity_off_fixed(phi: RationalMap) -> tuple[Moebius, RationalMap]:
    """Return ``(g, phi^g)`` where infinity is not a fixed point of ``phi^g``."""
    for i, g in enumerate(_gamma_candidates(phi.field)):
        psi = phi if i == 0 else conjugate(phi, g)
        if psi.fixed_point_poly().degree == 3:
            return g, psi
        if i > 5:
            break
    raise InvariantError("no non-fixed point found among the first candidates")  # pragma: no cover


def multiplier_charpoly(phi: RationalMap) -> Poly:
    """Monic cubic whose roots are the three fixed-point multipliers, computed inside K."""
    _, psi = move_infinity_off_fixed(phi)
    F = psi.fixed_point_poly()
    Q = psi.den_poly
    return charpoly_mult(psi.derivative_num(), Q * Q, F)


def sigma_invariants(phi: RationalMap) -> ModuliPoint:
    f = multiplier_charpoly(phi)
    s1, s2, s3 = -f[2], f[1], -f[0]
    if s3 != s1 - 2:
        raise InvariantError(f"sigma_3 = {s3} but sigma_1 - 2 = {s1 - 2}")
    return ModuliPoint(s1, s2, phi.field)


def multiplier_cubic(sigma: ModuliPoint) -> Poly:
    """``x^3 - s1 x^2 + s2 x - (s1 - 2)``"""
    s1, s2 = sigma.sigma1, sigma.sigma2
    return Poly([-(s1 - 2), s2, -s1, 1], sigma.field)


def _as_sigma(x) -> ModuliPoint:
    return x if isinstance(x, ModuliPoint) else sigma_invariants(x)


def aut_class(x) -> AutClass:
    """Automorphism class from the multiplier spectrum (map or ModuliPoint)."""
    sigma = _as_sigma(x)
    f = multiplier_cubic(sigma)
    g = poly_gcd(f, f.deriv())
    if g.degree == 0:
        return AutClass.TRIVIAL
    if g.degree == 2:
        # triple root sigma1/3: either 1 or -2
        r = sigma.sigma1 / 3
        if r == 1:
            return AutClass.C2
        if r == -2:
            return AutClass.S3
        raise InvariantError(f"triple multiplier {r} violates the index formula")
    # exactly one double root, namely the root of g
    r = -g[0]
    return AutClass.TRIVIAL if r == 1 else AutClass.C2


def repeated_multiplier(sigma: ModuliPoint):
    """The repeated root of the multiplier cubic (None if the roots are distinct)."""
    f = multiplier_cubic(sigma)
    g = poly_gcd(f, f.deriv())
    if g.degree == 0:
        return None
    if g.degree == 2:
        return sigma.sigma1 / 3
    return -g[0]


# Res(P, Q) for the trivial-automorphism normal form, expanded once by hand and
# checked against a direct Sylvester determinant in the test suite.
# Keys are (exponent of sigma_1, exponent of sigma_2).
SYMMETRY_LOCUS = {
    (3, 0): -2,
    (2, 1): -1,
    (2, 0): 1,
    (1, 1): 8,
    (0, 2): 4,
    (1, 0): -12,
    (0, 1): -12,
    (0, 0): 36,
}


def symmetry_locus_value(sigma: ModuliPoint):
    """Value of the symmetry-locus cubic; zero exactly when Aut is nontrivial."""
    F = sigma.field
    s1, s2 = F(sigma.sigma1), F(sigma.sigma2)
    total = F.zero
    for (i, j), c in SYMMETRY_LOCUS.items():
        total = total + c * s1**i * s2**j
    return total


def normal_form_polys(sigma: ModuliPoint) -> tuple[Poly, Poly]:
    """Numerator and denominator of the trivial-automorphism normal form at ``sigma``."""
    s1, s2 = sigma.sigma1, sigma.sigma2
    P = Poly([2 - s1, 2 - s1, 2], sigma.field)
    Q = Poly([2 - s1 - s2, 2 + s1, -1], sigma.field)
    return P, Q


def normal_form_resultant(sigma: ModuliPoint):
    """Res(P, Q) of the normal form, computed directly as a Sylvester determinant."""
    P, Q = normal_form_polys(sigma)
    return resultant(P, Q, (2, 2))
