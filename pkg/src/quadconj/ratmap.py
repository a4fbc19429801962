"""Quadratic rational maps on P^1, Moebius transformations and fixed-point data."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .exactnum import QQ, Field, QuadExt
from .poly import Poly, charpoly_mult, nullspace, rational_roots, resultant


class _Infinity:
    """The point at infinity of P^1."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def _homog(x):
    """Homogeneous coordinates of a point of P^1."""
    if x is INF:
        return 1, 0
    return x, 1


def _dehomog(X, Y):
    if Y == 0:
        return INF
    return X / Y


class DegenerateMapError(ValueError):
    """Numerator and denominator share a root, or the degree is not 2."""


class Moebius:
    """An element of PGL_2(K), acting by ``z -> (a z + b) / (c z + e)``.

    Entries are scaled canonically: over Q to a primitive integer matrix whose
    first nonzero entry is positive; over F_p so that the first nonzero entry is 1.
    """

    __slots__ = ("a", "b", "c", "e", "field")

    def __init__(self, a, b, c, e, field: Field = QQ):
        ents = [field(a), field(b), field(c), field(e)]
        if ents[0] * ents[3] - ents[1] * ents[2] == 0:
            raise ValueError("singular matrix is not in PGL_2")
        # content_normalize fixes the *last* nonzero entry; reverse to fix the first.
        ents = field.content_normalize(ents[::-1])[::-1]
        self.a, self.b, self.c, self.e = ents
        self.field = field

    @classmethod
    def identity(cls, field: Field = QQ) -> "Moebius":
        return cls(1, 0, 0, 1, field)

    @classmethod
    def scaling(cls, lam, field: Field = QQ) -> "Moebius":
        """z -> lam * z"""
        return cls(lam, 0, 0, 1, field)

    @classmethod
    def translation(cls, s, field: Field = QQ) -> "Moebius":
        """z -> z + s"""
        return cls(1, s, 0, 1, field)

    @classmethod
    def from_points(cls, src, dst, field: Field = QQ) -> "Moebius":
        """The unique transformation sending three distinct points ``src[i]`` to ``dst[i]``."""
        rows = []
        for p, q in zip(src, dst):
            x, y = _homog(p)
            u, v = _homog(q)
            # (a x + b y) v - (c x + e y) u = 0
            rows.append([x * v, y * v, -x * u, -y * u])
        ker = nullspace(rows, field)
        if len(ker) != 1:
            raise ValueError("points are not in general position")
        return cls(*ker[0], field=field)

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.e)

    def det(self):
        return self.a * self.e - self.b * self.c

    def __matmul__(self, other: "Moebius") -> "Moebius":
        """Composition: ``(self @ other)(z) == self(other(z))``."""
        a, b, c, e = self.entries
        A, B, C, E = other.entries
        return Moebius(a * A + b * C, a * B + b * E, c * A + e * C, c * B + e * E, self.field)

    def inverse(self) -> "Moebius":
        return Moebius(self.e, -self.b, -self.c, self.a, self.field)

    def __call__(self, x):
        X, Y = _homog(x)
        return _dehomog(self.a * X + self.b * Y, self.c * X + self.e * Y)

    def __eq__(self, other):
        if not isinstance(other, Moebius):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.entries, self.field))

    def __repr__(self):
        ents = ", ".join(self.field.to_str(x) for x in self.entries)
        return f"Moebius({ents}; {self.field!r})"


class RationalMap:
    """A degree-2 endomorphism ``z -> num(z) / den(z)`` of P^1 over a base field.

    ``num`` and ``den`` are coefficient lists (lowest degree first, length <= 3).
    The pair is stored content-normalized so that equal maps have equal
    coefficient tuples: over Q as primitive integers with positive leading
    numerator coefficient, over F_p with monic numerator.
    """

    __slots__ = ("num", "den", "field")

    def __init__(self, num, den, field: Field = QQ, *, check: bool = True):
        if isinstance(num, Poly):
            num = num.coeffs
        if isinstance(den, Poly):
            den = den.coeffs
        num, den = list(num), list(den)
        if len(num) > 3 or len(den) > 3:
            num = _strip(num, field)
            den = _strip(den, field)
            if len(num) > 3 or len(den) > 3:
                raise DegenerateMapError("degree exceeds 2")
        num += [0] * (3 - len(num))
        den += [0] * (3 - len(den))
        # the leading numerator coefficient is the one fixed by normalization
        vec = field.content_normalize(den + num)
        self.num = tuple(vec[3:])
        self.den = tuple(vec[:3])
        self.field = field
        if check:
            if all(c == 0 for c in self.den):
                raise DegenerateMapError("denominator is zero")
            if resultant(self.num_poly, self.den_poly, (2, 2)) == 0:
                raise DegenerateMapError("numerator and denominator share a root on P^1 (degree < 2)")

    @property
    def num_poly(self) -> Poly:
        return Poly(self.num, self.field)

    @property
    def den_poly(self) -> Poly:
        return Poly(self.den, self.field)

    @property
    def coeffs(self) -> tuple:
        return self.num + self.den

    def __eq__(self, other):
        if not isinstance(other, RationalMap):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __repr__(self):
        from .parser import format_map

        return f"RationalMap({format_map(self)!r}, {self.field!r})"

    def __call__(self, x):
        return evaluate(self, x)

    def derivative_num(self) -> Poly:
        """Numerator ``P'Q - PQ'`` of the derivative (denominator is ``Q**2``)."""
        P, Q = self.num_poly, self.den_poly
        return P.deriv() * Q - P * Q.deriv()

    def fixed_point_poly(self) -> Poly:
        """``P(z) - z Q(z)``; its roots are the finite fixed points."""
        return self.num_poly - Poly.x(self.field) * self.den_poly


def _strip(cs, field):
    cs = [field(c) for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _homog_eval(coeffs, X, Y):
    c0, c1, c2 = coeffs
    return c0 * Y * Y + c1 * X * Y + c2 * X * X


def evaluate(phi: RationalMap, x):
    """``phi(x)`` for ``x`` in P^1 (field element, QuadExt or INF)."""
    X, Y = _homog(x)
    return _dehomog(_homog_eval(phi.num, X, Y), _homog_eval(phi.den, X, Y))


def _subst_linear(coeffs, a, b, c, e):
    """Coefficients (Y^2, XY, X^2) of F(aX + bY, cX + eY) for F homogeneous quadratic."""
    n0, n1, n2 = coeffs
    # L1 = aX + bY, L2 = cX + eY; F = n2 L1^2 + n1 L1 L2 + n0 L2^2
    x2 = n2 * a * a + n1 * a * c + n0 * c * c
    xy = n2 * 2 * a * b + n1 * (a * e + b * c) + n0 * 2 * c * e
    y2 = n2 * b * b + n1 * b * e + n0 * e * e
    return y2, xy, x2


def conjugate(phi: RationalMap, h: Moebius) -> RationalMap:
    """The map ``h^-1 o phi o h``."""
    if phi.field != h.field:
        raise ValueError("map and transformation live over different fields")
    a, b, c, e = h.entries
    P = _subst_linear(phi.num, a, b, c, e)
    Q = _subst_linear(phi.den, a, b, c, e)
    # h^-1 = (e, -b; -c, a) applied to (P : Q)
    num = [e * p - b * q for p, q in zip(P, Q)]
    den = [-c * p + a * q for p, q in zip(P, Q)]
    return RationalMap(num, den, phi.field, check=False)


#: z -> 1/z
def inversion(field: Field = QQ) -> Moebius:
    return Moebius(0, 1, 1, 0, field)


def multiplier_at(phi: RationalMap, x):
    """Multiplier of ``phi`` at a fixed point ``x`` (finite, quadratic or INF)."""
    if x is INF:
        psi = conjugate(phi, inversion(phi.field))
        return multiplier_at(psi, phi.field.zero)
    W = phi.derivative_num()
    q = phi.den_poly(x)
    return W(x) / (q * q)


def iterate_polys(phi: RationalMap, n: int) -> tuple[Poly, Poly]:
    """Numerator and denominator of the n-th iterate (not reduced)."""
    P, Q = Poly([0, 1], phi.field), Poly([1], phi.field)
    for _ in range(n):
        n0, n1, n2 = phi.num
        d0, d1, d2 = phi.den
        P, Q = (P * P * n2 + P * Q * n1 + Q * Q * n0, P * P * d2 + P * Q * d1 + Q * Q * d0)
    return P, Q


def second_dynatomic(phi: RationalMap) -> Poly:
    """``(P2 - z Q2) / (P1 - z Q1)``: its roots are the finite points of period two."""
    P2, Q2 = iterate_polys(phi, 2)
    z = Poly.x(phi.field)
    return (P2 - z * Q2).exact_div(phi.fixed_point_poly())


def quadratic_roots(q: Poly):
    """The two roots of an irreducible quadratic, as conjugate :class:`QuadExt` values.

    The radicand is the canonical square-class representative of the
    discriminant; the first returned root carries the ``+`` sign.
    """
    if q.degree != 2:
        raise ValueError("expected a quadratic")
    F = q.field
    C, B, A = q.coeffs
    D = B * B - 4 * A * C
    d, c = F.split_square(D)
    if d == 1:
        raise ValueError("quadratic splits over the base field")
    x = -B / (2 * A)
    y = c / (2 * A)
    return QuadExt(x, y, d), QuadExt(x, -y, d)


@dataclass(frozen=True)
class FixedPoint:
    """One entry of a fixed-point divisor.

    ``point`` is a field element, a :class:`QuadExt`, ``INF``, or None for the
    three roots of an irreducible cubic, which are only described by
    ``minpoly`` (and then ``multiplier`` is the cubic whose roots are their
    multipliers).
    """

    point: object
    multiplicity: int
    multiplier: object
    minpoly: Poly | None = None

    @property
    def weight(self) -> int:
        if self.point is None:
            return self.multiplicity * self.minpoly.degree
        return self.multiplicity


@dataclass(frozen=True)
class FixedPointData:
    entries: tuple = dc_field(default_factory=tuple)

    @property
    def total_multiplicity(self) -> int:
        return sum(fp.weight for fp in self.entries)

    def multipliers(self) -> list:
        """Materialized multipliers, repeated by multiplicity."""
        out = []
        for fp in self.entries:
            if fp.point is not None:
                out.extend([fp.multiplier] * fp.multiplicity)
        return out

    def __iter__(self):
        return iter(self.entries)


def fixed_point_data(phi: RationalMap) -> FixedPointData:
    F = phi.fixed_point_poly()
    entries = []
    rest = F
    for r, m in rational_roots(F):
        entries.append(FixedPoint(r, m, multiplier_at(phi, r)))
        rest = rest.exact_div(Poly([-r, 1], phi.field) ** m)
    if rest.degree == 2:
        for root in quadratic_roots(rest):
            lam = multiplier_at(phi, root)
            if isinstance(lam, QuadExt) and lam.is_rational():
                lam = lam.x
            entries.append(FixedPoint(root, 1, lam, rest.monic()))
    elif rest.degree == 3:
        cubic = charpoly_mult(phi.derivative_num(), phi.den_poly ** 2, rest)
        entries.append(FixedPoint(None, 1, cubic, rest.monic()))
    if F.degree < 3:
        entries.append(FixedPoint(INF, 3 - F.degree, multiplier_at(phi, INF)))
    return FixedPointData(tuple(entries))


def holomorphic_index_sum(phi: RationalMap):
    """Sum of ``1/(1 - lambda)`` over the fixed points (requires no multiplier 1).

    Quadratic points are summed in K(sqrt d); an unmaterialized cubic
    contributes the trace of ``1/(1 - lambda)`` on K[z]/(minpoly).
    """
    total = phi.field.zero
    for fp in fixed_point_data(phi):
        if fp.point is None:
            W = phi.derivative_num()
            Q2 = phi.den_poly ** 2
            cp = charpoly_mult(Q2, Q2 - W, fp.minpoly)
            total = total - cp[cp.degree - 1] * fp.multiplicity
            continue
        lam = fp.multiplier
        if lam == 1:
            raise ValueError("a fixed point has multiplier 1")
        total = total + fp.multiplicity * (1 / (1 - lam))
    if isinstance(total, QuadExt):
        if not total.is_rational():
            raise ArithmeticError("index sum left the base field")
        total = total.x
    return total


__all__ = [
    "INF",
    "Moebius",
    "RationalMap",
    "DegenerateMapError",
    "evaluate",
    "conjugate",
    "inversion",
    "multiplier_at",
    "iterate_polys",
    "second_dynatomic",
    "quadratic_roots",
    "FixedPoint",
    "FixedPointData",
    "fixed_point_data",
    "holomorphic_index_sum",
]
