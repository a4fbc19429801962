"""Exact arithmetic over Q, F_p (p > 3) and quadratic extensions K(sqrt d).

Rationals are plain :class:`fractions.Fraction` values. Residues mod p are
:class:`Mod` instances. A base field is described by a :class:`Field`
object (``QQ`` or ``GF(p)``) which knows how to coerce scalars and how to
answer square-class and cube-class questions.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

#: Trial-division bound used by the factorisation helpers.
FACTOR_BOUND = 10**6


class FactorBoundError(ArithmeticError):
    """An integer could not be factored within :data:`FACTOR_BOUND`."""


class Mod:
    """A residue class modulo a prime ``p``, stored reduced into ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError(f"mixing residues mod {self.p} and mod {other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero mod {self.p}")
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero mod {self.p}")
        return Mod(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            if self.v == 0:
                raise ZeroDivisionError(f"division by zero mod {self.p}")
            return Mod(pow(pow(self.v, -1, self.p), -n, self.p), self.p)
        return Mod(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


# --------------------------------------------------------------------------
# integer helpers


def _trial_divide(n: int, bound: int) -> tuple[dict[int, int], int]:
    """Strip all prime factors ``<= bound`` from ``|n|``; return them and the cofactor."""
    n = abs(n)
    out: dict[int, int] = {}
    for q in (2, 3):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    q, step = 5, 2
    while q <= bound and q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += step
        step = 6 - step
    if 1 < n < q * q:  # no factor below sqrt(n): prime
        out[n] = out.get(n, 0) + 1
        n = 1
    return out, n


def factor_int(n: int, bound: int | None = None) -> dict[int, int]:
    """Factor ``|n|`` by trial division up to ``bound``.

    Raises :class:`FactorBoundError` if a cofactor is left that cannot be
    certified prime (i.e. it exceeds ``bound**2``).
    """
    bound = FACTOR_BOUND if bound is None else bound
    if n == 0:
        raise ValueError("cannot factor 0")
    out, rest = _trial_divide(n, bound)
    if rest > 1:
        raise FactorBoundError(f"cofactor {rest} not factored below {bound}")
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n != 0``."""
    divs = [1]
    for q, e in factor_int(n).items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def icbrt(n: int) -> int | None:
    """Exact integer cube root of ``n`` or None."""
    if n < 0:
        r = icbrt(-n)
        return None if r is None else -r
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    return x if x**3 == n else None


def _iroot(n: int, k: int) -> int | None:
    r = isqrt(n) if k == 2 else icbrt(n)
    return r if r is not None and r**k == n else None


def _reduce_exponents(n: int, k: int) -> tuple[int, int]:
    """Write ``n > 0`` as ``core * cof**k`` with every exponent of core < k.

    A cofactor left over by trial division has only primes above the bound
    B; if it is below ``B**(k+1)`` it is k-th-power-free unless it is itself
    a perfect k-th power, so no full factorization is needed.
    """
    factors, rest = _trial_divide(n, FACTOR_BOUND)
    core, cof = 1, 1
    for q, e in factors.items():
        core *= q ** (e % k)
        cof *= q ** (e // k)
    if rest > 1:
        r = _iroot(rest, k)
        if r is not None:
            cof *= r
        elif rest < FACTOR_BOUND ** (k + 1):
            core *= rest
        else:
            raise FactorBoundError(f"cannot decide the {k}-power-free part of {rest}")
    return core, cof


# --------------------------------------------------------------------------
# square / cube classes over Q


@dataclass(frozen=True)
class SquareFreeDecomp:
    core: int
    cofactor: Fraction


def squarefree_part(q) -> SquareFreeDecomp:
    """Return ``(core, cofactor)`` with ``q == core * cofactor**2``, core a square-free integer."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("squarefree_part of zero")
    n, m = q.numerator, q.denominator
    # n/m = n*m / m^2
    core, cof = _reduce_exponents(abs(n) * m, 2)
    if n < 0:
        core = -core
    return SquareFreeDecomp(core, Fraction(cof, m))


def cubefree_part(q) -> tuple[Fraction, Fraction]:
    """Return ``(core, cofactor)`` with ``q == core * cofactor**3``.

    Numerator and denominator exponents are reduced mod 3 separately, and the
    sign of ``q`` stays on the core (so ``-8 -> (-1, 2)``).
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("cubefree_part of zero")
    cn, fn = _reduce_exponents(abs(q.numerator), 3)
    cd, fd = _reduce_exponents(q.denominator, 3)
    sign = -1 if q < 0 else 1
    return Fraction(sign * cn, cd), Fraction(fn, fd)


def _cube_class_int(q: Fraction) -> int:
    """Positive cube-free integer in the class of ``q`` in Q*/(Q*)^3."""
    n, m = abs(q.numerator), q.denominator
    core, _ = cubefree_part(n * m * m)
    return int(core)


# --------------------------------------------------------------------------
# fields


class Field:
    """Base field descriptor. Subclasses: :class:`RationalField`, :class:`PrimeField`."""

    name = "?"
    characteristic = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    # square and cube classes
    def sqrt(self, a):
        """A square root of ``a`` in the field, or None."""
        raise NotImplementedError

    def is_square(self, a) -> bool:
        return self.sqrt(a) is not None

    def split_square(self, a):
        """Return ``(c, m)`` with ``a == c * m**2`` and ``c`` the canonical square-class representative."""
        raise NotImplementedError

    def cube_root(self, a):
        """A cube root of ``a`` in the field, or None."""
        raise NotImplementedError

    def cube_class_rep(self, t):
        """Canonical representative of the class of ``t`` under ``t ~ t c^3 ~ c^3 / t``."""
        raise NotImplementedError

    def to_str(self, a) -> str:
        return str(a)

    def from_str(self, s: str):
        return self(Fraction(s))

    def content_normalize(self, coeffs):
        """Scale a coefficient vector to its canonical representative (see subclasses)."""
        raise NotImplementedError


class RationalField(Field):
    name = "Q"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Mod):
            raise TypeError("residue mod p cannot be coerced into Q")
        return Fraction(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def sqrt(self, a):
        a = Fraction(a)
        if a < 0:
            return None
        from math import isqrt

        n, m = a.numerator, a.denominator
        rn, rm = isqrt(n), isqrt(m)
        if rn * rn == n and rm * rm == m:
            return Fraction(rn, rm)
        return None

    def split_square(self, a):
        dec = squarefree_part(a)
        return Fraction(dec.core), dec.cofactor

    def cube_root(self, a):
        a = Fraction(a)
        rn, rm = icbrt(a.numerator), icbrt(a.denominator)
        if rn is None or rm is None:
            return None
        return Fraction(rn, rm)

    def cube_class_rep(self, t):
        t = Fraction(t)
        if t == 0:
            raise ValueError("cube class of zero")
        a = _cube_class_int(t)
        b = _cube_class_int(1 / t)
        return Fraction(min(a, b))

    def to_str(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def content_normalize(self, coeffs):
        """Integer, primitive, with the last nonzero coefficient positive."""
        coeffs = [Fraction(c) for c in coeffs]
        nz = [c for c in coeffs if c != 0]
        if not nz:
            return coeffs
        den = functools.reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in nz), 1)
        ints = [c.numerator * (den // c.denominator) for c in coeffs]
        g = functools.reduce(gcd, (abs(i) for i in ints if i), 0)
        if nz[-1] < 0:
            g = -g
        return [Fraction(i // g) for i in ints]


class PrimeField(Field):
    def __init__(self, p: int):
        if p <= 3:
            raise ValueError(f"characteristic must exceed 3, got {p}")
        if any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F_{p}"

    def __call__(self, x):
        if isinstance(x, Mod):
            if x.p != self.p:
                raise ValueError(f"residue mod {x.p} in F_{self.p}")
            return x
        if isinstance(x, int):
            return Mod(x, self.p)
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {self.p}")
        return Mod(x.numerator * pow(x.denominator, -1, self.p), self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def elements(self):
        return [Mod(i, self.p) for i in range(self.p)]

    def is_square(self, a) -> bool:
        a = self(a)
        return a.v == 0 or pow(a.v, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a):
        a = self(a)
        if not self.is_square(a):
            return None
        for r in range(self.p):
            if (r * r - a.v) % self.p == 0:
                return Mod(r, self.p)
        return None  # pragma: no cover

    @functools.cached_property
    def nonsquare(self) -> Mod:
        """The least quadratic nonresidue."""
        return next(Mod(r, self.p) for r in range(2, self.p) if not self.is_square(r))

    def split_square(self, a):
        a = self(a)
        if a.v == 0:
            raise ValueError("square class of zero")
        c = self.one if self.is_square(a) else self.nonsquare
        return c, self.sqrt(a / c)

    def is_cube(self, a) -> bool:
        a = self(a)
        e = (self.p - 1) // gcd(3, self.p - 1)
        return a.v == 0 or pow(a.v, e, self.p) == 1

    def cube_root(self, a):
        a = self(a)
        if not self.is_cube(a):
            return None
        for r in range(self.p):
            if (r * r * r - a.v) % self.p == 0:
                return Mod(r, self.p)
        return None  # pragma: no cover

    def cube_class_rep(self, t):
        t = self(t)
        if t.v == 0:
            raise ValueError("cube class of zero")
        for r in range(1, self.p):
            if self.is_cube(Mod(r, self.p) / t) or self.is_cube(Mod(r, self.p) * t):
                return Mod(r, self.p)
        raise AssertionError("unreachable")  # pragma: no cover

    def from_str(self, s: str):
        return self(Fraction(s))

    def content_normalize(self, coeffs):
        """Scale so that the last nonzero coefficient is 1."""
        coeffs = [self(c) for c in coeffs]
        nz = [c for c in coeffs if c.v]
        if not nz:
            return coeffs
        inv = 1 / nz[-1]
        return [c * inv for c in coeffs]


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_of(x) -> Field:
    if isinstance(x, Mod):
        return GF(x.p)
    return QQ


# --------------------------------------------------------------------------
# square / cube tests with a field argument


def same_square_class(a, b, field: Field = QQ) -> bool:
    """True iff ``a / b`` is a nonzero square in ``field``."""
    a, b = field(a), field(b)
    if a == 0 or b == 0:
        raise ValueError("square class of zero")
    if isinstance(field, PrimeField):
        return field.is_square(a / b)
    return squarefree_part(a).core == squarefree_part(b).core


def is_cube(q, field: Field = QQ):
    """Return ``(True, c)`` with ``c**3 == q`` or ``(False, None)``."""
    q = field(q)
    if q == 0:
        raise ValueError("is_cube of zero")
    c = field.cube_root(q)
    return (c is not None), c


# --------------------------------------------------------------------------
# quadratic extensions


class QuadExt:
    """The element ``x + y*sqrt(d)`` of K(sqrt d); ``d`` must be a nonsquare of K."""

    __slots__ = ("x", "y", "d")

    def __init__(self, x, y, d):
        if not any(isinstance(v, Mod) for v in (x, y, d)):
            x, y, d = Fraction(x), Fraction(y), Fraction(d)
        self.x, self.y, self.d = x, y, d

    def _lift(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(f"radicands differ: {self.d} vs {other.d}")
            return other
        if isinstance(other, (int, Fraction, Mod)):
            return QuadExt(other, 0 * self.y, self.d)
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else QuadExt(self.x + o.x, self.y + o.y, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else QuadExt(self.x - o.x, self.y - o.y, self.d)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.x * o.x + self.d * self.y * o.y, self.x * o.y + self.y * o.x, self.d)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExt(-self.x, -self.y, self.d)

    def conj(self) -> "QuadExt":
        return QuadExt(self.x, -self.y, self.d)

    def norm(self):
        return self.x * self.x - self.d * self.y * self.y

    def trace(self):
        return 2 * self.x

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in K(sqrt d)")
        return QuadExt(self.x / n, -self.y / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExt(self.x * 0 + 1, self.y * 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.x == o.x and self.y == o.y

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.d))

    def is_rational(self) -> bool:
        return self.y == 0

    def __repr__(self):
        return f"QuadExt({self.x}, {self.y}, d={self.d})"

    def __str__(self):
        return f"{self.x} + {self.y}*sqrt({self.d})"


def norm_one_cube_roots(alpha: QuadExt, field: Field = QQ) -> list[QuadExt]:
    """All ``beta`` in K(sqrt d) with ``beta**3 == alpha`` and ``N(beta) == 1``.

    A norm-one ``beta`` with trace ``t`` satisfies ``beta**2 = t*beta - 1``, so
    ``trace(beta**3) = t**3 - 3t`` and ``beta = (alpha + t) / (t**2 - 1)``.
    Candidate traces are the K-roots of ``t**3 - 3t - trace(alpha)``; every
    candidate is verified by cubing.
    """
    from .poly import Poly, rational_roots

    if alpha.norm() != 1:
        raise ValueError(f"expected a norm-one element, got norm {alpha.norm()}")
    one = field.one
    cubic = Poly([-field(alpha.trace()), -3 * one, 0, one], field)
    out = []
    for t, _ in rational_roots(cubic):
        if t * t == one:
            continue
        beta = (alpha + t) / (t * t - one)
        if beta**3 == alpha and beta.norm() == 1 and beta not in out:
            out.append(beta)
    return out


def cube_root_norm_one(alpha: QuadExt, field: Field = QQ) -> QuadExt | None:
    """A norm-one cube root of the norm-one element ``alpha``, or None."""
    roots = norm_one_cube_roots(alpha, field)
    return roots[0] if roots else None
