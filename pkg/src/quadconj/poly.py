"""Dense univariate polynomials over a base field (Q or F_p)."""

from __future__ import annotations

from fractions import Fraction
from math import floor, gcd

from .exactnum import QQ, Field, PrimeField


class Poly:
    """Polynomial with coefficients lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and ``degree == -1``.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field: Field = QQ):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    # construction helpers
    @classmethod
    def x(cls, field: Field = QQ) -> "Poly":
        return cls([0, 1], field)

    @classmethod
    def const(cls, c, field: Field = QQ) -> "Poly":
        return cls([c], field)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError(f"polynomials over {self.field!r} and {other.field!r}")
            return other
        return Poly([other], self.field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other], self.field)
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __repr__(self):
        return f"Poly({[self.field.to_str(c) for c in self.coeffs]}, {self.field!r})"

    # ring operations
    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[i] + o[i] for i in range(n)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return Poly([], self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly([1], self.field)
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [self.field.zero] * max(len(rem) - len(o.coeffs) + 1, 0)
        inv = 1 / o.lc
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + o.degree] * inv
            q[k] = c
            if c != 0:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Poly(q, self.field), Poly(rem[: o.degree] if o.degree > 0 else [], self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        return q

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, Fraction)) else self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def deriv(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.field)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return Poly([c * inv for c in self.coeffs], self.field)

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly([], self.field)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc


# --------------------------------------------------------------------------
# gcd and friends


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    F = a.field
    r0, r1 = a, b
    s0, s1 = Poly([1], F), Poly([], F)
    t0, t1 = Poly([], F), Poly([1], F)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def inverse_mod(a: Poly, modulus: Poly) -> Poly:
    g, s, _ = poly_xgcd(a % modulus, modulus)
    if g.degree != 0:
        raise ArithmeticError("polynomial is not invertible modulo the given modulus")
    return s % modulus


# --------------------------------------------------------------------------
# determinants and resultants


def bareiss_det(rows, field: Field = QQ):
    """Determinant by fraction-free elimination (pivoting on nonzero entries)."""
    m = [[field(x) for x in row] for row in rows]
    n = len(m)
    if n == 0:
        return field.one
    sign = 1
    prev = field.one
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return field.zero
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(p: Poly, q: Poly, degrees: tuple[int, int] | None = None):
    """Sylvester resultant Res(p, q).

    ``degrees`` optionally gives the formal degrees, padding with leading
    zeros; this is what homogeneous (projective) resultants need.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("resultant of two zero polynomials")
    F = p.field
    if degrees is not None:
        m, n = degrees
    else:
        m, n = p.degree, q.degree
    if p.is_zero() or q.is_zero():
        return F.zero
    if m == 0 and n == 0:
        return F.one
    pc = list(reversed([p[i] for i in range(m + 1)]))
    qc = list(reversed([q[i] for i in range(n + 1)]))
    size = m + n
    rows = []
    for i in range(n):
        row = [F.zero] * size
        row[i : i + m + 1] = pc
        rows.append(row)
    for i in range(m):
        row = [F.zero] * size
        row[i : i + n + 1] = qc
        rows.append(row)
    return bareiss_det(rows, F)


def discriminant(p: Poly):
    n = p.degree
    if n < 1:
        raise ValueError("discriminant of a constant")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(p, p.deriv()) / p.lc


# --------------------------------------------------------------------------
# roots


def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.deriv()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            break
        chain.append(r)
    return chain


def _sign_changes(chain, x) -> int:
    signs = [c(x) for c in chain]
    signs = [v > 0 for v in signs if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _rational_root_grid(p: Poly):
    """Rational roots of a square-free polynomial over Q, without factoring.

    With integer coefficients and leading coefficient ``a``, a rational root
    ``u/v`` in lowest terms has ``v | a``, so it lies on the grid ``N/a``.
    Sturm sequences isolate the real roots; once an interval is narrower
    than ``1/|a|`` it holds at most one grid point, which is tested exactly.
    """
    from math import lcm

    den = lcm(*(Fraction(c).denominator for c in p.coeffs))
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = 0
    for i in ints:
        g = gcd(g, i)
    p = Poly([Fraction(i // g) for i in ints], QQ)
    a = abs(int(p.lc))
    bound = 1 + max(abs(c / p.lc) for c in p.coeffs[:-1])
    chain = _sturm_chain(p)
    out = []
    stack = [(-bound, bound)]
    width = Fraction(1, a)
    while stack:
        lo, hi = stack.pop()
        n = _sign_changes(chain, lo) - _sign_changes(chain, hi)  # roots in (lo, hi]
        if n == 0:
            continue
        if hi - lo < width:
            for N in (floor(lo * a) + 1, floor(hi * a)):
                r = Fraction(N, a)
                if lo < r <= hi and p(r) == 0 and r not in out:
                    out.append(r)
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    return out


def rational_roots(p: Poly) -> list[tuple[object, int]]:
    """All roots of ``p`` in its base field, with multiplicities, sorted."""
    if p.is_zero():
        raise ValueError("roots of the zero polynomial")
    F = p.field
    out = []
    zero_mult = 0
    while p.degree > 0 and p[0] == 0:
        p = Poly(p.coeffs[1:], F)
        zero_mult += 1
    if zero_mult:
        out.append((F.zero, zero_mult))
    if p.degree <= 0:
        return out
    if isinstance(F, PrimeField):
        candidates = (c for c in F.elements() if c.v)
    else:
        candidates = _rational_root_grid(p // poly_gcd(p, p.deriv()))
    for r in candidates:
        if p.degree <= 0:
            break
        lin = Poly([-r, 1], F)
        mult = 0
        while p.degree > 0:
            q, rem = divmod(p, lin)
            if rem:
                break
            p = q
            mult += 1
        if mult:
            out.append((r, mult))
    out.sort(key=lambda rm: (rm[0].v if isinstance(F, PrimeField) else rm[0]))
    return out


# --------------------------------------------------------------------------
# quotient algebra K[x]/(F)


def mult_matrix(u: Poly, modulus: Poly):
    """Matrix (columns = images of 1, x, ..., x^{n-1}) of multiplication by ``u`` mod ``modulus``."""
    n = modulus.degree
    cols = []
    xi = Poly([1], u.field)
    X = Poly.x(u.field)
    for _ in range(n):
        img = (u * xi) % modulus
        cols.append([img[i] for i in range(n)])
        xi = (xi * X) % modulus
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _det_poly(rows) -> Poly:
    """Determinant of a small matrix with Poly entries by cofactor expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _det_poly(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def charpoly(matrix, field: Field) -> Poly:
    """det(x*I - M) as a polynomial in x."""
    n = len(matrix)
    X = Poly.x(field)
    rows = [
        [(X if i == j else Poly([], field)) - matrix[i][j] for j in range(n)]
        for i in range(n)
    ]
    return _det_poly(rows)


def charpoly_mult(u_num: Poly, u_den: Poly, modulus: Poly) -> Poly:
    """Characteristic polynomial of multiplication by ``u_num/u_den`` on K[x]/(modulus).

    Equals the product of ``(x - u(a))`` over the roots ``a`` of the modulus,
    counted with multiplicity.
    """
    if modulus.degree < 1:
        raise ValueError("modulus must have positive degree")
    F = modulus.monic()
    if poly_gcd(u_den, F).degree != 0:
        raise ArithmeticError("denominator shares a root with the modulus")
    u = (u_num * inverse_mod(u_den, F)) % F
    return charpoly(mult_matrix(u, F), modulus.field)


def nullspace(rows, field: Field):
    """Basis of the right kernel of a matrix over ``field`` (plain Gauss-Jordan)."""
    m = [[field(x) for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


__all__ = [
    "Poly",
    "poly_gcd",
    "poly_xgcd",
    "inverse_mod",
    "bareiss_det",
    "resultant",
    "discriminant",
    "rational_roots",
    "mult_matrix",
    "charpoly",
    "charpoly_mult",
    "nullspace",
]
