"""Reading and writing maps in the ``z`` expression language.

Grammar (implicit multiplication binds like ``*`` and ``/``, left to right)::

    map     := expr
    expr    := term (sign term)*
    term    := unary (("*" | "/") unary | power)*      -- bare juxtaposition = "*"
    unary   := sign unary | power
    power   := primary ["^" integer]
    primary := integer | "z" | "(" expr ")"
    sign    := "+" | "-"

Juxtaposition is only allowed before ``z`` or ``(``, so ``2z`` and ``2(z+1)``
parse but ``z2`` does not. Expressions are evaluated exactly in K(z), so
``2z + 5/z`` becomes ``(2*z^2 + 5)/z``.
"""

from __future__ import annotations

import re

from .exactnum import QQ, Field
from .poly import Poly, poly_gcd
from .ratmap import DegenerateMapError, Moebius, RationalMap

MAX_EXPONENT = 16


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            if m.group(2) != "z":
                raise ParseError(f"unknown variable {m.group(2)!r} (only z is allowed)", start, text)
            toks.append(("z", "z", start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _RatFunc:
    """An element num/den of K(z), kept reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.lc
        self.num = num * (1 / lc)
        self.den = den * (1 / lc)

    def __add__(self, o):
        return _RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return _RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        return _RatFunc(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        if o.num.is_zero():
            raise ZeroDivisionError
        return _RatFunc(self.num * o.den, self.den * o.num)

    def __neg__(self):
        return _RatFunc(-self.num, self.den)

    def __pow__(self, n):
        out = _RatFunc(Poly([1], self.num.field), Poly([1], self.num.field))
        for _ in range(n):
            out = out * self
        return out


class _Parser:
    def __init__(self, text: str, field: Field):
        self.text = text
        self.field = field
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", tok[2], self.text)
        self.i += 1
        return tok

    def const(self, c):
        F = self.field
        return _RatFunc(Poly([c], F), Poly([1], F))

    def parse(self) -> _RatFunc:
        val = self.expr()
        self.take("end")
        return val

    def expr(self):
        val = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while True:
            kind, _, pos = self.peek()
            if kind == "*":
                self.take()
                val = val * self.unary()
            elif kind == "/":
                self.take()
                rhs_pos = self.peek()[2]
                rhs = self.unary()
                try:
                    val = val / rhs
                except ZeroDivisionError:
                    raise ParseError("division by zero", rhs_pos, self.text) from None
            elif kind in ("z", "("):
                val = val * self.power()
            else:
                return val

    def unary(self):
        kind = self.peek()[0]
        if kind in ("+", "-"):
            self.take()
            val = self.unary()
            return -val if kind == "-" else val
        return self.power()

    def power(self):
        base = self.primary()
        if self.peek()[0] == "^":
            self.take()
            kind, s, pos = self.take("int")
            n = int(s)
            if n > MAX_EXPONENT:
                raise ParseError(f"exponent {n} too large", pos, self.text)
            base = base**n
        return base

    def primary(self):
        kind, s, pos = self.peek()
        if kind == "int":
            self.take()
            try:
                return self.const(self.field(int(s)))
            except ZeroDivisionError:  # pragma: no cover
                raise ParseError("bad constant", pos, self.text) from None
        if kind == "z":
            self.take()
            F = self.field
            return _RatFunc(Poly([0, 1], F), Poly([1], F))
        if kind == "(":
            self.take()
            val = self.expr()
            self.take(")")
            return val
        got = "end of input" if kind == "end" else repr(s)
        raise ParseError(f"unexpected {got}", pos, self.text)


def parse_ratfunc(text: str, field: Field = QQ) -> tuple[Poly, Poly]:
    """Parse an expression into a reduced pair ``(num, den)`` with monic ``den``."""
    if not isinstance(text, str):
        raise TypeError("expected a string")
    try:
        val = _Parser(text, field).parse()
    except ZeroDivisionError:
        raise ParseError("division by zero", 0, text) from None
    return val.num, val.den


def parse_map(text: str, field: Field = QQ) -> RationalMap:
    """Parse a quadratic rational map; raise ParseError or DegenerateMapError."""
    num, den = parse_ratfunc(text, field)
    deg = max(num.degree, den.degree)
    if deg > 2:
        raise DegenerateMapError(f"map has degree {deg}; only quadratic maps are supported")
    if deg < 2:
        raise DegenerateMapError(f"map has degree {max(deg, 0)} after cancellation; expected 2")
    return RationalMap(num, den, field)


def parse_moebius(text: str, field: Field = QQ) -> Moebius:
    """Parse a degree-one map such as ``(2z+1)/(z-1)``."""
    num, den = parse_ratfunc(text, field)
    if max(num.degree, den.degree) != 1:
        raise DegenerateMapError("not a Moebius transformation (degree must be 1)")
    return Moebius(num[1], num[0], den[1], den[0], field)


# --------------------------------------------------------------------------
# formatting


def _monomial(c, k: int, field: Field) -> str:
    s = field.to_str(c)
    if k == 0:
        return s
    zk = "z" if k == 1 else f"z^{k}"
    if s == "1":
        return zk
    if s == "-1":
        return "-" + zk
    return f"{s}*{zk}"


def format_poly(coeffs, field: Field = QQ) -> tuple[str, int]:
    """Canonical text of a polynomial (descending powers) and its term count."""
    terms = [_monomial(c, k, field) for k, c in reversed(list(enumerate(coeffs))) if c != 0]
    if not terms:
        return "0", 1
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out, len(terms)


def format_map(m: RationalMap) -> str:
    F = m.field
    num_coeffs = list(m.num)
    den_coeffs = list(m.den)
    while den_coeffs and den_coeffs[-1] == 0:
        den_coeffs.pop()
    if sum(1 for c in den_coeffs if c != 0) == 1 and F.to_str(den_coeffs[-1]).startswith("-"):
        # -1/z^2 reads better than 1/(-z^2)
        num_coeffs = [-c for c in num_coeffs]
        den_coeffs = [-c for c in den_coeffs]
    num, nterms = format_poly(num_coeffs, F)
    if len(den_coeffs) == 1 and den_coeffs[0] == 1:
        return num
    den, dterms = format_poly(den_coeffs, F)
    if nterms > 1:
        num = f"({num})"
    single_monic = dterms == 1 and F.to_str(den_coeffs[-1]) == "1"
    if dterms > 1 or (not single_monic and len(den_coeffs) > 1):
        den = f"({den})"
    return f"{num}/{den}"


def format_moebius(h: Moebius) -> str:
    F = h.field
    num, nterms = format_poly([h.b, h.a], F)
    den_coeffs = [h.e, h.c]
    if h.c == 0 and h.e == 1:
        return num
    den, dterms = format_poly(den_coeffs, F)
    if nterms > 1:
        num = f"({num})"
    if dterms > 1 or (h.c != 0 and F.to_str(h.c) != "1"):
        den = f"({den})"
    return f"{num}/{den}"
