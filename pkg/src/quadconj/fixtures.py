"""Known worked examples, shipped with the package so ``quadconj selftest`` can run them."""

from __future__ import annotations

import random
from fractions import Fraction

from .exactnum import QQ
from .moduli import AutClass, ModuliPoint, aut_class, multiplier_cubic, sigma_invariants
from .normalform import (
    C2Form,
    S3General,
    TrivialAut,
    classify,
    normal_form_trivial,
    s3_dk_conjugate,
    s3_t_conjugate,
)
from .parser import format_map, parse_map
from .poly import Poly, rational_roots
from .ratmap import Moebius, conjugate, fixed_point_data

EXAMPLE = "(2z^2+2z+2)/(-z^2+2z+2)"


def _multipliers(m):
    return fixed_point_data(m).multipliers()


def _check_sigma_example():
    return sigma_invariants(parse_map(EXAMPLE)).as_tuple() == (0, 0)


def _check_example_format():
    return format_map(normal_form_trivial(ModuliPoint(QQ(0), QQ(0)))) == "(2*z^2 + 2*z + 2)/(-z^2 + 2*z + 2)"


def _check_example_class():
    c = classify(parse_map(EXAMPLE))
    return c.aut_class is AutClass.TRIVIAL and c.normal_form == TrivialAut(0, 0)


def _check_cubic_example():
    f = multiplier_cubic(ModuliPoint(QQ(0), QQ(0)))
    return f == Poly([2, 0, 0, 1]) and rational_roots(f) == []


def _check_z2_plus_c():
    for c in (1, 2, -1):
        m = parse_map(f"z^2 + ({c})")
        s = sigma_invariants(m)
        if s.as_tuple() != (2, 4 * c):
            return False
        if normal_form_trivial(s) != parse_map(f"2z^2/(-z^2+4z-4*({c}))"):
            return False
    return True


def _check_two_multipliers_one():
    return normal_form_trivial(ModuliPoint(QQ(5), QQ(7))) == parse_map("(2z^2-3z-3)/(-z^2+7z-10)")


def _check_kb_multipliers():
    rng = random.Random(1)
    for _ in range(50):
        k = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        b = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        if k == 0 or 2 * k == -1 or b == 0:
            continue
        m = parse_map(f"({k.numerator}/{k.denominator})z + ({b.numerator}/{b.denominator})/z")
        if sorted(_multipliers(m)) != sorted([2 * k - 1, 2 * k - 1, 1 / k]):
            return False
    return True


def _check_s3_multipliers():
    return _multipliers(parse_map("1/z^2")) == [-2, -2, -2]


def _check_c2_automorphism():
    m = parse_map("2z + 5/z")
    return conjugate(m, Moebius(-1, 0, 0, 1)) == m and format_map(m) == "(2*z^2 + 5)/z"


def _check_classifications():
    c = classify(parse_map("2z + 5/z"))
    return (
        c.normal_form == C2Form(2, 5)
        and c.witness == Moebius.identity()
        and aut_class(parse_map("1/z^2")) is AutClass.S3
    )


def _check_theta_table():
    t_table = {(2, 16): True, (2, 4): True, (2, 3): False, (1, 1): True}
    for (a, b), want in t_table.items():
        if s3_t_conjugate(a, b).conjugate != want:
            return False
    dk = {((2, 1), (2, 2)): True, ((2, 1), (2, -1)): True, ((2, 1), (3, 1)): False}
    for (f1, f2), want in dk.items():
        if s3_dk_conjugate(S3General(*f1), S3General(*f2)).conjugate != want:
            return False
    return True


FIXTURES = [
    ("sigma of the worked example is (0, 0)", _check_sigma_example),
    ("normal form at (0, 0) prints as the worked example", _check_example_format),
    ("worked example is in the trivial class", _check_example_class),
    ("multiplier cubic at (0, 0) is x^3 + 2, irreducible", _check_cubic_example),
    ("z^2 + c: sigma = (2, 4c) and normal form 2z^2/(-z^2+4z-4c)", _check_z2_plus_c),
    ("normal form with two multipliers 1 at lambda = 3", _check_two_multipliers_one),
    ("kz + b/z has multipliers 2k-1, 2k-1, 1/k", _check_kb_multipliers),
    ("1/z^2 has all multipliers -2", _check_s3_multipliers),
    ("2z + 5/z is invariant under z -> -z", _check_c2_automorphism),
    ("2z + 5/z is C2 (2, 5); 1/z^2 is S3", _check_classifications),
    ("theta conjugacy table", _check_theta_table),
]


def run_fixtures():
    results = []
    for name, fn in FIXTURES:
        try:
            ok = bool(fn())
            err = None
        except Exception as e:  # report, do not abort the run
            ok, err = False, f"{type(e).__name__}: {e}"
        results.append({"name": name, "ok": ok, "error": err})
    return results
