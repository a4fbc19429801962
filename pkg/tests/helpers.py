"""Random generators shared by the tests."""

import random
from fractions import Fraction

from quadconj import QQ, Moebius, RationalMap, conjugate, phi_kb, theta_dk, theta_t
from quadconj.ratmap import DegenerateMapError

SQUAREFREE = [d for d in range(-30, 31) if d not in (0, 1) and all(d % (q * q) for q in range(2, 6))]


def rand_frac(rng, h):
    return Fraction(rng.randint(-h, h), rng.randint(1, h))


def random_map(rng, h=20, field=QQ):
    while True:
        num = [rng.randint(-h, h) for _ in range(3)]
        den = [rng.randint(-h, h) for _ in range(3)]
        try:
            m = RationalMap(num, den, field)
        except (DegenerateMapError, ZeroDivisionError):
            continue
        if max(m.num_poly.degree, m.den_poly.degree) == 2:
            return m


def random_moebius(rng, h=10, field=QQ):
    while True:
        a, b, c, e = (rng.randint(-h, h) for _ in range(4))
        if field(a * e - b * c) != 0:
            return Moebius(a, b, c, e, field)


def random_c2(rng, h=20):
    while True:
        k, b = rand_frac(rng, 9), rng.randint(-h, h)
        if k != 0 and 2 * k != -1 and b != 0:
            return phi_kb(k, b)


def random_s3(rng):
    if rng.random() < 0.5:
        t = rng.choice([-1, 1]) * rng.randint(1, 40)
        return theta_t(t)
    d = rng.choice(SQUAREFREE)
    while True:
        k = rng.randint(-9, 9)
        if k * k != d:
            return theta_dk(d, k)


def random_mixed(rng):
    """Mostly generic maps, with C2 and S3 maps hidden behind a random coordinate change."""
    r = rng.random()
    if r < 0.8:
        return random_map(rng)
    base = random_c2(rng) if r < 0.9 else random_s3(rng)
    return conjugate(base, random_moebius(rng, 3))
