"""Normal forms of quadratic maps up to K-conjugacy, conjugacy tests and witnesses.

Every quadratic map over K falls into exactly one automorphism class:

* trivial: one representative per moduli point (sigma_1, sigma_2);
* C2: ``k z + b/z`` with ``k`` fixed by the multipliers and ``b`` defined
  up to squares;
* S3: ``t/z^2`` when the unique two-cycle is K-rational (``t`` up to the
  relation ``t ~ t c^3 ~ c^3/t``), otherwise
  ``(k z^2 - 2 d z + d k) / (z^2 - 2 k z + d)`` with the two-cycle at
  ``+-sqrt(d)``.

All witnesses ``h`` returned here satisfy ``conjugate(phi, h) == target``
exactly; each is checked before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .exactnum import QQ, Field, PrimeField, QuadExt, norm_one_cube_roots, squarefree_part
from .moduli import (
    AutClass,
    InvariantError,
    ModuliPoint,
    aut_class,
    move_infinity_off_fixed,
    normal_form_polys,
    repeated_multiplier,
    sigma_invariants,
    symmetry_locus_value,
)
from .poly import Poly, inverse_mod, nullspace, rational_roots
from .ratmap import (
    INF,
    Moebius,
    RationalMap,
    conjugate,
    fixed_point_data,
    quadratic_roots,
    second_dynatomic,
)


# --------------------------------------------------------------------------
# normal-form values


@dataclass(frozen=True)
class TrivialAut:
    sigma1: object
    sigma2: object
    case = "Trivial"

    def params(self):
        return {"sigma1": self.sigma1, "sigma2": self.sigma2}

    def to_map(self, field: Field = QQ) -> RationalMap:
        return normal_form_trivial(ModuliPoint(self.sigma1, self.sigma2, field))


@dataclass(frozen=True)
class C2Form:
    k: object
    b: object
    case = "C2"

    def __post_init__(self):
        if self.k == 0 or 2 * self.k == -1:
            raise ValueError("k must avoid 0 and -1/2")
        if self.b == 0:
            raise ValueError("b must be nonzero")

    def params(self):
        return {"k": self.k, "b": self.b}

    def to_map(self, field: Field = QQ) -> RationalMap:
        return phi_kb(self.k, self.b, field)


@dataclass(frozen=True)
class S3General:
    d: object
    k: object
    case = "S3General"

    def __post_init__(self):
        if self.d == 0 or self.k * self.k == self.d:
            raise ValueError("need d != 0 and k^2 != d")

    def params(self):
        return {"d": self.d, "k": self.k}

    def to_map(self, field: Field = QQ) -> RationalMap:
        return theta_dk(self.d, self.k, field)


@dataclass(frozen=True)
class S3RationalCycle:
    t: object
    case = "S3RationalCycle"

    def __post_init__(self):
        if self.t == 0:
            raise ValueError("t must be nonzero")

    def params(self):
        return {"t": self.t}

    def to_map(self, field: Field = QQ) -> RationalMap:
        return theta_t(self.t, field)


NormalForm = TrivialAut | C2Form | S3General | S3RationalCycle


def phi_kb(k, b, field: Field = QQ) -> RationalMap:
    """``k z + b / z``"""
    return RationalMap([b, 0, k], [0, 1], field)


def theta_dk(d, k, field: Field = QQ) -> RationalMap:
    """``(k z^2 - 2 d z + d k) / (z^2 - 2 k z + d)``; two-cycle at ``+-sqrt(d)``."""
    d, k = field(d), field(k)
    return RationalMap([d * k, -2 * d, k], [d, -2 * k, 1], field)


def theta_t(t, field: Field = QQ) -> RationalMap:
    """``t / z^2``"""
    return RationalMap([t], [0, 0, 1], field)


@dataclass
class ConjDecision:
    conjugate: bool
    geometric: bool
    witness: Moebius | None = None
    certificate: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.conjugate


@dataclass
class Classification:
    aut_class: AutClass
    normal_form: NormalForm
    witness: Moebius | None
    sigma: ModuliPoint


def _verified(phi: RationalMap, h: Moebius, target: RationalMap) -> Moebius:
    if conjugate(phi, h) != target:
        raise InvariantError(f"witness {h!r} does not conjugate {phi!r} to {target!r}")
    return h


# --------------------------------------------------------------------------
# trivial automorphism group


def normal_form_trivial(sigma: ModuliPoint) -> RationalMap:
    """The unique representative with prescribed (sigma_1, sigma_2) off the symmetry locus."""
    if symmetry_locus_value(sigma) == 0:
        raise ValueError("moduli point lies on the symmetry locus; the normal form degenerates")
    P, Q = normal_form_polys(sigma)
    phi = RationalMap(P, Q, sigma.field)
    if sigma_invariants(phi) != sigma:
        raise InvariantError("normal form does not reproduce its moduli point")
    return phi


def _other_preimage(phi: RationalMap, y):
    """The preimage of the fixed, non-critical point ``y`` other than ``y`` itself."""
    F = phi.field
    if y is INF:
        Q = phi.den_poly
        if Q.degree != 1:
            raise InvariantError("infinity is critical or not fixed")
        return -Q[0] / Q[1]
    H = phi.num_poly - phi.den_poly * y
    if H.degree < 2:
        return INF
    lin = H.exact_div(Poly([-y, 1], F))
    return -lin[0] / lin[1]


def _trivial_witness_to_normal(phi: RationalMap, sigma: ModuliPoint) -> Moebius:
    """``h`` with ``conjugate(phi, h) == normal_form_trivial(sigma)``."""
    N = normal_form_trivial(sigma)
    F = phi.field
    lam1 = repeated_multiplier(sigma)
    if lam1 is None:
        # The normal form has its fixed point of multiplier L at z = L. Solve
        # h(L(x)) = x on the fixed-point algebra A = K[x]/(fixed polynomial),
        # which is linear in the entries of h.
        g, psi = move_infinity_off_fixed(phi)
        Fx = psi.fixed_point_poly().monic()
        Q = psi.den_poly
        lam = (psi.derivative_num() * inverse_mod(Q * Q, Fx)) % Fx
        x = Poly.x(F)
        xlam = (x * lam) % Fx
        one = Poly([1], F)
        cols = [lam, one, -xlam, -x]
        rows = [[col[i] for col in cols] for i in range(3)]
        ker = nullspace(rows, F)
        if len(ker) != 1:
            raise InvariantError("fixed-point matching system is not of rank 3")
        h = g @ Moebius(*ker[0], field=F)
        return _verified(phi, h, N)
    # Exactly two multipliers are 1: a double fixed point x_d and a simple one x_s.
    if lam1 != 1:
        raise ValueError("map does not have trivial automorphism group")
    pts = {fp.multiplicity: fp for fp in fixed_point_data(phi)}
    xd, xs = pts[2].point, pts[1].point
    lam = pts[1].multiplier
    src = [F.one, lam, _other_preimage(N, F.one)]
    dst = [xd, xs, _other_preimage(phi, xd)]
    return _verified(phi, Moebius.from_points(src, dst, F), N)


def trivial_case_witness(phi: RationalMap, psi: RationalMap) -> Moebius:
    """The unique ``h`` in PGL_2(K) with ``conjugate(phi, h) == psi`` (trivial Aut, equal sigma)."""
    s1, s2 = sigma_invariants(phi), sigma_invariants(psi)
    if s1 != s2:
        raise ValueError("maps have different multiplier invariants")
    if aut_class(s1) is not AutClass.TRIVIAL:
        raise ValueError("maps have a nontrivial automorphism group")
    h = _trivial_witness_to_normal(phi, s1) @ _trivial_witness_to_normal(psi, s2).inverse()
    return _verified(phi, h, psi)


# --------------------------------------------------------------------------
# C2


def _is_base_point(x) -> bool:
    return x is INF or not isinstance(x, QuadExt)


def normalize_c2(phi: RationalMap) -> tuple[C2Form, Moebius]:
    """Return ``(C2Form(k, b), h)`` with ``conjugate(phi, h) == k z + b/z``, ``b`` canonical."""
    F = phi.field
    sigma = sigma_invariants(phi)
    if aut_class(sigma) is not AutClass.C2:
        raise ValueError("map does not have automorphism group C2")
    lam1 = repeated_multiplier(sigma)
    k = (lam1 + 1) / 2
    lam3 = 1 / k
    # The fixed point with multiplier 1/k is Galois-stable, hence K-rational or infinity.
    special = None
    for fp in fixed_point_data(phi):
        if fp.point is not None and _is_base_point(fp.point) and fp.multiplier == lam3:
            if lam1 == 1 or fp.multiplicity == 1:
                special = fp.point
                break
    if special is None:
        raise InvariantError("no rational fixed point with multiplier 1/k")
    h = Moebius.identity(F) if special is INF else Moebius(special, 1, 1, 0, F)
    psi = conjugate(phi, h)
    # psi fixes infinity with multiplier 1/k != 0, so its denominator is linear.
    d0, d1, d2 = psi.den
    if d2 != 0 or d1 == 0:
        raise InvariantError(f"unexpected shape after moving fixed point to infinity: {psi!r}")
    h = h @ Moebius.translation(-d0 / d1, F)
    psi = conjugate(phi, h)
    n0, n1, n2 = psi.num
    D = psi.den[1]
    if n1 != 0 or psi.den[0] != 0 or n2 / D != k:
        raise InvariantError(f"C2 normalization did not reach k z + b/z: {psi!r}")
    b0 = n0 / D
    b, m = F.split_square(b0)
    h = h @ Moebius.scaling(m, F)
    form = C2Form(k, b)
    return form, _verified(phi, h, form.to_map(F))


def c2_conjugate(form1: C2Form, form2: C2Form, field: Field = QQ) -> ConjDecision:
    """``k z + b/z`` vs ``k' z + b'/z``: conjugate over K iff ``k == k'`` and ``b'/b`` is a square."""
    k, b = field(form1.k), field(form1.b)
    k2, b2 = field(form2.k), field(form2.b)
    geometric = k == k2
    if not geometric:
        return ConjDecision(False, False)
    m = field.sqrt(b2 / b)
    if m is None:
        return ConjDecision(False, True)
    # z -> z/m turns b into b m^2
    w = Moebius(1, 0, 0, m, field)
    w = _verified(phi_kb(k, b, field), w, phi_kb(k2, b2, field))
    return ConjDecision(True, True, w, {"m": m})


# --------------------------------------------------------------------------
# S3


def normalize_s3(phi: RationalMap) -> tuple[S3General | S3RationalCycle, Moebius]:
    F = phi.field
    if aut_class(phi) is not AutClass.S3:
        raise ValueError("map does not have automorphism group S3")
    dyn = second_dynatomic(phi)
    h = None
    if dyn.degree == 1:
        # two-cycle {r, infinity}
        r = -dyn[0] / dyn[1]
        h = Moebius.translation(r, F)
    elif dyn.degree == 2:
        roots = rational_roots(dyn)
        if len(roots) == 2:
            (r1, _), (r2, _) = roots
            h = Moebius(r1, r2, 1, 1, F)  # infinity -> r1, 0 -> r2
    else:
        raise InvariantError(f"second dynatomic polynomial has degree {dyn.degree}")
    if h is not None:
        psi = conjugate(phi, h)
        if psi.num[1] != 0 or psi.num[2] != 0 or psi.den[0] != 0 or psi.den[1] != 0:
            raise InvariantError(f"two-cycle at 0, infinity but map is not t/z^2: {psi!r}")
        t = psi.num[0] / psi.den[2]
        tc = F.cube_class_rep(t)
        lam = F.cube_root(t / tc)
        if lam is not None:
            h = h @ Moebius.scaling(lam, F)
        else:
            lam = F.cube_root(t * tc)
            h = h @ Moebius(0, lam, 1, 0, F)
        form = S3RationalCycle(tc)
        return form, _verified(phi, h, form.to_map(F))
    # irrational two-cycle a +- b sqrt(d)
    alpha, _ = quadratic_roots(dyn)
    a, b, d = alpha.x, alpha.y, alpha.d
    if not isinstance(F, PrimeField) and b < 0:
        b = -b
    h = Moebius(b, a, 0, 1, F)
    psi = conjugate(phi, h)
    if psi.den[2] == 0:
        # the degenerate member k = infinity; z -> d/z preserves the two-cycle
        # and moves it to k = 0
        h = h @ Moebius(0, d, 1, 0, F)
        psi = conjugate(phi, h)
    k = psi.num[2] / psi.den[2]
    form = S3General(d, k)
    if psi != form.to_map(F):
        raise InvariantError(f"two-cycle at +-sqrt({d}) but map is not theta_(d,k): {psi!r}")
    return form, h


def s3_t_conjugate(t1, t2, field: Field = QQ) -> ConjDecision:
    """``t/z^2`` vs ``t'/z^2``: conjugate iff ``t/t'`` or ``t t'`` is a cube."""
    t1, t2 = field(t1), field(t2)
    if t1 == 0 or t2 == 0:
        raise ValueError("t must be nonzero")
    src, dst = theta_t(t1, field), theta_t(t2, field)
    lam = field.cube_root(t1 / t2)
    if lam is not None:
        w = _verified(src, Moebius.scaling(lam, field), dst)
        return ConjDecision(True, True, w, {"lambda": lam, "relation": "t/t' = lambda^3"})
    lam = field.cube_root(t1 * t2)
    if lam is not None:
        w = _verified(src, Moebius(0, lam, 1, 0, field), dst)
        return ConjDecision(True, True, w, {"lambda": lam, "relation": "t*t' = lambda^3"})
    return ConjDecision(False, True)


def _check_d(d, field: Field):
    if field == QQ:
        dec = squarefree_part(d)
        if dec.core != d:
            raise ValueError(f"d = {d} is not a square-free integer")


def _theta_to_t(d, k, field: Field):
    """For square ``d``: ``(t, h)`` with ``conjugate(theta_dk(d, k), h) == t/z^2``."""
    r = field.sqrt(d)
    h = Moebius(-r, r, 1, 1, field)  # 0 -> r, infinity -> -r
    psi = conjugate(theta_dk(d, k, field), h)
    t = psi.num[0] / psi.den[2]
    return t, _verified(theta_dk(d, k, field), h, theta_t(t, field))


def s3_dk_conjugate(form1: S3General, form2: S3General, field: Field = QQ) -> ConjDecision:
    """Decide K-conjugacy of two ``theta_(d,k)`` maps with an explicit witness.

    After rescaling so both share the radicand ``d``, the maps are conjugate
    iff one of the cross-ratios
    ``(k+r)(k'-r)/((k-r)(k'+r))`` or ``(k+r)(k'+r)/((k-r)(k'-r))``
    (``r = sqrt(d)``) is the cube of a norm-one element of K(r).
    """
    d1, k1 = field(form1.d), field(form1.k)
    d2, k2 = field(form2.d), field(form2.k)
    _check_d(d1, field)
    _check_d(d2, field)
    src, dst = theta_dk(d1, k1, field), theta_dk(d2, k2, field)
    sq1, sq2 = field.is_square(d1), field.is_square(d2)
    if sq1 != sq2:
        return ConjDecision(False, True)
    if sq1:
        t1, h1 = _theta_to_t(d1, k1, field)
        t2, h2 = _theta_to_t(d2, k2, field)
        dec = s3_t_conjugate(t1, t2, field)
        if not dec.conjugate:
            return dec
        w = h1 @ dec.witness @ h2.inverse()
        return ConjDecision(True, True, _verified(src, w, dst), dict(dec.certificate, t=(t1, t2)))
    b0 = field.sqrt(d2 / d1)
    if b0 is None:
        return ConjDecision(False, True)
    # theta_(b0^2 d, k') conjugated by z -> b0 z is theta_(d, k'/b0)
    s = Moebius.scaling(b0, field)
    K2 = k2 / b0
    mid = theta_dk(d1, K2, field)
    r = QuadExt(field.zero, field.one, d1)
    kp, km = k1 + r, k1 - r
    branches = [
        (field.one, kp * (K2 - r) / (km * (K2 + r))),
        (-field.one, kp * (K2 + r) / (km * (K2 - r))),
    ]
    for b, X in branches:
        for beta in norm_one_cube_roots(X, field):
            if beta == -1:
                cands = [(Moebius(0, b * d1, 1, 0, field), None)]
            else:
                g = (1 - beta) / (1 + beta)  # = gamma * sqrt(d)
                if g.x != 0:
                    continue
                gamma = g.y
                cands = [(Moebius(1, -b * d1 * gamma, -gamma, b, field), gamma)]
            for h, gamma in cands:
                for hh in (h, h.inverse()):
                    if conjugate(src, hh) == mid:
                        w = _verified(src, hh @ s.inverse(), dst)
                        cert = {"b": b * b0, "gamma": gamma, "cube_root": beta}
                        return ConjDecision(True, True, w, cert)
    return ConjDecision(False, True)


# --------------------------------------------------------------------------
# dispatch


def classify(phi: RationalMap, trivial_witness: bool = False) -> Classification:
    sigma = sigma_invariants(phi)
    ac = aut_class(sigma)
    if ac is AutClass.TRIVIAL:
        form = TrivialAut(sigma.sigma1, sigma.sigma2)
        w = _trivial_witness_to_normal(phi, sigma) if trivial_witness else None
        return Classification(ac, form, w, sigma)
    if ac is AutClass.C2:
        form, w = normalize_c2(phi)
    else:
        form, w = normalize_s3(phi)
    return Classification(ac, form, w, sigma)


def are_conjugate(phi: RationalMap, psi: RationalMap, witness: bool = False) -> ConjDecision:
    """Decide whether ``psi == conjugate(phi, h)`` for some ``h`` in PGL_2(K).

    ``geometric`` reports conjugacy over the algebraic closure (equal sigma).
    For the trivial class the witness is only computed when ``witness`` is set.
    """
    if phi.field != psi.field:
        raise ValueError("maps are defined over different fields")
    return decide(phi, psi, classify(phi), classify(psi), witness)


def decide(phi, psi, c1: Classification, c2: Classification, witness: bool = False) -> ConjDecision:
    """:func:`are_conjugate` given precomputed classifications of both maps."""
    F = phi.field
    if c1.sigma != c2.sigma or c1.aut_class is not c2.aut_class:
        return ConjDecision(False, False)
    ac = c1.aut_class
    if ac is AutClass.TRIVIAL:
        w = trivial_case_witness(phi, psi) if witness else None
        return ConjDecision(True, True, w, {"sigma": c1.sigma.as_tuple()})
    f1, f2 = c1.normal_form, c2.normal_form
    if ac is AutClass.C2:
        dec = c2_conjugate(f1, f2, F)
    elif type(f1) is not type(f2):
        # the field of definition of the unique two-cycle is an invariant
        return ConjDecision(False, True)
    elif isinstance(f1, S3RationalCycle):
        dec = s3_t_conjugate(f1.t, f2.t, F)
    else:
        dec = s3_dk_conjugate(f1, f2, F)
    if not dec.conjugate:
        return dec
    w = c1.witness @ dec.witness @ c2.witness.inverse()
    return ConjDecision(True, True, _verified(phi, w, psi), dec.certificate)
