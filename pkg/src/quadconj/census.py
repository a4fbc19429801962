"""Brute-force census of quadratic maps over small prime fields.

Every degree-2 map over F_p is enumerated as a 6-tuple of residues
``(n0, n1, n2, d0, d1, d2)`` scaled so the leading numerator coefficient is
1. Orbits under PGL_2(F_p) are found with a union-find over the action of a
generating set, using plain integer arithmetic that shares no code with the
classifier. :func:`crosscheck` then compares the partition against
:func:`quadconj.normalform.are_conjugate`.
"""

from __future__ import annotations

import functools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .exactnum import GF
from .moduli import AutClass
from .normalform import classify, decide
from .ratmap import RationalMap

DEFAULT_PRIMES = (5, 7, 11, 13)
MAX_DEFAULT_P = 13


def _check_p(p: int, allow_large: bool = False):
    if p <= 3 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p must be a prime > 3, got {p}")
    if p > MAX_DEFAULT_P and not allow_large:
        raise ValueError(f"p = {p} exceeds {MAX_DEFAULT_P}; pass allow_large=True")


def _res22(a0, a1, a2, b0, b1, b2, p):
    """Resultant of two binary quadratic forms, mod p."""
    return ((a2 * b0 - a0 * b2) ** 2 - (a2 * b1 - a1 * b2) * (a1 * b0 - a0 * b1)) % p


def _canon(v, p):
    """Scale a 6-tuple so that its leading numerator coefficient is 1."""
    lead = v[2] or v[1] or v[0]
    inv = pow(lead, -1, p)
    return tuple(x * inv % p for x in v)


def map_tuples(p: int):
    """All degree-2 maps over F_p as canonical 6-tuples, in lexicographic order."""
    out = []
    nums = [(n0, n1, n2) for n2 in range(p) for n1 in range(p) for n0 in range(p)]
    nums = [n for n in nums if (n[2] or n[1] or n[0]) == 1]
    for n0, n1, n2 in nums:
        for d0 in range(p):
            for d1 in range(p):
                for d2 in range(p):
                    if _res22(n0, n1, n2, d0, d1, d2, p):
                        out.append((n0, n1, n2, d0, d1, d2))
    out.sort()
    return out


def enumerate_maps(p: int, allow_large: bool = False):
    """Yield every quadratic map over F_p exactly once."""
    _check_p(p, allow_large)
    F = GF(p)
    for v in map_tuples(p):
        yield RationalMap(v[:3], v[3:], F)


def conj_tuple(v, g, p):
    """``h^-1 o phi o h`` on 6-tuples, ``h = (a, b; c, e)``, all mod p."""
    a, b, c, e = g
    out = []
    for n0, n1, n2 in (v[:3], v[3:]):
        x2 = n2 * a * a + n1 * a * c + n0 * c * c
        xy = 2 * n2 * a * b + n1 * (a * e + b * c) + 2 * n0 * c * e
        y2 = n2 * b * b + n1 * b * e + n0 * e * e
        out.append((y2, xy, x2))
    (P0, P1, P2), (Q0, Q1, Q2) = out
    num = (e * P0 - b * Q0, e * P1 - b * Q1, e * P2 - b * Q2)
    den = (a * Q0 - c * P0, a * Q1 - c * P1, a * Q2 - c * P2)
    return _canon(tuple(x % p for x in num + den), p)


def primitive_root(p: int) -> int:
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in range(2, p) if (p - 1) % q == 0 and all(q % r for r in range(2, q))):
            return g
    raise ValueError(p)  # pragma: no cover


def generators(p: int):
    """z + 1, g z (g a primitive root) and 1/z generate PGL_2(F_p)."""
    return [(1, 1, 0, 1), (primitive_root(p), 0, 0, 1), (0, 1, 1, 0)]


def pgl2(p: int):
    """All p^3 - p elements of PGL_2(F_p), first nonzero entry scaled to 1."""
    out = [(1, b, c, e) for b in range(p) for c in range(p) for e in range(p) if (e - b * c) % p]
    out += [(0, 1, c, e) for c in range(1, p) for e in range(p)]
    return out


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


def _images(args):
    chunk, gens, p = args
    return [[conj_tuple(v, g, p) for g in gens] for v in chunk]


def orbit_partition(maps, p: int, jobs: int = 1):
    """Partition canonical 6-tuples into PGL_2(F_p)-orbits.

    Returns a dict mapping each orbit's least element to the sorted member list.
    The work is split into strata by leading numerator pattern; each stratum's
    generator images are computed independently and merged afterwards, so the
    result does not depend on ``jobs``.
    """
    maps = list(maps)
    index = {v: i for i, v in enumerate(maps)}
    gens = generators(p)
    strata: dict[tuple, list] = {}
    for v in maps:
        strata.setdefault((v[2], v[1]), []).append(v)
    tasks = [(chunk, gens, p) for _, chunk in sorted(strata.items())]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_images, tasks))
    else:
        results = [_images(t) for t in tasks]
    uf = UnionFind(len(maps))
    for (chunk, _, _), imgs in zip(tasks, results):
        for v, row in zip(chunk, imgs):
            i = index[v]
            for w in row:
                uf.union(i, index[w])
    orbits: dict[int, list] = {}
    for i, v in enumerate(maps):
        orbits.setdefault(uf.find(i), []).append(v)
    return {min(members): sorted(members) for members in orbits.values()}


def full_orbit(v, p: int) -> set:
    """Orbit of one map under every element of PGL_2(F_p)."""
    return {conj_tuple(v, g, p) for g in pgl2(p)}


def stabilizer_order(v, p: int) -> int:
    return sum(1 for g in pgl2(p) if conj_tuple(v, g, p) == v)


def to_map(v, p: int) -> RationalMap:
    return RationalMap(v[:3], v[3:], GF(p))


def to_tuple(m: RationalMap):
    return _canon(tuple(int(c) for c in m.num + m.den), m.field.p)


# --------------------------------------------------------------------------


@dataclass
class CensusReport:
    p: int
    maps: int
    orbits: int
    orbits_trivial: int
    orbits_c2: int
    orbits_s3: int
    pairs_checked: int = 0
    intra_checked: int = 0
    mismatches: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    ROW = ("p", "maps", "orbits", "orbits_trivial", "orbits_c2", "orbits_s3", "mismatches")

    def row(self):
        d = asdict(self)
        d["mismatches"] = len(self.mismatches)
        return [d[k] for k in self.ROW]


def format_table(reports) -> str:
    rows = [CensusReport.ROW] + [tuple(str(x) for x in r.row()) for r in reports]
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(str(c).rjust(w) for c, w in zip(r, widths)) for r in rows)


@functools.lru_cache(maxsize=None)
def _classify(m: RationalMap):
    return classify(m)


def crosscheck(p: int, samples: int = 2, seed: int = 0, jobs: int = 1, allow_large: bool = False) -> CensusReport:
    """Compare the brute-force orbit partition with the classifier.

    Every pair of distinct orbit representatives must be reported
    non-conjugate; ``samples`` random members of each orbit must be reported
    conjugate to the representative, with a witness that checks out.
    """
    _check_p(p, allow_large)
    maps = map_tuples(p)
    orbits = orbit_partition(maps, p, jobs)
    rng = random.Random(seed)
    reps = sorted(orbits)
    rep_maps = [to_map(r, p) for r in reps]
    counts = {c: 0 for c in AutClass}
    mismatches = []
    for r, m in zip(reps, rep_maps):
        counts[_classify(m).aut_class] += 1
    if sum(len(v) for v in orbits.values()) != len(maps):
        mismatches.append({"kind": "orbit sizes do not sum to the map count"})
    pairs = 0
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            pairs += 1
            dec = decide(rep_maps[i], rep_maps[j], _classify(rep_maps[i]), _classify(rep_maps[j]))
            if dec.conjugate:
                mismatches.append({"kind": "distinct orbits reported conjugate", "a": reps[i], "b": reps[j]})
    intra = 0
    for r, m in zip(reps, rep_maps):
        members = orbits[r]
        picks = rng.sample(members, min(samples, len(members)))
        for v in picks:
            intra += 1
            other = to_map(v, p)
            dec = decide(m, other, _classify(m), _classify(other), witness=True)
            if not dec.conjugate or dec.witness is None:
                mismatches.append({"kind": "same orbit reported non-conjugate", "a": r, "b": v})
            elif conj_tuple(r, tuple(int(x) for x in dec.witness.entries), p) != v:
                mismatches.append({"kind": "witness fails brute-force check", "a": r, "b": v})
            if _classify(other).sigma != _classify(m).sigma:
                mismatches.append({"kind": "sigma not constant on orbit", "a": r, "b": v})
    return CensusReport(
        p=p,
        maps=len(maps),
        orbits=len(orbits),
        orbits_trivial=counts[AutClass.TRIVIAL],
        orbits_c2=counts[AutClass.C2],
        orbits_s3=counts[AutClass.S3],
        pairs_checked=pairs,
        intra_checked=intra,
        mismatches=mismatches,
    )
