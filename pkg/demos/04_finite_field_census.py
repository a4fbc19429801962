# Brute force over F_p: enumerate all quadratic maps, split them into orbits
# under PGL_2(F_p), and compare with what the classifier says.

import time

from quadconj import GF, parse_map
from quadconj.census import crosscheck, format_table, full_orbit, stabilizer_order, to_tuple

reports = []
for p in (5, 7, 11):
    t0 = time.perf_counter()
    reports.append(crosscheck(p))
    print(f"p = {p}: {time.perf_counter() - t0:.1f} s")
print()
print(format_table(reports))

# orbit-stabilizer on two maps with extra symmetry
for text, p in [("2z + 5/z", 7), ("1/z^2", 7), ("1/z^2", 5)]:
    v = to_tuple(parse_map(text, GF(p)))
    print(f"\n{text} over F_{p}: orbit {len(full_orbit(v, p))}, stabilizer {stabilizer_order(v, p)}, group {p**3 - p}")
# F_5 has no cube root of unity, so z -> wz is missing from the stabilizer of 1/z^2
