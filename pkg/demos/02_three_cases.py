# Every quadratic map falls in exactly one of three automorphism classes.
#
# Trivial: the pair (sigma1, sigma2) determines the map up to conjugacy over
# the base field, and there is one representative per point.
# C2: k z + b/z, where k is fixed by the multipliers and b only matters up to squares.
# S3: t/z^2 when the two-cycle is rational, theta_(d,k) otherwise.

from quadconj import are_conjugate, classify, conjugate, format_map, parse_map
from quadconj.moduli import symmetry_locus_value

for text in ["z^2 + 1", "z^2 + 1/4", "2z + 5/z", "z^2", "1/z^2", "(z^2-4z+2)/(z^2-2z+2)", "-(z^2+2)/(2z)"]:
    phi = parse_map(text)
    c = classify(phi)
    params = ", ".join(f"{k}={v}" for k, v in c.normal_form.params().items())
    print(f"{text:24} {c.aut_class!s:8} {c.normal_form.case}({params})")
    print(f"{'':24} symmetry locus value {symmetry_locus_value(c.sigma)}")

# the normal form comes with the coordinate change that reaches it
phi = parse_map("z^2")
c = classify(phi)
print("\nz^2 conjugated by", c.witness, "is", format_map(conjugate(phi, c.witness)))

# over Q the square class of b matters: these two are conjugate over Q(sqrt 2) only
dec = are_conjugate(parse_map("z + 1/z"), parse_map("z + 2/z"))
print("\nz + 1/z ~ z + 2/z over Q?", dec.conjugate, "  over the closure?", dec.geometric)

# trivial class: a witness is computed on request
phi = parse_map("z^2 + 1")
psi = parse_map("2z^2/(-z^2+4z-4)")
dec = are_conjugate(phi, psi, witness=True)
print("\nz^2 + 1 ~", format_map(psi), ":", dec.conjugate, "via", dec.witness)
