# Fixed points, multipliers and the moduli coordinates (sigma1, sigma2).
#
# A quadratic map has three fixed points on P^1 (with multiplicity). Their
# multipliers do not change under a change of coordinates, and neither do the
# symmetric functions sigma1, sigma2 of the three multipliers.

from quadconj import Moebius, conjugate, fixed_point_data, parse_map, sigma_invariants
from quadconj.ratmap import holomorphic_index_sum

phi = parse_map("z^2 + 1")
print("phi =", phi)

for fp in fixed_point_data(phi):
    print("  fixed point", fp.point, "multiplicity", fp.multiplicity, "multiplier", fp.multiplier)

sig = sigma_invariants(phi)
print("sigma =", *sig.as_tuple(), " sigma3 =", sig.sigma3)

# sum of 1/(1 - lambda) over the fixed points is always 1
print("index sum:", holomorphic_index_sum(phi))

# change coordinates and look again
h = Moebius(2, 1, 1, 3)
psi = conjugate(phi, h)
print("\npsi = h^-1 o phi o h =", psi)
print("sigma(psi) =", *sigma_invariants(psi).as_tuple())

# when all three fixed points are irrational the multipliers are still
# available through the cubic they satisfy
ex = parse_map("(2z^2+2z+2)/(-z^2+2z+2)")
(fp,) = fixed_point_data(ex).entries
print("\nfixed points of", ex, "are roots of", fp.minpoly)
print("their multipliers are roots of", fp.multiplier)
print("sigma =", *sigma_invariants(ex).as_tuple())
