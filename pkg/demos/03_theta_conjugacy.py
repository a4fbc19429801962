# Conjugacy inside the S3 family over Q.
#
# t/z^2 and t'/z^2 are conjugate iff t/t' or t t' is a rational cube. For
# theta_(d,k), with the two-cycle at +-sqrt(d), the question becomes whether
# a norm-one element of Q(sqrt d) is a cube there.

from quadconj import QuadExt, S3General, conjugate, cube_root_norm_one, theta_dk, theta_t
from quadconj.normalform import s3_dk_conjugate, s3_t_conjugate

for t1, t2 in [(2, 16), (2, 4), (2, 3), (1, 1)]:
    dec = s3_t_conjugate(t1, t2)
    print(f"{t1}/z^2 ~ {t2}/z^2: {dec.conjugate!s:5}", dec.witness or "")

print()
for f1, f2 in [((2, 1), (2, 2)), ((2, 1), (2, -1)), ((2, 1), (3, 1)), ((5, 1), (5, 4))]:
    dec = s3_dk_conjugate(S3General(*f1), S3General(*f2))
    line = f"theta{f1} ~ theta{f2}: {dec.conjugate!s:5}"
    if dec.conjugate:
        assert conjugate(theta_dk(*f1), dec.witness) == theta_dk(*f2)
        line += f" via {dec.witness}"
    print(line)

# the cube test on its own
beta = QuadExt(1, 2, 3) / QuadExt(1, -2, 3)
print("\nbeta =", beta, " norm", beta.norm())
print("cube root of beta^3:", cube_root_norm_one(beta**3))
print("cube root of beta:  ", cube_root_norm_one(beta))
