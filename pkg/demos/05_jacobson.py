"""Every nonzero polynomial avoids some maximal ideal.

So the intersection of all maximal ideals of A[x] is zero.  The witness is
built from an irreducible p and a residue polynomial not dividing f mod p;
over QQ a linear x - c with f(c) != 0 does the job.
"""

from krull.ideals import classify, member
from krull.lab import SplitMix64, jacobson_witness, random_poly, unit_gadget
from krull.poly import Poly, parse_poly
from krull.rings import QQ, ZZ, ZZ_I, GF_t, Zloc

for R, text in [(ZZ, "6x+3"), (ZZ, "1"), (ZZ, "x^2+x"), (Zloc(2), "4x-2"), (QQ, "x^2-x"), (ZZ_I, "(1+i)*x")]:
    f = parse_poly(R, text)
    M = jacobson_witness(R, f)
    print(f"{R:>7}: {str(f):<10} not in {str(M):<14} ({classify(M).status.value}, member={member(M, f)})")

# x*f + 1 is a unit only for f = 0, which is why f lies in no maximal ideal
# only when it is zero.
rng = SplitMix64(2024)
fs = [Poly.zero(ZZ)] + [random_poly(ZZ, rng) for _ in range(5)]
for f in fs:
    print(f"x*({f}) + 1 unit: {unit_gadget(f)}")

print("\nseeded batch over GF(3)[t]:")
R = GF_t(3)
for _ in range(4):
    f = random_poly(R, rng, max_degree=2)
    print(f"  {f}  avoided by  {jacobson_witness(R, f)}")
