"""Maximal ideals (p, g) of A[x] and their heights.

An ideal (p, g) is maximal exactly when g is irreducible over the finite
field A/(p).  The classification is cross-checked against a brute-force
search for inverses in the quotient ring.
"""

from krull.ideals import classify, parse_ideal
from krull.oracle import field_quotient_oracle
from krull.rings import ZZ, ZZ_I, GF_t

cases = [
    (ZZ, "(5, x^2+2)"), (ZZ, "(2, x^2+1)"), (ZZ, "(3, x)"), (ZZ, "(7, x^3+3)"),
    (ZZ_I, "(3, x^2+1)"), (ZZ_I, "(2+i, x^2+2)"), (GF_t(2), "([t^2+t+1], x^2+x+[t])"),
]
for R, text in cases:
    M = parse_ideal(R, text)
    verdict = classify(M)
    brute = field_quotient_oracle(M.p, M.g)
    print(f"{R:>9}  {str(M):<28} {verdict}")
    print(f"{'':>9}  {'':<28} quotient is a field by exhaustive search: {brute}")
