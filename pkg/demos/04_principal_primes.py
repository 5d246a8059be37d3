"""When can a principal ideal (g) of A[x] be maximal?

If A has an irreducible p not dividing lc(g), then (g) < (g, p) < (1), so
(g) is prime of height 1 but never maximal.  With only one irreducible class
(a localization of ZZ) or none (QQ), the search runs out and (g) can be
maximal.
"""

from krull.ideals import classify, contract, parse_ideal, refute_principal_maximality
from krull.poly import parse_poly
from krull.rings import QQ, ZZ, ZZ_I, Zloc

for R, text in [(ZZ, "x^2+1"), (ZZ, "6x+1"), (ZZ, "30x^2+1"), (ZZ_I, "(1+i)*x+1")]:
    g = parse_poly(R, text)
    r = refute_principal_maximality(g)
    print(f"{R}: ({g}) is not maximal; ({g}, {r.witness}) is proper, found in {r.steps} steps")

print()
for R, text in [(Zloc(2), "(2x-1)"), (Zloc(3), "(3x^2-1)"), (Zloc(5), "(x^2+1)"), (QQ, "(x^2+1)"), (ZZ, "(x^2+1)")]:
    M = parse_ideal(R, text)
    c = classify(M)
    r = refute_principal_maximality(M.g)
    note = f"witness {r.witness}" if r else r.reason
    print(f"{R:>7}: {str(M):<12} {str(c):<44} contraction {contract(M)}, refutation: {note}")
