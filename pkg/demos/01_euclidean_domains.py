"""Five principal ideal domains behind one interface.

Each ring has a Euclidean division, a canonical representative of every
associate class, and an ordered stream of nonassociate irreducibles.
"""

from krull.rings import QQ, ZZ, ZZ_I, GF_t, Zloc, canonical_associate, euclid_divmod, first_irreducibles, gcd

F2 = GF_t(2)
L2 = Zloc(2)

print("Euclidean division")
for R, a, b in [(ZZ, "7", "3"), (ZZ_I, "1+3i", "1+i"), (ZZ_I, "7+2i", "2-i"),
                (F2, "[t^3+1]", "[t^2+1]"), (L2, "4/3", "2"), (L2, "3", "4")]:
    a, b = R.elem(a), R.elem(b)
    q, r = euclid_divmod(a, b)
    print(f"  {R:>9}: {a} = ({b})*({q}) + {r}")

print("\nCanonical associates (unit, representative)")
for R, a in [(ZZ, "-5"), (ZZ_I, "-1+i"), (GF_t(3), "[2*t+2]"), (L2, "12/5"), (QQ, "-3/7")]:
    u, c = canonical_associate(R.elem(a))
    print(f"  {R:>9}: {a} = {u} * {c}")

print("\ngcd")
print("  gcd(t^2+t, t^2+1) over GF(2)[t] =", gcd(F2.elem("[t^2+t]"), F2.elem("[t^2+1]")))
print("  gcd(4, 6) over Zloc(5)         =", gcd(Zloc(5).elem(4), Zloc(5).elem(6)))

# The stream is where the rings differ most: ZZ, ZZ[i] and GF(p)[t] never run
# dry, the localization has a single irreducible class and QQ has none.
print("\nFirst irreducibles")
for R in (ZZ, ZZ_I, F2, L2, QQ):
    found = first_irreducibles(R, 8)
    print(f"  {R:>9}: {', '.join(map(str, found)) or '(none)'}")
