"""Division with remainder inside A[x] without leaving A.

Scaling the dividend by a power of the divisor's leading coefficient keeps
every quotient coefficient in A, at the price of the multiplier ``a``.
"""

from krull.poly import content_primitive, parse_poly, pseudo_divide, reduce_mod
from krull.rings import ZZ, Zloc

f, g = parse_poly(ZZ, "x^2+1"), parse_poly(ZZ, "2x+1")
d = pseudo_divide(f, g)
print(f"({d.a})*({f}) = ({g})*({d.q}) + {d.r}")
assert f.scale(d.a) == g * d.q + d.r

# A unit leading coefficient gives ordinary division.
f, g = parse_poly(ZZ, "x^5-3x^2+7"), parse_poly(ZZ, "-x^2+x-1")
d = pseudo_divide(f, g)
print(f"({d.a})*({f}) = ({g})*({d.q}) + {d.r}")

# Content and primitive part; the primitive part reduces modulo p to a
# nonzero polynomial over the residue field.
for R, text in [(ZZ, "6x+3"), (ZZ, "12x^3-18x+30"), (Zloc(2), "2x-1"), (Zloc(3), "9x^2+6")]:
    h = parse_poly(R, text)
    c, hp = content_primitive(h)
    print(f"{R}: {h} = {c} * ({hp}),  mod {R.elem(R.p or 2)} -> {reduce_mod(h, R.elem(R.p or 2))}")
