"""Desk-scale irreducibility decisions in ``K[x]``, ``K`` the fraction field of ``A``.

Only sufficient tests are used, so the answer may be "undecided":

* degree 1 is irreducible;
* a root ``r/s`` in ``K`` (``r | a0``, ``s | lc``) proves reducibility;
* degree 2 or 3 without a root in ``K`` is irreducible;
* an Eisenstein prime for ``g`` or its reversal proves irreducibility;
* an irreducible reduction modulo some ``p`` not dividing ``lc(g)`` proves
  irreducibility of a primitive ``g``.

Over ``Zloc(p)`` and ``QQ`` the fraction field is ``Q``, so those inputs are
converted to primitive integer polynomials first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapacityError, ConstantPolynomialError
from .poly import (
    Poly,
    content_primitive,
    evaluate_fraction,
    rational_to_integer_poly,
    reduce_mod,
)
from .residue import residue_irreducible
from .rings import (
    Elem,
    IrreducibleStream,
    RingKind,
    canonical_divisors,
    divides,
    is_irreducible,
    units,
)

STREAM_PRIMES = 20


@dataclass(frozen=True)
class Decision:
    irreducible: bool | None
    reason: str


def kx_irreducible(g: Poly) -> Decision:
    if g.is_constant():
        raise ConstantPolynomialError(f"{g} is constant")
    if g.ring.kind in (RingKind.RATIONALS, RingKind.LOCALIZED):
        return _decide(rational_to_integer_poly(g))
    return _decide(content_primitive(g)[1])


def find_root(g: Poly) -> tuple[Elem, Elem] | None:
    """A root ``(num, den)`` of primitive ``g`` in the fraction field, if any."""
    a0, lc = g.coeffs[0], g.lc
    if not a0:
        return g.ring.zero, g.ring.one
    dens = canonical_divisors(lc)
    nums = [u * r for r in canonical_divisors(a0) for u in units(g.ring)]
    for num, den in itertools.product(nums, dens):
        if not evaluate_fraction(g, num, den)[0]:
            return num, den
    return None


def _eisenstein(p: Elem, coeffs) -> bool:
    *low, top = coeffs
    return (not divides(p, top) and all(divides(p, c) for c in low)
            and not divides(p * p, coeffs[0]))


def _decide(g: Poly) -> Decision:
    d = g.degree
    if d == 1:
        return Decision(True, "degree 1")
    if not g.coeffs[0]:
        return Decision(False, "x divides the polynomial")
    candidates = []
    root_searched = False
    try:
        root = find_root(g)
        root_searched = True
        if root is not None:
            num, den = root
            return Decision(False, f"root {num}/{den} in the fraction field")
        if d <= 3:
            return Decision(True, f"degree {d} with no root in the fraction field")
        candidates = [e for e in canonical_divisors(g.coeffs[0]) + canonical_divisors(g.lc)
                      if is_irreducible(e)]
    except CapacityError:
        pass
    stream = list(itertools.islice(IrreducibleStream(g.ring), STREAM_PRIMES))
    for p in dict.fromkeys(candidates + stream):
        if _eisenstein(p, g.coeffs) or _eisenstein(p, g.coeffs[::-1]):
            return Decision(True, f"Eisenstein at {p}")
    for p in stream:
        if divides(p, g.lc):
            continue
        try:
            if residue_irreducible(reduce_mod(g, p)):
                return Decision(True, f"irreducible modulo {p}")
        except CapacityError:
            continue
    what = "no root found, " if root_searched else "root search over capacity, "
    return Decision(None, f"degree {d}: {what}no Eisenstein prime, no irreducible reduction")
