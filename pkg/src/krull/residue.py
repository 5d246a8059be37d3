"""Residue fields ``A/(p)`` and polynomials over them.

Residue classes are stored as their canonical representatives in ``A``
(see :func:`krull.rings.mod_reduce`), so a residue polynomial is just a tuple
of ring elements that are already reduced.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import capacity
from .errors import (
    ConstantPolynomialError,
    DivisionByZeroError,
    InfiniteResidueFieldError,
    RingMismatchError,
)
from .rings import (
    Elem,
    RingKind,
    canonical_associate,
    mod_reduce,
    residue_field_size,
    residue_representatives,
    unit_inverse,
    xgcd,
)


class ResidueField:
    """``A/(p)`` for a canonical irreducible ``p``."""

    def __init__(self, p: Elem):
        if p.ring.kind is RingKind.RATIONALS:
            raise InfiniteResidueFieldError("QQ has no residue fields")
        self.p = canonical_associate(p)[1]
        self.ring = p.ring
        self._ops = p.ring.ops
        self.size = residue_field_size(self.p)
        self.zero = mod_reduce(self.ring.zero, self.p)
        self.one = mod_reduce(self.ring.one, self.p)
        self._elements = None

    def __repr__(self):
        return f"ResidueField({self.ring}/({self.p}))"

    def reduce(self, a: Elem) -> Elem:
        if a.ring != self.ring:
            return mod_reduce(a, self.p)        # raises RingMismatchError
        return Elem(self.ring, self._ops.reduce(a.value, self.p.value))

    def elements(self) -> list[Elem]:
        if self._elements is None:
            self._elements = residue_representatives(self.p)
        return self._elements

    def add(self, a, b):
        return self.reduce(a + b)

    def sub(self, a, b):
        return self.reduce(a - b)

    def mul(self, a, b):
        return self.reduce(a * b)

    def inv(self, a: Elem) -> Elem:
        if not self.reduce(a):
            raise DivisionByZeroError(f"{a} is zero modulo {self.p}")
        g, s, _ = xgcd(a, self.p)
        # g generates (a, p) = (1), so it is a unit
        return self.reduce(s * unit_inverse(g))


@lru_cache(maxsize=256)
def residue_field(p: Elem) -> ResidueField:
    return ResidueField(p)


@dataclass(frozen=True)
class ResiduePoly:
    """A polynomial in ``(A/(p))[x]``; coefficients lowest degree first, no trailing zeros."""

    p: Elem
    coeffs: tuple

    @classmethod
    def from_coeffs(cls, p: Elem, coeffs) -> ResiduePoly:
        F = residue_field(p)
        c = [F.reduce(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        return cls(F.p, tuple(c))

    @property
    def field(self) -> ResidueField:
        return residue_field(self.p)

    @property
    def degree(self):
        from .poly import NEG_INFINITY
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if other.p != self.p:
            raise RingMismatchError(f"residues modulo {self.p} vs {other.p}")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        return ResiduePoly.from_coeffs(self.p, [
            (self.coeffs[i] if i < len(self.coeffs) else z) + (other.coeffs[i] if i < len(other.coeffs) else z)
            for i in range(n)])

    def __neg__(self):
        return ResiduePoly.from_coeffs(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return ResiduePoly(self.p, ())
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ResiduePoly.from_coeffs(self.p, out)

    def scale(self, c: Elem) -> ResiduePoly:
        return ResiduePoly.from_coeffs(self.p, [c * x for x in self.coeffs])

    def monic(self) -> ResiduePoly:
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def divmod(self, other: ResiduePoly) -> tuple[ResiduePoly, ResiduePoly]:
        self._check(other)
        if not other.coeffs:
            raise DivisionByZeroError("division by the zero residue polynomial")
        F = self.field
        inv = F.inv(other.coeffs[-1])
        r = list(self.coeffs)
        d = len(other.coeffs) - 1
        q = [F.zero] * max(len(r) - d, 0)
        for k in range(len(r) - 1 - d, -1, -1):
            c = F.reduce(r[k + d] * inv)
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[k + j] = F.reduce(r[k + j] - c * b)
        return ResiduePoly.from_coeffs(self.p, q), ResiduePoly.from_coeffs(self.p, r)

    def divides(self, other: ResiduePoly) -> bool:
        """Whether ``self`` divides ``other``."""
        if not self.coeffs:
            return not other.coeffs
        return not other.divmod(self)[1]

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __str__(self):
        from .poly import format_terms
        return format_terms(self.p.ring, self.coeffs)


def monic_residue_polys(p: Elem, degree: int):
    """All monic polynomials of the given degree over ``A/(p)``."""
    F = residue_field(p)
    for tail in itertools.product(F.elements(), repeat=degree):
        yield ResiduePoly(F.p, tuple(tail) + (F.one,))


def residue_irreducible(fbar: ResiduePoly) -> bool:
    """Exhaustive search for a monic factor of degree at most ``deg/2``."""
    if fbar.is_constant():
        raise ConstantPolynomialError(f"{fbar} has degree < 1")
    d = fbar.degree
    F = fbar.field
    cap = capacity.current()
    capacity.check("residue polynomial degree", d, cap.degree)
    capacity.check("monic divisor candidates", sum(F.size ** k for k in range(1, d // 2 + 1)), cap.search)
    for k in range(1, d // 2 + 1):
        for m in monic_residue_polys(F.p, k):
            if m.divides(fbar):
                return False
    return True
