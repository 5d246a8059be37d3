"""Dense univariate polynomials ``A[x]`` over any supported ring.

Text grammar (shared by parsing and printing)::

    poly  := term (('+'|'-') term)*
    term  := coeff ('*'? 'x' ('^' nat)?)? | 'x' ('^' nat)?

with ``coeff`` given by the ring's element grammar.  Gaussian coefficients
with both parts nonzero are parenthesized, ``GF(p)[t]`` coefficients are
bracketed.  Printing uses descending powers and omits zero terms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from math import lcm

from .errors import (
    DivisionByZeroError,
    DomainError,
    NotIrreducibleError,
    ParseError,
    RingMismatchError,
    ZeroPolynomialError,
)
from .residue import ResiduePoly
from .rings import (
    Elem,
    RingDescriptor,
    ZZ,
    RingKind,
    canonical_associate,
    exact_quotient,
    gcd,
    is_irreducible,
    is_unit,
    unit_inverse,
)


@total_ordering
class _NegInfinity:
    """Degree of the zero polynomial.  Compares below every int; arithmetic raises."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("NEG_INFINITY")

    def __repr__(self):
        return "NEG_INFINITY"


NEG_INFINITY = _NegInfinity()


def _as_elem(ring: RingDescriptor, c) -> Elem:
    if isinstance(c, Elem):
        if c.ring != ring:
            raise RingMismatchError(f"{c.ring} coefficient in a polynomial over {ring}")
        return c
    return ring.elem(c)


@dataclass(frozen=True)
class Poly:
    """Polynomial with coefficients ``coeffs[k]`` of ``x^k``; no trailing zeros."""

    ring: RingDescriptor
    coeffs: tuple

    @classmethod
    def from_coeffs(cls, ring: RingDescriptor, coeffs) -> Poly:
        c = [_as_elem(ring, x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        return cls(ring, tuple(c))

    @classmethod
    def constant(cls, c: Elem) -> Poly:
        return cls.from_coeffs(c.ring, [c])

    @classmethod
    def x(cls, ring: RingDescriptor, k: int = 1) -> Poly:
        return cls(ring, (ring.zero,) * k + (ring.one,))

    @classmethod
    def zero(cls, ring: RingDescriptor) -> Poly:
        return cls(ring, ())

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def lc(self) -> Elem:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def _other(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (Elem, int)):
            return Poly.from_coeffs(self.ring, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly.from_coeffs(self.ring, [x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly.from_coeffs(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly.constant(self.ring.one)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: Elem) -> Poly:
        return Poly.from_coeffs(self.ring, [c * x for x in self.coeffs])

    def shift(self, k: int) -> Poly:
        """Multiply by ``x^k``."""
        if not self.coeffs:
            return self
        return Poly(self.ring, (self.ring.zero,) * k + self.coeffs)

    def __call__(self, point: Elem) -> Elem:
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __str__(self):
        return format_terms(self.ring, self.coeffs)

    def __repr__(self):
        return f"Poly({self.ring}, {self})"


# --------------------------------------------------------------------------
# Grammar.


def _coeff_text(ring: RingDescriptor, c: Elem) -> tuple[bool, str]:
    """Split a nonzero coefficient into (negative, body) for printing."""
    kind = ring.kind
    if kind is RingKind.FF_POLY:
        return False, ("1" if c.value == (1,) else ring.ops.format(c.value))
    if kind is RingKind.GAUSSIAN:
        x, y = c.value
        if y == 0:
            return x < 0, str(abs(x))
        if x == 0:
            return y < 0, ("i" if abs(y) == 1 else f"{abs(y)}i")
        return False, f"({ring.ops.format(c.value)})"
    text = str(c)
    return text.startswith("-"), text.lstrip("-")


def format_terms(ring: RingDescriptor, coeffs) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        neg, body = _coeff_text(ring, c)
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not mono:
            term = body
        elif body == "1":
            term = mono
        else:
            term = f"{body}*{mono}"
        if parts:
            parts.append(("-" if neg else "+") + term)
        else:
            parts.append(("-" if neg else "") + term)
    return "".join(parts) or "0"


_COEFF_RE = {
    RingKind.INTEGERS: re.compile(r"-?[0-9]+"),
    RingKind.RATIONALS: re.compile(r"-?[0-9]+(?:/[0-9]+)?"),
    RingKind.LOCALIZED: re.compile(r"-?[0-9]+(?:/[0-9]+)?"),
    RingKind.GAUSSIAN: re.compile(r"\([^()]*\)|-?[0-9]*i|-?[0-9]+"),
    RingKind.FF_POLY: re.compile(r"\[[^\]]*\]|-?[0-9]+"),
}
_NAT = re.compile(r"[0-9]+")


def parse_poly(ring: RingDescriptor, text: str) -> Poly:
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial")
    acc: dict[int, Elem] = {}
    pos = 0
    coeff_re = _COEFF_RE[ring.kind]

    def fail(why):
        raise ParseError(f"polynomial grammar: {why} at offset {pos} in {text!r}")

    while pos < len(s):
        negative = False
        if s[pos] in "+-":
            negative = s[pos] == "-"
            pos += 1
        elif acc:
            fail("expected '+' or '-'")
        coeff = None
        m = coeff_re.match(s, pos)
        if m:
            coeff = ring.ops.parse(m.group())
            pos = m.end()
        exp = 0
        if pos < len(s) and s[pos] == "*":
            if coeff is None:
                fail("'*' without a coefficient")
            pos += 1
            if pos >= len(s) or s[pos] != "x":
                fail("expected 'x' after '*'")
        if pos < len(s) and s[pos] == "x":
            pos += 1
            exp = 1
            if pos < len(s) and s[pos] == "^":
                m = _NAT.match(s, pos + 1)
                if not m:
                    fail("expected a natural number after '^'")
                exp = int(m.group())
                pos = m.end()
        elif coeff is None:
            fail("expected a coefficient or 'x'")
        c = Elem(ring, coeff) if coeff is not None else ring.one
        if negative:
            c = -c
        acc[exp] = acc.get(exp, ring.zero) + c
    top = max(acc)
    return Poly.from_coeffs(ring, [acc.get(k, ring.zero) for k in range(top + 1)])


# --------------------------------------------------------------------------
# Division.


@dataclass(frozen=True)
class PseudoDivision:
    """``a*f = g*q + r`` with ``r = 0`` or ``deg r < deg g``."""

    a: Elem
    q: Poly
    r: Poly


def pseudo_divide(f: Poly, g: Poly) -> PseudoDivision:
    """Pseudo-division of ``f`` by ``g`` inside ``A[x]``.

    The multiplier is ``lc(g)**max(deg f - deg g + 1, 0)``, except that when
    ``lc(g)`` is a unit the division is carried out exactly and the
    multiplier is 1.

    >>> from krull.rings import ZZ
    >>> d = pseudo_divide(parse_poly(ZZ, "x^2+1"), parse_poly(ZZ, "2*x+1"))
    >>> print(d.a, d.q, d.r)
    4 2*x-1 5
    """
    if f.ring != g.ring:
        raise RingMismatchError(f"{f.ring} vs {g.ring}")
    if not g:
        raise DivisionByZeroError("pseudo-division by the zero polynomial")
    R = f.ring
    lc, dg = g.lc, g.degree
    q, r = Poly.zero(R), f
    if is_unit(lc):
        inv = unit_inverse(lc)
        while r and r.degree >= dg:
            s = Poly.constant(r.lc * inv).shift(r.degree - dg)
            q, r = q + s, r - s * g
        return PseudoDivision(R.one, q, r)
    if not f or f.degree < dg:
        return PseudoDivision(R.one, q, r)
    steps = f.degree - dg + 1
    for _ in range(steps):
        if r and r.degree >= dg:
            s = Poly.constant(r.lc).shift(r.degree - dg)
            q, r = q.scale(lc) + s, r.scale(lc) - s * g
        else:
            q, r = q.scale(lc), r.scale(lc)
    return PseudoDivision(lc ** steps, q, r)


def exact_divide(f: Poly, g: Poly) -> Poly | None:
    """``f / g`` if ``g`` divides ``f`` in ``A[x]``, else ``None``.

    Plain long division with exact coefficient quotients; the quotient in
    ``K[x]`` is unique, so a failed coefficient division means no quotient
    exists in ``A[x]``.
    """
    if not g:
        raise DivisionByZeroError("division by the zero polynomial")
    R = f.ring
    q, r = Poly.zero(R), f
    while r and r.degree >= g.degree:
        c = exact_quotient(r.lc, g.lc)
        if c is None:
            return None
        s = Poly.constant(c).shift(r.degree - g.degree)
        q, r = q + s, r - s * g
    return None if r else q


def content_primitive(f: Poly) -> tuple[Elem, Poly]:
    """``f = c * fp`` with ``c`` the canonical gcd of the coefficients."""
    if not f:
        raise ZeroPolynomialError("content of the zero polynomial")
    c = f.ring.zero
    for x in f.coeffs:
        if x:
            c = gcd(c, x)
    return c, Poly.from_coeffs(f.ring, [exact_quotient(x, c) for x in f.coeffs])


def is_primitive(f: Poly) -> bool:
    return bool(f) and is_unit(content_primitive(f)[0])


def normalize_associate(g: Poly) -> Poly:
    """Divide out the unit part of the leading coefficient."""
    if not g:
        return g
    u, _ = canonical_associate(g.lc)
    return g.scale(unit_inverse(u))


def reduce_mod(f: Poly, p: Elem) -> ResiduePoly:
    """Coefficient-wise image of ``f`` in ``(A/(p))[x]``."""
    if f.ring != p.ring:
        raise RingMismatchError(f"{f.ring} vs {p.ring}")
    if f.ring.is_field or not is_irreducible(p):
        raise NotIrreducibleError(f"{p} is not irreducible in {p.ring}")
    return ResiduePoly.from_coeffs(p, f.coeffs)


def lift(fbar: ResiduePoly) -> Poly:
    """The polynomial over ``A`` whose coefficients are the canonical residues."""
    return Poly.from_coeffs(fbar.p.ring, fbar.coeffs)


def evaluate_fraction(f: Poly, num: Elem, den: Elem) -> tuple[Elem, Elem]:
    """Exact value of ``f(num/den)`` in the fraction field, as a reduced fraction.

    The denominator of the result is a canonical associate.
    """
    R = f.ring
    if num.ring != R or den.ring != R:
        raise RingMismatchError("evaluation point must lie over the polynomial's ring")
    if not den:
        raise DivisionByZeroError("evaluation at a fraction with zero denominator")
    if not f:
        return R.zero, R.one
    n = f.degree
    # sum c_k num^k den^(n-k), over den^n
    top = R.zero
    for k, c in enumerate(f.coeffs):
        top = top + c * num ** k * den ** (n - k)
    bottom = den ** n
    if not top:
        return R.zero, R.one
    g = gcd(top, bottom)
    top, bottom = exact_quotient(top, g), exact_quotient(bottom, g)
    u, bottom = canonical_associate(bottom)
    return top * unit_inverse(u), bottom


def rational_to_integer_poly(f: Poly) -> Poly:
    """Primitive integer polynomial proportional to ``f`` over ``QQ`` or ``Zloc(p)``."""
    if f.ring.kind not in (RingKind.RATIONALS, RingKind.LOCALIZED):
        raise DomainError(f"{f.ring} is not a subring of QQ")
    den = lcm(*(c.value.denominator for c in f.coeffs)) if f.coeffs else 1
    ints = Poly.from_coeffs(ZZ, [int(c.value * den) for c in f.coeffs])
    return normalize_associate(content_primitive(ints)[1]) if ints else ints
