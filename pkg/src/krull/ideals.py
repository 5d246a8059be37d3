"""Ideals of ``A[x]`` in the shapes ``(0)``, ``(1)``, ``(g)`` and ``(p, g)``.

Every maximal ideal of ``A[x]`` has one of the last two shapes: either it
meets ``A`` in zero and is principal, or it contains an irreducible constant
``p``.  Restricting to these shapes keeps membership, contraction and
maximality exactly decidable without a Groebner engine.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .errors import (
    ConstantPolynomialError,
    NotIrreducibleError,
    NotPrimeIdealError,
    NotPrimitiveError,
    NotProperError,
    ParseError,
    RingMismatchError,
    UnsupportedShapeError,
)
from .kx import kx_irreducible
from .poly import (
    Poly,
    content_primitive,
    is_primitive,
    lift,
    normalize_associate,
    parse_poly,
    pseudo_divide,
    reduce_mod,
)
from .residue import residue_irreducible
from .rings import (
    Elem,
    IrreducibleStream,
    RingDescriptor,
    RingKind,
    canonical_associate,
    divides,
    exact_quotient,
    is_irreducible,
    is_unit,
    parse_elem,
)

REFUTATION_BUDGET = 10_000


class Shape(enum.Enum):
    ZERO = "ZERO"
    UNIT = "UNIT"
    PRINCIPAL = "PRINCIPAL"
    PAIR = "PAIR"


@dataclass(frozen=True)
class Ideal:
    """A normalized ideal of ``A[x]``; build with the classmethods, not directly."""

    ring: RingDescriptor
    shape: Shape
    p: Elem | None = None
    g: Poly | None = None

    @classmethod
    def zero(cls, ring: RingDescriptor) -> Ideal:
        return cls(ring, Shape.ZERO)

    @classmethod
    def unit(cls, ring: RingDescriptor) -> Ideal:
        return cls(ring, Shape.UNIT)

    @classmethod
    def principal(cls, g: Poly) -> Ideal:
        if not g:
            return cls.zero(g.ring)
        if g.is_constant() and is_unit(g.lc):
            return cls.unit(g.ring)
        return cls(g.ring, Shape.PRINCIPAL, g=normalize_associate(g))

    @classmethod
    def pair(cls, p: Elem, g: Poly) -> Ideal:
        if p.ring != g.ring:
            raise RingMismatchError(f"{p.ring} vs {g.ring}")
        if not is_irreducible(p):
            raise NotIrreducibleError(f"{p} is not irreducible in {p.ring}")
        p = canonical_associate(p)[1]
        gbar = reduce_mod(g, p)
        if not gbar:
            return cls.principal(Poly.constant(p))
        if gbar.is_constant():
            return cls.unit(p.ring)
        return cls(p.ring, Shape.PAIR, p=p, g=lift(gbar.monic()))

    @property
    def is_proper(self) -> bool:
        return self.shape is not Shape.UNIT

    def __str__(self):
        if self.shape is Shape.ZERO:
            return "(0)"
        if self.shape is Shape.UNIT:
            return "(1)"
        if self.shape is Shape.PAIR:
            return f"({self.p}, {self.g})"
        if self.g.is_constant():
            return f"({self.g.lc})"
        return f"({self.g})"


def _split_top_level(s: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(s[start:i])
            start = i + 1
    parts.append(s[start:])
    return parts


def parse_ideal(ring: RingDescriptor, text: str) -> Ideal:
    s = "".join(text.split())
    if len(s) < 3 or s[0] != "(" or s[-1] != ")":
        raise ParseError(f"ideal must be written '(poly)' or '(elem, poly)', got {text!r}")
    parts = _split_top_level(s[1:-1])
    if len(parts) == 1:
        return Ideal.principal(parse_poly(ring, parts[0]))
    if len(parts) == 2:
        return Ideal.pair(parse_elem(ring, parts[0]), parse_poly(ring, parts[1]))
    raise UnsupportedShapeError(
        f"only (g) and (p, g) ideals are supported, got {len(parts)} generators in {text!r}")


def _check_ring(M: Ideal, f: Poly) -> None:
    if M.ring != f.ring:
        raise RingMismatchError(f"{M.ring} vs {f.ring}")


def member(M: Ideal, f: Poly) -> bool:
    """Exact membership ``f in M``."""
    _check_ring(M, f)
    if M.shape is Shape.UNIT or not f:
        return True
    if M.shape is Shape.ZERO:
        return False
    if M.shape is Shape.PAIR:
        return reduce_mod(M.g, M.p).divides(reduce_mod(f, M.p))
    # (c * gp): pseudo-divide by the primitive part, then check the content
    c, gp = content_primitive(M.g)
    division = pseudo_divide(f, gp)
    if division.r:
        return False
    # Gauss: gp primitive and gp | f in K[x] put f/gp in A[x]
    h = [exact_quotient(x, division.a) for x in division.q.coeffs]
    return all(divides(c, x) for x in h)


class ContractionKind(enum.Enum):
    ZERO_IDEAL = "ZERO_IDEAL"
    PRIME = "PRIME"
    UNIT_IDEAL = "UNIT_IDEAL"


@dataclass(frozen=True)
class Contraction:
    kind: ContractionKind
    p: Elem | None = None

    def __str__(self):
        return f"({self.p})" if self.kind is ContractionKind.PRIME else (
            "(0)" if self.kind is ContractionKind.ZERO_IDEAL else "(1)")


def contract(M: Ideal) -> Contraction:
    """``M`` intersected with the constants ``A``."""
    if M.shape is Shape.UNIT:
        raise NotProperError("the unit ideal contracts to A itself")
    if M.shape is Shape.ZERO:
        return Contraction(ContractionKind.ZERO_IDEAL)
    if M.shape is Shape.PAIR:
        return Contraction(ContractionKind.PRIME, M.p)
    if M.g.is_constant():
        c = M.g.lc
        if not is_irreducible(c):
            raise NotPrimeIdealError(f"({c}) is not prime, its contraction is not a prime of A")
        return Contraction(ContractionKind.PRIME, c)
    # a nonzero multiple of a positive-degree polynomial is never constant
    return Contraction(ContractionKind.ZERO_IDEAL)


@dataclass(frozen=True)
class Refutation:
    """Outcome of searching for ``p`` with ``g mod p`` of positive degree."""

    witness: Elem | None
    reason: str | None = None      # "budget_exhausted" or "ring_has_few_irreducibles"
    steps: int = 0

    def __bool__(self):
        return self.witness is not None


def refute_principal_maximality(g: Poly, budget: int = REFUTATION_BUDGET) -> Refutation:
    """Find an irreducible ``p`` with ``(g) ⊊ (g, p) ⊊ (1)``.

    Any ``p`` not dividing ``lc(g)`` works, so in rings with infinitely many
    irreducibles the search stops within (number of prime factors of
    ``lc(g)``) + 1 steps.
    """
    if g.is_constant():
        raise ConstantPolynomialError(f"{g} is constant")
    if not is_primitive(g):
        raise NotPrimitiveError(f"{g} is not primitive")
    steps = 0
    for p in itertools.islice(IrreducibleStream(g.ring), budget):
        steps += 1
        if reduce_mod(g, p).degree >= 1:
            return Refutation(p, steps=steps)
    if steps == budget:
        return Refutation(None, "budget_exhausted", steps)
    return Refutation(None, "ring_has_few_irreducibles", steps)


class Status(enum.Enum):
    NOT_PROPER = "NOT_PROPER"
    PRIME_NOT_MAXIMAL = "PRIME_NOT_MAXIMAL"
    MAXIMAL = "MAXIMAL"
    NOT_PRIME = "NOT_PRIME"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class Classification:
    status: Status
    height: int | None = None
    chain: tuple = field(default=())
    reason: str | None = None

    @property
    def is_prime(self) -> bool:
        return self.status in (Status.PRIME_NOT_MAXIMAL, Status.MAXIMAL)

    def __str__(self):
        if self.height is not None:
            return f"{self.status.value} height={self.height} chain={'⊂'.join(map(str, self.chain))}"
        if self.reason:
            return f"{self.status.value} reason={self.reason}"
        return self.status.value


def _prime(status: Status, *chain: Ideal) -> Classification:
    return Classification(status, len(chain) - 1, chain)


def classify(M: Ideal) -> Classification:
    """Decide primality, maximality and height of ``M``."""
    R = M.ring
    zero = Ideal.zero(R)
    if M.shape is Shape.UNIT:
        return Classification(Status.NOT_PROPER)
    if M.shape is Shape.ZERO:
        return _prime(Status.PRIME_NOT_MAXIMAL, zero)
    if M.shape is Shape.PAIR:
        if residue_irreducible(reduce_mod(M.g, M.p)):
            return _prime(Status.MAXIMAL, zero, Ideal.principal(Poly.constant(M.p)), M)
        return Classification(Status.NOT_PRIME, reason=f"{M.g} is reducible modulo {M.p}")
    g = M.g
    if g.is_constant():
        if is_irreducible(g.lc):
            # A[x]/(p) = (A/(p))[x] is a domain but not a field
            return _prime(Status.PRIME_NOT_MAXIMAL, zero, M)
        return Classification(Status.NOT_PRIME, reason=f"{g.lc} is not irreducible")
    c, gp = content_primitive(g)
    if not is_unit(c):
        return Classification(Status.NOT_PRIME, reason=f"content {c} is not a unit")
    decision = kx_irreducible(gp)
    if decision.irreducible is False:
        return Classification(Status.NOT_PRIME, reason=decision.reason)
    if R.kind is RingKind.RATIONALS:
        if decision.irreducible:
            return _prime(Status.MAXIMAL, zero, M)
        return Classification(Status.UNDECIDED, reason=decision.reason)
    refutation = refute_principal_maximality(gp)
    if refutation:
        if decision.irreducible:
            return _prime(Status.PRIME_NOT_MAXIMAL, zero, M)
        return Classification(
            Status.UNDECIDED,
            reason=f"not maximal (witness {refutation.witness}); primality: {decision.reason}")
    if refutation.reason == "budget_exhausted":
        return Classification(Status.UNDECIDED, reason="refutation budget exhausted")
    # every irreducible of A (here: the only one) makes g a unit constant mod p
    if decision.irreducible:
        return _prime(Status.MAXIMAL, zero, M)
    return Classification(Status.UNDECIDED, reason=decision.reason)


def height(M: Ideal) -> int:
    cls = classify(M)
    if not cls.is_prime:
        raise NotPrimeIdealError(f"{M} is {cls.status.value}; height is defined for prime ideals")
    return cls.height


def krull_dim(ring: RingDescriptor) -> int:
    """``dim A[x] = dim A + 1``, with ``dim A`` 0 for a field and 1 otherwise."""
    return 1 if ring.is_field else 2
