"""Concrete principal ideal domains with exact canonical-form elements.

Five instances are supported:

========================  ===========  ==============================
descriptor string         kind         irreducibles (up to associates)
========================  ===========  ==============================
``ZZ``                    INTEGERS     infinitely many (primes)
``ZZ[i]``                 GAUSSIAN     infinitely many
``GF(p)[t]``              FF_POLY      infinitely many (monic irreducibles)
``Zloc(p)``               LOCALIZED    exactly one, ``p``
``QQ``                    RATIONALS    none
========================  ===========  ==============================

Each kind is backed by a small "ops" object working on raw Python values
(``int``, ``(re, im)`` tuples, coefficient tuples, ``Fraction``).  User code
works with :class:`Elem`, which wraps a raw value together with its ring.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterator

from . import capacity
from .errors import (
    BothZeroError,
    DivisionByZeroError,
    DomainError,
    NotIrreducibleError,
    ParseError,
    RingMismatchError,
    ZeroElementError,
)


def is_prime_int(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    capacity.check("trial division input", n, capacity.current().integer)
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def p_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ZeroElementError("valuation of zero is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class RingKind(enum.Enum):
    INTEGERS = "ZZ"
    GAUSSIAN = "ZZ[i]"
    FF_POLY = "GF(p)[t]"
    LOCALIZED = "Zloc(p)"
    RATIONALS = "QQ"


_DESCRIPTOR_RE = re.compile(r"^(?:(ZZ|QQ|ZZ\[i\])|GF\((\d+)\)\[t\]|Zloc\((\d+)\))$")


@dataclass(frozen=True)
class RingDescriptor:
    """Which PID is in play.  ``p`` is set for ``GF(p)[t]`` and ``Zloc(p)``."""

    kind: RingKind
    p: int | None = None

    def __post_init__(self):
        needs_p = self.kind in (RingKind.FF_POLY, RingKind.LOCALIZED)
        if needs_p != (self.p is not None):
            raise DomainError(f"{self.kind.name} {'requires' if needs_p else 'takes no'} prime parameter")
        if needs_p and not is_prime_int(self.p):
            raise DomainError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> RingDescriptor:
        m = _DESCRIPTOR_RE.match(text.replace(" ", ""))
        if not m:
            raise ParseError(f"ring descriptor must be one of ZZ, QQ, ZZ[i], GF(p)[t], Zloc(p); got {text!r}")
        fixed, ff, loc = m.groups()
        if fixed:
            return cls({"ZZ": RingKind.INTEGERS, "QQ": RingKind.RATIONALS,
                        "ZZ[i]": RingKind.GAUSSIAN}[fixed])
        if ff:
            return cls(RingKind.FF_POLY, int(ff))
        return cls(RingKind.LOCALIZED, int(loc))

    def __str__(self):
        if self.kind is RingKind.FF_POLY:
            return f"GF({self.p})[t]"
        if self.kind is RingKind.LOCALIZED:
            return f"Zloc({self.p})"
        return self.kind.value

    def __format__(self, spec):
        return format(str(self), spec)

    @property
    def ops(self) -> _RingOps:
        try:
            return self.__dict__["_ops"]
        except KeyError:
            ops = _ops_for(self)
            object.__setattr__(self, "_ops", ops)
            return ops

    def __hash__(self):
        return hash((self.kind, self.p))

    @property
    def is_field(self) -> bool:
        return self.kind is RingKind.RATIONALS

    def elem(self, value) -> Elem:
        """Build an element from a raw value, an ``int``, or grammar text."""
        if isinstance(value, str):
            return parse_elem(self, value)
        return Elem(self, self.ops.convert(value))

    @property
    def zero(self) -> Elem:
        return Elem(self, self.ops.zero)

    @property
    def one(self) -> Elem:
        return Elem(self, self.ops.one)


ZZ = RingDescriptor(RingKind.INTEGERS)
QQ = RingDescriptor(RingKind.RATIONALS)
ZZ_I = RingDescriptor(RingKind.GAUSSIAN)


def GF_t(p: int) -> RingDescriptor:
    return RingDescriptor(RingKind.FF_POLY, p)


def Zloc(p: int) -> RingDescriptor:
    return RingDescriptor(RingKind.LOCALIZED, p)


@dataclass(frozen=True)
class Elem:
    """An element of a ring instance, always stored in canonical representation."""

    ring: RingDescriptor
    value: object

    def _other(self, other) -> Elem:
        if isinstance(other, Elem):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return Elem(self.ring, self.ring.ops.convert(other))
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Elem(self.ring, self.ring.ops.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Elem(self.ring, self.ring.ops.sub(self.value, other.value))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Elem(self.ring, self.ring.ops.mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return Elem(self.ring, self.ring.ops.neg(self.value))

    def __pow__(self, n: int):
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return self.value != self.ring.ops.zero

    def __str__(self):
        return self.ring.ops.format(self.value)

    def __repr__(self):
        return f"Elem({self.ring}, {self})"

    def is_unit(self) -> bool:
        return is_unit(self)

    def is_irreducible(self) -> bool:
        return is_irreducible(self)

    @property
    def size(self) -> int:
        """Euclidean size (absolute value, norm, degree or p-adic valuation)."""
        return self.ring.ops.size(self.value)


def _check_same(a: Elem, b: Elem) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")


# --------------------------------------------------------------------------
# Backends.  Each works on raw values only.


class _RingOps:
    zero: object
    one: object
    units: tuple = ()

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def reduce(self, a, p):
        raise DomainError(f"{self.ring} has no irreducibles to reduce by")

    def residues(self, p) -> list:
        raise DomainError(f"{self.ring} has no residue fields")

    def residue_field_size(self, p) -> int:
        raise DomainError(f"{self.ring} has no residue fields")

    def irreducibles(self) -> Iterator:
        return iter(())

    def divisors(self, a) -> list:
        raise DomainError(f"divisor enumeration unsupported over {self.ring}")

    def random(self, rng, bound: int):
        raise NotImplementedError


class _IntegerOps(_RingOps):
    zero, one = 0, 1
    units = (1, -1)

    def __init__(self, ring):
        self.ring = ring

    def convert(self, v):
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError(f"{v!r} is not an integer")
        return v

    def size(self, a):
        return abs(a)

    def divmod(self, a, b):
        return divmod(a, b)

    def is_unit(self, a):
        return a in (1, -1)

    def unit_inverse(self, a):
        return a

    def canonical(self, a):
        return (1, a) if a > 0 else (-1, -a)

    def is_irreducible(self, a):
        return is_prime_int(abs(a))

    def irreducibles(self):
        for n in itertools.count(2):
            if is_prime_int(n):
                yield n

    def reduce(self, a, p):
        return a % p

    def residues(self, p):
        return list(range(p))

    def residue_field_size(self, p):
        return p

    def divisors(self, a):
        a = abs(a)
        capacity.check("divisor search", a, capacity.current().integer)
        small = [d for d in range(1, isqrt(a) + 1) if a % d == 0]
        return sorted(set(small + [a // d for d in small]))

    def format(self, a):
        return str(a)

    def parse(self, text):
        if not re.fullmatch(r"-?[0-9]+", text):
            raise ParseError(f"integer element must match -?[0-9]+, got {text!r}")
        return int(text)

    def random(self, rng, bound):
        return rng.below(2 * bound + 1) - bound


def _round_half_up(num: int, den: int) -> int:
    """floor(num/den + 1/2) for den > 0."""
    return (2 * num + den) // (2 * den)


class _GaussianOps(_RingOps):
    zero, one = (0, 0), (1, 0)
    units = ((1, 0), (0, 1), (-1, 0), (0, -1))

    def __init__(self, ring):
        self.ring = ring

    def convert(self, v):
        if isinstance(v, int) and not isinstance(v, bool):
            return (v, 0)
        if isinstance(v, complex):
            if v.real != int(v.real) or v.imag != int(v.imag):
                raise DomainError(f"{v!r} is not a Gaussian integer")
            return (int(v.real), int(v.imag))
        if (isinstance(v, tuple) and len(v) == 2 and all(isinstance(x, int) for x in v)):
            return v
        raise DomainError(f"{v!r} is not a Gaussian integer")

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    @staticmethod
    def norm(a):
        return a[0] * a[0] + a[1] * a[1]

    size = norm

    def divmod(self, a, b):
        n = self.norm(b)
        x = a[0] * b[0] + a[1] * b[1]
        y = a[1] * b[0] - a[0] * b[1]
        # r/b lands in the half-open box [-1/2, 1/2)^2, a fundamental domain of Z[i]
        q = (_round_half_up(x, n), _round_half_up(y, n))
        return q, self.sub(a, self.mul(b, q))

    def is_unit(self, a):
        return self.norm(a) == 1

    def unit_inverse(self, a):
        return (a[0], -a[1])

    def canonical(self, a):
        u = (1, 0)
        for _ in range(4):
            if a[0] > 0 and a[1] >= 0:
                return u, a
            a = (-a[1], a[0])      # a *= i
            u = (u[1], -u[0])      # u *= -i
        raise ZeroElementError("zero has no canonical associate")

    def is_irreducible(self, a):
        n = self.norm(a)
        if is_prime_int(n):
            return True
        if a[0] == 0 or a[1] == 0:
            m = abs(a[0] + a[1])
            return m % 4 == 3 and is_prime_int(m)
        return False

    def irreducibles(self):
        for n in itertools.count(2):
            found = []
            for re_ in range(1, isqrt(n) + 1):
                im2 = n - re_ * re_
                im = isqrt(im2)
                if im * im == im2 and self.is_irreducible((re_, im)):
                    found.append((re_, im))
            yield from sorted(found)

    _NEIGHBOURS = tuple((x, y) for x in (-1, 0, 1) for y in (-1, 0, 1))

    def reduce(self, a, p):
        # The division remainder is unique per coset; among the coset's
        # minimal-norm members (all within one step of it) prefer large re, then im.
        r = self.divmod(a, p)[1]
        cands = [self.sub(r, self.mul(p, d)) for d in self._NEIGHBOURS]
        return min(cands, key=lambda c: (self.norm(c), -c[0], -c[1]))

    def residues(self, p):
        n = self.norm(p)
        if p[1] == 0:
            grid = ((x, y) for x in range(p[0]) for y in range(p[0]))
        else:
            grid = ((x, 0) for x in range(n))
        return sorted({self.reduce(g, p) for g in grid}, key=lambda r: (self.norm(r), -r[0], -r[1]))

    def residue_field_size(self, p):
        return self.norm(p)

    def divisors(self, a):
        n = self.norm(a)
        capacity.check("Gaussian divisor search", n, capacity.current().search)
        out = []
        for x in range(1, isqrt(n) + 1):
            for y in range(0, isqrt(n - x * x) + 1):
                d = (x, y)
                if n % self.norm(d) == 0 and self.divmod(a, d)[1] == (0, 0):
                    out.append(d)
        return out

    def format(self, a):
        x, y = a
        if y == 0:
            return str(x)
        im = {1: "i", -1: "-i"}.get(y, f"{y}i")
        if x == 0:
            return im
        return f"{x}{'' if im.startswith('-') else '+'}{im}"

    _real = re.compile(r"-?[0-9]+")
    _imag = re.compile(r"(-?)([0-9]*)i")
    _both = re.compile(r"(-?[0-9]+)([+-])([0-9]*)i")

    def parse(self, text):
        inner = text[1:-1] if text.startswith("(") and text.endswith(")") else text
        if self._real.fullmatch(inner):
            return (int(inner), 0)
        m = self._imag.fullmatch(inner)
        if m:
            y = int(m[2]) if m[2] else 1
            return (0, -y if m[1] else y)
        m = self._both.fullmatch(inner)
        if m:
            y = int(m[3]) if m[3] else 1
            return (int(m[1]), -y if m[2] == "-" else y)
        raise ParseError(f"Gaussian element must look like (a+bi), (a-bi), (a) or (bi); got {text!r}")

    def random(self, rng, bound):
        return (rng.below(2 * bound + 1) - bound, rng.below(2 * bound + 1) - bound)


class _FFPolyOps(_RingOps):
    """F_p[t]; values are coefficient tuples, lowest degree first, no trailing zeros."""

    zero, one = (), (1,)

    def __init__(self, ring):
        self.ring = ring
        self.p = ring.p
        self.units = tuple((c,) for c in range(1, self.p))

    def _strip(self, c):
        c = list(c)
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def convert(self, v):
        if isinstance(v, int) and not isinstance(v, bool):
            return self._strip([v % self.p])
        if isinstance(v, (tuple, list)) and all(isinstance(x, int) for x in v):
            return self._strip(x % self.p for x in v)
        raise DomainError(f"{v!r} is not a polynomial over GF({self.p})")

    def add(self, a, b):
        n = max(len(a), len(b))
        return self._strip(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % self.p
                           for i in range(n))

    def neg(self, a):
        return tuple((-c) % self.p for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._strip(c % self.p for c in out)

    def size(self, a):
        return len(a) - 1

    def divmod(self, a, b):
        p = self.p
        r = list(a)
        db = len(b) - 1
        inv = pow(b[-1], -1, p)
        q = [0] * max(len(a) - db, 0)
        for k in range(len(a) - 1 - db, -1, -1):
            c = r[k + db] * inv % p
            q[k] = c
            if c:
                for j, y in enumerate(b):
                    r[k + j] = (r[k + j] - c * y) % p
        return self._strip(q), self._strip(r)

    def is_unit(self, a):
        return len(a) == 1

    def unit_inverse(self, a):
        return (pow(a[0], -1, self.p),)

    def canonical(self, a):
        if not a:
            raise ZeroElementError("zero has no canonical associate")
        lc = a[-1]
        return (lc,), self.mul(a, (pow(lc, -1, self.p),))

    def monic_of_degree(self, d):
        """All monic polynomials of degree ``d``; tails in lexicographic order, leading term first."""
        for tail in itertools.product(range(self.p), repeat=d):
            yield tuple(reversed(tail)) + (1,)

    def is_irreducible(self, a):
        d = len(a) - 1
        if d < 1:
            return False
        cap = capacity.current()
        capacity.check("GF(p)[t] irreducibility degree", d, cap.degree)
        capacity.check("GF(p)[t] divisor candidates", self.p ** (d // 2), cap.search)
        for k in range(1, d // 2 + 1):
            for m in self.monic_of_degree(k):
                if not self.divmod(a, m)[1]:
                    return False
        return True

    def irreducibles(self):
        for d in itertools.count(1):
            for m in self.monic_of_degree(d):
                if self.is_irreducible(m):
                    yield m

    def reduce(self, a, m):
        return self.divmod(a, m)[1]

    def residues(self, m):
        d = len(m) - 1
        return [self._strip(reversed(c)) for c in itertools.product(range(self.p), repeat=d)]

    def residue_field_size(self, m):
        return self.p ** (len(m) - 1)

    def divisors(self, a):
        d = len(a) - 1
        capacity.check("GF(p)[t] divisor candidates", self.p ** d, capacity.current().search)
        return [m for k in range(d + 1) for m in self.monic_of_degree(k) if not self.divmod(a, m)[1]]

    def format_bare(self, a):
        if not a:
            return "0"
        terms = []
        for k in range(len(a) - 1, -1, -1):
            c = a[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms)

    def format(self, a):
        return f"[{self.format_bare(a)}]"

    _term = re.compile(r"([+-]?)([0-9]+)?(\*?t(?:\^([0-9]+))?)?")

    def parse(self, text):
        if re.fullmatch(r"-?[0-9]+", text):
            return self.convert(int(text))
        if not (text.startswith("[") and text.endswith("]")) or len(text) < 3:
            raise ParseError(f"GF(p)[t] element must be a bracketed t-polynomial like [t^2+t+1]; got {text!r}")
        body = text[1:-1]
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(body):
            m = self._term.match(body, pos)
            sign, c, mono, e = m.groups()
            if m.end() == pos or (pos > 0 and not sign) or (c is None and mono is None) \
                    or (mono and mono.startswith("*") and c is None):
                raise ParseError(f"bad t-polynomial {text!r} at offset {pos}")
            k = 0 if mono is None else (int(e) if e else 1)
            val = int(c) if c is not None else 1
            coeffs[k] = coeffs.get(k, 0) + (-val if sign == "-" else val)
            pos = m.end()
        top = max(coeffs)
        return self.convert([coeffs.get(k, 0) for k in range(top + 1)])

    def random(self, rng, bound):
        d = rng.below(bound + 1)
        return self._strip(rng.below(self.p) for _ in range(d + 1))


def _parse_fraction(text: str) -> Fraction:
    if not re.fullmatch(r"-?[0-9]+(/[0-9]+)?", text):
        raise ParseError(f"fraction element must match -?[0-9]+(/[0-9]+)?, got {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def _format_fraction(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


class _LocalizedOps(_RingOps):
    """Z localized at (p): fractions whose reduced denominator is prime to p."""

    zero, one = Fraction(0), Fraction(1)

    def __init__(self, ring):
        self.ring = ring
        self.p = ring.p

    def convert(self, v):
        if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
            raise DomainError(f"{v!r} is not a fraction")
        v = Fraction(v)
        if v.denominator % self.p == 0:
            raise DomainError(f"{v} has denominator divisible by {self.p}, not in Zloc({self.p})")
        return v

    def v(self, a):
        return p_valuation(a.numerator, self.p)

    size = v

    def divmod(self, a, b):
        if a and self.v(a) >= self.v(b):
            return a / b, Fraction(0)
        if not a:
            return Fraction(0), Fraction(0)
        return Fraction(0), a

    def is_unit(self, a):
        return a != 0 and a.numerator % self.p != 0

    def unit_inverse(self, a):
        return 1 / a

    def canonical(self, a):
        if not a:
            raise ZeroElementError("zero has no canonical associate")
        c = Fraction(self.p ** self.v(a))
        return a / c, c

    def is_irreducible(self, a):
        return a != 0 and self.v(a) == 1

    def irreducibles(self):
        yield Fraction(self.p)

    def reduce(self, a, p):
        return Fraction(a.numerator * pow(a.denominator, -1, self.p) % self.p)

    def residues(self, p):
        return [Fraction(k) for k in range(self.p)]

    def residue_field_size(self, p):
        return self.p

    def format(self, a):
        return _format_fraction(a)

    def parse(self, text):
        return self.convert(_parse_fraction(text))

    def random(self, rng, bound):
        den = 0
        while den == 0 or den % self.p == 0:
            den = 1 + rng.below(bound)
        return Fraction(rng.below(2 * bound + 1) - bound, den)


class _RationalOps(_RingOps):
    zero, one = Fraction(0), Fraction(1)

    def __init__(self, ring):
        self.ring = ring

    def convert(self, v):
        if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
            raise DomainError(f"{v!r} is not a fraction")
        return Fraction(v)

    def size(self, a):
        return 0

    def divmod(self, a, b):
        return a / b, Fraction(0)

    def is_unit(self, a):
        return a != 0

    def unit_inverse(self, a):
        return 1 / a

    def canonical(self, a):
        if not a:
            raise ZeroElementError("zero has no canonical associate")
        return a, Fraction(1)

    def is_irreducible(self, a):
        return False

    def format(self, a):
        return _format_fraction(a)

    def parse(self, text):
        return _parse_fraction(text)

    def random(self, rng, bound):
        return Fraction(rng.below(2 * bound + 1) - bound, 1 + rng.below(bound))


_OPS = {
    RingKind.INTEGERS: _IntegerOps,
    RingKind.GAUSSIAN: _GaussianOps,
    RingKind.FF_POLY: _FFPolyOps,
    RingKind.LOCALIZED: _LocalizedOps,
    RingKind.RATIONALS: _RationalOps,
}


@lru_cache(maxsize=None)
def _ops_for(ring: RingDescriptor) -> _RingOps:
    return _OPS[ring.kind](ring)


# --------------------------------------------------------------------------
# Public operations on Elem.


def parse_elem(ring: RingDescriptor, text: str) -> Elem:
    return Elem(ring, ring.ops.parse("".join(text.split())))


def euclid_divmod(a: Elem, b: Elem) -> tuple[Elem, Elem]:
    """Return ``(q, r)`` with ``a = b*q + r`` and ``r = 0`` or ``size(r) < size(b)``."""
    _check_same(a, b)
    if not b:
        raise DivisionByZeroError(f"division of {a} by zero")
    q, r = a.ring.ops.divmod(a.value, b.value)
    return Elem(a.ring, q), Elem(a.ring, r)


def exact_quotient(a: Elem, b: Elem) -> Elem | None:
    """``a / b`` if ``b`` divides ``a`` in the ring, else ``None``."""
    if not a:
        return a
    q, r = euclid_divmod(a, b)
    return None if r else q


def divides(b: Elem, a: Elem) -> bool:
    if not b:
        return not a
    return exact_quotient(a, b) is not None


def is_unit(a: Elem) -> bool:
    return a.ring.ops.is_unit(a.value)


def unit_inverse(u: Elem) -> Elem:
    if not is_unit(u):
        raise DomainError(f"{u} is not a unit of {u.ring}")
    return Elem(u.ring, u.ring.ops.unit_inverse(u.value))


def canonical_associate(a: Elem) -> tuple[Elem, Elem]:
    """Split ``a = u * c`` with ``u`` a unit and ``c`` the canonical associate."""
    if not a:
        raise ZeroElementError("zero has no canonical associate")
    u, c = a.ring.ops.canonical(a.value)
    return Elem(a.ring, u), Elem(a.ring, c)


def associates(a: Elem, b: Elem) -> bool:
    _check_same(a, b)
    if not a or not b:
        return not a and not b
    return canonical_associate(a)[1] == canonical_associate(b)[1]


def gcd(a: Elem, b: Elem) -> Elem:
    _check_same(a, b)
    if not a and not b:
        raise BothZeroError("gcd(0, 0) is undefined")
    while b:
        a, b = b, euclid_divmod(a, b)[1]
    return canonical_associate(a)[1]


def xgcd(a: Elem, b: Elem) -> tuple[Elem, Elem, Elem]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` some generator of ``(a, b)``."""
    _check_same(a, b)
    R = a.ring
    r0, r1, s0, s1, t0, t1 = a, b, R.one, R.zero, R.zero, R.one
    while r1:
        q, r = euclid_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


@lru_cache(maxsize=4096)
def is_irreducible(a: Elem) -> bool:
    if not a or is_unit(a):
        return False
    return a.ring.ops.is_irreducible(a.value)


def _canonical_irreducible(p: Elem) -> Elem:
    if p.ring.is_field or not is_irreducible(p):
        raise NotIrreducibleError(f"{p} is not irreducible in {p.ring}")
    return canonical_associate(p)[1]


def mod_reduce(a: Elem, p: Elem) -> Elem:
    """Canonical representative of ``a`` in ``A/(p)``."""
    _check_same(a, p)
    p = _canonical_irreducible(p)
    return Elem(a.ring, a.ring.ops.reduce(a.value, p.value))


def residue_representatives(p: Elem) -> list[Elem]:
    """Every canonical residue class representative of ``A/(p)``, zero first."""
    p = _canonical_irreducible(p)
    ops = p.ring.ops
    capacity.check("residue field", ops.residue_field_size(p.value), capacity.current().search)
    return [Elem(p.ring, r) for r in ops.residues(p.value)]


def residue_field_size(p: Elem) -> int:
    p = _canonical_irreducible(p)
    return p.ring.ops.residue_field_size(p.value)


def units(ring: RingDescriptor) -> list[Elem]:
    """The finite unit group of ``ring``, when it is finite."""
    if ring.kind in (RingKind.LOCALIZED, RingKind.RATIONALS):
        raise DomainError(f"{ring} has infinitely many units")
    return [Elem(ring, u) for u in ring.ops.units]


def canonical_divisors(a: Elem) -> list[Elem]:
    """All canonical associates dividing ``a`` (for rings with finite unit groups)."""
    if not a:
        raise ZeroElementError("zero has infinitely many divisors")
    return [Elem(a.ring, d) for d in a.ring.ops.divisors(a.value)]


# --------------------------------------------------------------------------
# Irreducible enumeration.


class _Exhausted:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EXHAUSTED"

    def __bool__(self):
        return False


EXHAUSTED = _Exhausted()


class IrreducibleStream:
    """Pairwise nonassociate canonical irreducibles of a ring in a fixed order.

    Integers come out by increasing magnitude, Gaussian integers by norm
    (ties by real part), ``GF(p)[t]`` by degree then lexicographically by
    coefficients from the leading term down.  ``Zloc(p)`` yields ``p`` and
    stops; ``QQ`` yields nothing.

    The stream is a stateful iterator and must not be shared between threads.
    """

    def __init__(self, ring: RingDescriptor):
        self.ring = ring
        self.emitted = 0
        self._it = ring.ops.irreducibles()

    def __iter__(self):
        return self

    def __next__(self) -> Elem:
        v = next(self._it)
        self.emitted += 1
        return Elem(self.ring, v)


def next_irreducible(stream: IrreducibleStream) -> Elem | _Exhausted:
    return next(stream, EXHAUSTED)


def first_irreducibles(ring: RingDescriptor, n: int) -> list[Elem]:
    return list(itertools.islice(IrreducibleStream(ring), n))
