"""Brute-force check that ``A[x]/(p, g)`` is a field.

The quotient is materialized as every vector of residues of length
``deg(g mod p)``; the full multiplication table is computed with numpy
lookup tables and each nonzero row is searched for the identity.  This is
deliberately independent of the factor search used by ``classify``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import capacity
from .errors import CapacityError, DomainError
from .poly import Poly, reduce_mod
from .residue import residue_field
from .rings import Elem, RingKind

_ROW_CHUNK = 256


def field_quotient_oracle(p: Elem, g: Poly) -> bool:
    if p.ring.kind is RingKind.RATIONALS:
        raise DomainError("QQ has no finite residue fields")
    gbar = reduce_mod(g, p)
    if not gbar:
        raise CapacityError(f"A[x]/({p}) is infinite and cannot be materialized")
    if gbar.is_constant():
        return False        # zero ring
    F = residue_field(p)
    d = gbar.degree
    capacity.check("quotient ring", F.size ** d, capacity.current().quotient)
    gbar = gbar.monic()
    index = {e: i for i, e in enumerate(F.elements())}
    return _is_field(F.p, tuple(index[c] for c in gbar.coeffs[:-1]))


@lru_cache(maxsize=64)
def _tables(p: Elem):
    """Flattened addition/multiplication tables of ``A/(p)``: ``add[a*q + b]``."""
    F = residue_field(p)
    elems = F.elements()
    q = len(elems)
    if p.ring.kind in (RingKind.INTEGERS, RingKind.LOCALIZED):
        # representatives are 0..q-1 in order
        i = np.arange(q)
        add = (i[:, None] + i[None, :]) % q
        mul = (i[:, None] * i[None, :]) % q
        neg = (-i) % q
    else:
        index = {e: k for k, e in enumerate(elems)}
        add = np.array([[index[F.add(a, b)] for b in elems] for a in elems])
        mul = np.array([[index[F.mul(a, b)] for b in elems] for a in elems])
        neg = np.array([index[F.reduce(-a)] for a in elems])
    return q, add.ravel(), mul.ravel(), neg, elems.index(F.one)


@lru_cache(maxsize=4096)
def _is_field(p: Elem, low: tuple) -> bool:
    """``low`` holds the residue indices of a monic modulus below its leading term."""
    q, add, mul, neg, one = _tables(p)
    d = len(low)
    n = q ** d
    digits = (np.arange(n)[:, None] // q ** np.arange(d)[None, :]) % q     # n x d
    # x^d = -(low[0] + low[1] x + ...), as a row of multipliers
    tail = neg[np.asarray(low, dtype=np.int64)]
    for start in range(1, n, _ROW_CHUNK):
        rows = digits[start:start + _ROW_CHUNK]
        conv = [None] * (2 * d - 1)
        for i in range(d):
            left = rows[:, i][:, None] * q
            for j in range(d):
                term = mul[left + digits[None, :, j]]
                conv[i + j] = term if conv[i + j] is None else add[conv[i + j] * q + term]
        for k in range(2 * d - 2, d - 1, -1):
            c = conv[k] * q
            for j in range(d):
                conv[k - d + j] = add[conv[k - d + j] * q + mul[c + tail[j]]]
        product = conv[0]
        for k in range(1, d):
            product = product + conv[k] * q ** k
        if not (product == one).any(axis=1).all():
            return False
    return True
