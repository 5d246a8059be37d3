"""Seeded, budget-bounded experiments on maximal ideals of ``A[x]``.

For each supported ring the report records how many nonassociate
irreducibles the enumeration produced, the heights of sampled maximal
ideals, an explicit height-1 maximal ideal where one exists, and for
seeded nonzero ``f`` a maximal ideal avoiding ``f`` (so the Jacobson
radical of ``A[x]`` is zero on the sample).

"Infinitely many" is operationalized as: the irreducible stream did not run
dry within ``budget`` draws.  All sampling goes through :class:`SplitMix64`
so reports are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .errors import CapacityError, DomainError, NoIrreduciblesError, ZeroPolynomialError
from .ideals import (
    Classification,
    ContractionKind,
    Ideal,
    Status,
    classify,
    contract,
    member,
    refute_principal_maximality,
)
from .poly import Poly, content_primitive, lift, reduce_mod
from .residue import ResiduePoly, monic_residue_polys, residue_field, residue_irreducible
from .rings import Elem, IrreducibleStream, RingDescriptor, RingKind, is_unit

MASK64 = (1 << 64) - 1

SAMPLE_POOL = 4          # irreducibles cycled through by sample_maximal_ideals
COEFF_BOUND = 10**4      # integer coefficient bound for seeded polynomials
FF_COEFF_DEGREE = 3      # t-degree bound for GF(p)[t] coefficients
MAX_POLY_DEGREE = 3


class SplitMix64:
    """64-bit splitmix generator.

    >>> [SplitMix64(0).next() for _ in range(1)]
    [16294208416658607535]
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform draw from ``range(n)`` by rejection on the low bits."""
        if n <= 0:
            raise ValueError("n must be positive")
        mask = (1 << (n - 1).bit_length()) - 1
        while True:
            z = self.next() & mask
            if z < n:
                return z


def random_elem(ring: RingDescriptor, rng: SplitMix64, bound: int = COEFF_BOUND) -> Elem:
    if ring.kind is RingKind.FF_POLY:
        bound = FF_COEFF_DEGREE
    return Elem(ring, ring.ops.random(rng, bound))


def random_poly(ring: RingDescriptor, rng: SplitMix64, max_degree: int = MAX_POLY_DEGREE,
                min_degree: int = 0, bound: int = COEFF_BOUND) -> Poly:
    """Seeded polynomial of degree in ``[min_degree, max_degree]`` (exactly, nonzero lc)."""
    d = min_degree + rng.below(max_degree - min_degree + 1)
    coeffs = [random_elem(ring, rng, bound) for _ in range(d)]
    lc = ring.zero
    while not lc:
        lc = random_elem(ring, rng, bound)
    return Poly.from_coeffs(ring, coeffs + [lc])


# --------------------------------------------------------------------------
# Census and sampling.


@dataclass(frozen=True)
class Census:
    ring: RingDescriptor
    kind: str                  # "FINITE" or "AT_LEAST"
    count: int
    samples: tuple

    @property
    def finite(self) -> bool:
        return self.kind == "FINITE"


def irreducible_census(ring: RingDescriptor, budget: int) -> Census:
    if budget < 1:
        raise DomainError("census budget must be at least 1")
    samples = tuple(itertools.islice(IrreducibleStream(ring), budget))
    if len(samples) < budget:
        return Census(ring, "FINITE", len(samples), samples)
    return Census(ring, "AT_LEAST", budget, samples)


def sample_maximal_ideals(ring: RingDescriptor, n: int, seed: int) -> list[Ideal]:
    """``n`` seeded maximal ideals ``(p, g)`` with ``g`` irreducible modulo ``p``.

    ``p`` cycles through the first few irreducibles starting at an offset
    fixed by ``seed``; ``g`` is a seeded residue polynomial of degree 1..3,
    redrawn until irreducible.
    """
    pool = list(itertools.islice(IrreducibleStream(ring), SAMPLE_POOL))
    if not pool:
        raise NoIrreduciblesError(f"{ring} has no irreducible elements")
    rng = SplitMix64(seed)
    out = []
    attempts = 0
    for k in range(n):
        p = pool[(seed + k) % len(pool)]
        elems = residue_field(p).elements()
        while True:
            attempts += 1
            if attempts > 1000 * n:
                raise CapacityError(f"no irreducible residue polynomial after {attempts - 1} draws")
            d = 1 + rng.below(3)
            coeffs = [elems[rng.below(len(elems))] for _ in range(d)]
            coeffs.append(elems[1 + rng.below(len(elems) - 1)])
            gbar = ResiduePoly.from_coeffs(p, coeffs)
            if residue_irreducible(gbar):
                break
        out.append(Ideal.pair(p, lift(gbar)))
    return out


# --------------------------------------------------------------------------
# Jacobson radical.


def unit_gadget(f: Poly) -> bool:
    """Whether ``x*f + 1`` is a unit of ``A[x]``; true exactly when ``f = 0``."""
    g = Poly.x(f.ring) * f + 1
    return g.is_constant() and is_unit(g.lc)


def _residue_nondivisor(fbar: ResiduePoly) -> ResiduePoly:
    for d in itertools.count(1):
        for q in monic_residue_polys(fbar.p, d):
            if residue_irreducible(q) and not q.divides(fbar):
                return q


def jacobson_witness(ring: RingDescriptor, f: Poly) -> Ideal:
    """A maximal ideal of ``A[x]`` not containing the nonzero polynomial ``f``."""
    if not f:
        raise ZeroPolynomialError("the zero polynomial lies in every ideal")
    if ring.kind is RingKind.RATIONALS:
        # x - c for the first c in 0, 1, -1, 2, -2, ... that is not a root
        for k in itertools.count():
            c = ring.elem((k + 1) // 2 * (1 if k % 2 else -1))
            if f(c):
                return Ideal.principal(Poly.x(ring) - c)
    for p in IrreducibleStream(ring):
        fbar = reduce_mod(f, p)
        if fbar:
            return Ideal.pair(p, lift(_residue_nondivisor(fbar)))
    # Zloc(p) with p | content(f): principal ideals (p*x^k - 1) are maximal
    p = ring.elem(ring.p)
    for k in itertools.count(1):
        M = Ideal.principal(Poly.x(ring, k).scale(p) - 1)
        if not member(M, f):
            return M


# --------------------------------------------------------------------------
# Verification report.


def _classified(M: Ideal, c: Classification) -> dict:
    return {"ideal": str(M), "status": c.status.value, "height": c.height,
            "chain": [str(I) for I in c.chain]}


@dataclass
class VerificationReport:
    ring: RingDescriptor
    seed: int
    budget: int
    census: Census
    maximal_samples: list = field(default_factory=list)      # (Ideal, Classification)
    height1_witness: Ideal | None = None
    height1_classification: Classification | None = None
    refutations: list = field(default_factory=list)          # (Poly, Refutation)
    lemma1_trials: int = 0
    lemma1_all_witnessed: bool = True
    lemma1_witnesses: list = field(default_factory=list)     # (Poly, Ideal)
    theorem_consistent: bool = False

    def to_json_dict(self) -> dict:
        witness = None
        if self.height1_witness is not None:
            witness = _classified(self.height1_witness, self.height1_classification)
        return {
            "ring": str(self.ring),
            "seed": self.seed,
            "budget": self.budget,
            "census": {"kind": self.census.kind, "count": self.census.count,
                       "samples": [str(s) for s in self.census.samples]},
            "maximal_samples": [_classified(M, c) for M, c in self.maximal_samples],
            "height1_witness": witness,
            "lemma1": {"trials": self.lemma1_trials, "all_witnessed": self.lemma1_all_witnessed,
                       "witnesses": [str(M) for _, M in self.lemma1_witnesses]},
            "theorem_consistent": self.theorem_consistent,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        heights = sorted({c.height for _, c in self.maximal_samples if c.height is not None})
        lines = [
            f"ring: {self.ring}",
            f"seed: {self.seed}  budget: {self.budget}",
            f"census: {self.census.kind}({self.census.count})",
            f"maximal samples: {len(self.maximal_samples)}, heights {heights}",
        ]
        if self.refutations:
            found = sum(1 for _, r in self.refutations if r)
            lines.append(f"principal maximality refuted: {found}/{len(self.refutations)}")
        if self.height1_witness is not None:
            lines.append(f"height-1 maximal witness: {self.height1_witness} "
                         f"[{self.height1_classification}]")
        else:
            lines.append("height-1 maximal witness: none")
        lines.append(f"jacobson: {self.lemma1_trials} trials, all witnessed: "
                     f"{str(self.lemma1_all_witnessed).lower()}")
        lines.append(f"theorem consistent: {str(self.theorem_consistent).lower()}")
        return "\n".join(lines)


def height_one_witness(ring: RingDescriptor) -> Ideal:
    """Explicit maximal ideal of height 1 for the rings with finitely many irreducibles."""
    if ring.kind is RingKind.RATIONALS:
        return Ideal.principal(Poly.x(ring))
    if ring.kind is RingKind.LOCALIZED:
        return Ideal.principal(Poly.x(ring).scale(ring.elem(ring.p)) - 1)
    raise DomainError(f"{ring} has infinitely many irreducibles and no height-1 maximal ideal")


def _seeded_primitive(ring: RingDescriptor, rng: SplitMix64) -> Poly:
    return content_primitive(random_poly(ring, rng, min_degree=1))[1]


def verify_theorem(ring: RingDescriptor, budget: int, samples: int, lemma1_trials: int,
                   seed: int) -> VerificationReport:
    if budget < 2 or samples < 1:
        raise DomainError("verify needs budget >= 2 and samples >= 1")
    census = irreducible_census(ring, budget)
    report = VerificationReport(ring, seed, budget, census, lemma1_trials=lemma1_trials)

    if census.count:
        for M in sample_maximal_ideals(ring, samples, seed):
            report.maximal_samples.append((M, classify(M)))

    if census.finite:
        M = height_one_witness(ring)
        report.height1_witness = M
        report.height1_classification = classify(M)
    else:
        rng = SplitMix64(seed + 1)
        for _ in range(samples):
            g = _seeded_primitive(ring, rng)
            report.refutations.append((g, refute_principal_maximality(g)))

    rng = SplitMix64(seed + 2)
    for _ in range(lemma1_trials):
        f = random_poly(ring, rng)
        M = jacobson_witness(ring, f)
        report.lemma1_witnesses.append((f, M))
        if classify(M).status is not Status.MAXIMAL or member(M, f):
            report.lemma1_all_witnessed = False

    report.theorem_consistent = _consistent(report)
    return report


def _consistent(report: VerificationReport) -> bool:
    if report.census.finite:
        c = report.height1_classification
        return (report.height1_witness is not None and c.status is Status.MAXIMAL
                and c.height == 1
                and contract(report.height1_witness).kind is ContractionKind.ZERO_IDEAL)
    return (report.height1_witness is None
            and all(c.status is Status.MAXIMAL and c.height == 2 for _, c in report.maximal_samples)
            and all(r for _, r in report.refutations))
