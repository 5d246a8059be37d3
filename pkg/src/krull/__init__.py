"""Exact computational algebra over principal ideal domains and their polynomial rings.

>>> from krull import ZZ, parse_ideal, classify
>>> print(classify(parse_ideal(ZZ, "(5, x^2+2)")))
MAXIMAL height=2 chain=(0)⊂(5)⊂(5, x^2+2)
"""

from .errors import *  # noqa: F401,F403
from .ideals import (
    Classification,
    Contraction,
    ContractionKind,
    Ideal,
    Refutation,
    Shape,
    Status,
    classify,
    contract,
    height,
    krull_dim,
    member,
    parse_ideal,
    refute_principal_maximality,
)
from .lab import (
    Census,
    SplitMix64,
    VerificationReport,
    irreducible_census,
    jacobson_witness,
    sample_maximal_ideals,
    unit_gadget,
    verify_theorem,
)
from .oracle import field_quotient_oracle
from .poly import (
    NEG_INFINITY,
    Poly,
    PseudoDivision,
    content_primitive,
    evaluate_fraction,
    parse_poly,
    pseudo_divide,
    reduce_mod,
)
from .residue import ResiduePoly, residue_irreducible
from .rings import (
    EXHAUSTED,
    QQ,
    ZZ,
    ZZ_I,
    Elem,
    GF_t,
    IrreducibleStream,
    RingDescriptor,
    RingKind,
    Zloc,
    canonical_associate,
    euclid_divmod,
    gcd,
    is_irreducible,
    is_unit,
    mod_reduce,
    next_irreducible,
    parse_elem,
)
