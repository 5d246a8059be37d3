import json

import pytest

from krull.errors import DomainError, NoIrreduciblesError, ZeroPolynomialError
from krull.ideals import ContractionKind, Shape, Status, classify, contract, member
from krull.lab import (
    SplitMix64,
    irreducible_census,
    jacobson_witness,
    random_poly,
    sample_maximal_ideals,
    unit_gadget,
    verify_theorem,
)
from krull.poly import Poly, parse_poly
from krull.residue import residue_irreducible
from krull.poly import reduce_mod
from krull.rings import QQ, ZZ, ZZ_I, GF_t, Zloc

from .conftest import RINGS

# ------------------------------------------------------------------- PRNG


def test_splitmix_reference_values():
    # published reference outputs of splitmix64 from state 0
    r = SplitMix64(0)
    assert [r.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_splitmix_below_is_in_range_and_deterministic():
    a, b = SplitMix64(42), SplitMix64(42)
    xs = [a.below(10) for _ in range(200)]
    assert xs == [b.below(10) for _ in range(200)]
    assert set(xs) == set(range(10))
    with pytest.raises(ValueError):
        a.below(0)


@pytest.mark.parametrize("R", RINGS, ids=str)
def test_random_poly_degree_bounds(R):
    rng = SplitMix64(5)
    for _ in range(50):
        f = random_poly(R, rng, max_degree=4, min_degree=2)
        assert 2 <= f.degree <= 4


# ----------------------------------------------------------------- census


def test_census_examples():
    c = irreducible_census(ZZ, 5)
    assert (c.kind, c.count, [str(s) for s in c.samples]) == ("AT_LEAST", 5, ["2", "3", "5", "7", "11"])
    c = irreducible_census(Zloc(3), 5)
    assert (c.kind, c.count, [str(s) for s in c.samples]) == ("FINITE", 1, ["3"])
    c = irreducible_census(QQ, 5)
    assert (c.kind, c.count, c.samples) == ("FINITE", 0, ())
    with pytest.raises(DomainError):
        irreducible_census(ZZ, 0)


# ---------------------------------------------------------------- sampling


def test_sample_examples():
    assert [str(M) for M in sample_maximal_ideals(ZZ, 1, seed=0)] == ["(2, x+1)"]
    with pytest.raises(NoIrreduciblesError):
        sample_maximal_ideals(QQ, 1, seed=3)
    two = sample_maximal_ideals(Zloc(2), 2, seed=7)
    assert len(two) == 2
    for M in two:
        assert M.shape is Shape.PAIR and M.p == Zloc(2).elem(2)
        assert residue_irreducible(reduce_mod(M.g, M.p))


@pytest.mark.parametrize("R", [ZZ, ZZ_I, GF_t(2), GF_t(5), Zloc(5)], ids=str)
def test_samples_are_maximal_and_deterministic(R):
    xs = sample_maximal_ideals(R, 12, seed=9)
    assert xs == sample_maximal_ideals(R, 12, seed=9)
    for M in xs:
        assert classify(M).status is Status.MAXIMAL


# ---------------------------------------------------------------- jacobson


def test_jacobson_examples():
    assert str(jacobson_witness(ZZ, parse_poly(ZZ, "6x+3"))) == "(2, x)"
    assert str(jacobson_witness(ZZ, parse_poly(ZZ, "1"))) == "(2, x)"
    L = Zloc(2)
    assert str(jacobson_witness(L, parse_poly(L, "4x-2"))) == "(2*x^2-1)"
    with pytest.raises(ZeroPolynomialError):
        jacobson_witness(ZZ, Poly.zero(ZZ))


@pytest.mark.parametrize("R", RINGS, ids=str)
def test_jacobson_witness_excludes_polynomial(R):
    rng = SplitMix64(11)
    for _ in range(25):
        f = random_poly(R, rng)
        M = jacobson_witness(R, f)
        assert classify(M).status is Status.MAXIMAL
        assert not member(M, f)


@pytest.mark.parametrize("R", [ZZ, ZZ_I, GF_t(2)], ids=str)
def test_product_of_census_lies_in_no_witness(R):
    # a product of finitely many irreducibles must still be avoided by some maximal ideal
    c = irreducible_census(R, 6)
    prod = R.one
    for p in c.samples:
        prod = prod * p
    M = jacobson_witness(R, Poly.constant(prod))
    assert not member(M, Poly.constant(prod))
    assert M.p not in c.samples


@pytest.mark.parametrize("R", [Zloc(2), Zloc(3), Zloc(7)], ids=str)
def test_census_product_avoids_height_one_witness(R):
    rep = verify_theorem(R, 10, 2, 2, seed=0)
    prod = R.one
    for p in rep.census.samples:
        prod = prod * p
    assert rep.census.count == 1
    assert not member(rep.height1_witness, Poly.constant(prod))


def test_unit_gadget():
    assert unit_gadget(Poly.zero(ZZ))
    assert not unit_gadget(parse_poly(ZZ, "1"))
    assert not unit_gadget(parse_poly(ZZ, "3x"))
    assert not unit_gadget(parse_poly(QQ, "-1/2"))


# ------------------------------------------------------------------ verify


def test_verify_examples():
    rep = verify_theorem(ZZ, budget=50, samples=20, lemma1_trials=20, seed=42)
    assert rep.theorem_consistent
    assert (rep.census.kind, rep.census.count) == ("AT_LEAST", 50)
    assert {c.height for _, c in rep.maximal_samples} == {2}
    rep = verify_theorem(Zloc(2), budget=50, samples=20, lemma1_trials=20, seed=42)
    assert rep.theorem_consistent and (rep.census.kind, rep.census.count) == ("FINITE", 1)
    assert str(rep.height1_witness) == "(2*x-1)" and rep.height1_classification.height == 1
    rep = verify_theorem(QQ, budget=50, samples=20, lemma1_trials=20, seed=42)
    assert rep.theorem_consistent and (rep.census.kind, rep.census.count) == ("FINITE", 0)
    assert str(rep.height1_witness) == "(x)" and rep.height1_classification.height == 1
    assert rep.maximal_samples == []


def test_verify_report_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = {
        "type": "object",
        "required": ["ring", "seed", "budget", "census", "maximal_samples", "height1_witness",
                     "lemma1", "theorem_consistent"],
        "additionalProperties": False,
        "properties": {
            "ring": {"type": "string"}, "seed": {"type": "integer"}, "budget": {"type": "integer"},
            "census": {"type": "object", "required": ["kind", "count", "samples"],
                       "properties": {"kind": {"enum": ["FINITE", "AT_LEAST"]},
                                      "count": {"type": "integer"},
                                      "samples": {"type": "array", "items": {"type": "string"}}}},
            "maximal_samples": {"type": "array", "items": {
                "type": "object", "required": ["ideal", "status", "height", "chain"],
                "properties": {"ideal": {"type": "string"}, "status": {"type": "string"},
                               "height": {"type": ["integer", "null"]},
                               "chain": {"type": "array", "items": {"type": "string"}}}}},
            "height1_witness": {"type": ["object", "null"]},
            "lemma1": {"type": "object", "required": ["trials", "all_witnessed", "witnesses"],
                       "properties": {"trials": {"type": "integer"}, "all_witnessed": {"type": "boolean"},
                                      "witnesses": {"type": "array", "items": {"type": "string"}}}},
            "theorem_consistent": {"type": "boolean"},
        },
    }
    for R in (ZZ, Zloc(3), QQ):
        doc = json.loads(verify_theorem(R, 10, 5, 5, seed=1).to_json())
        jsonschema.validate(doc, schema)


def test_verify_is_deterministic():
    a = verify_theorem(ZZ_I, 10, 8, 8, seed=3).to_json()
    b = verify_theorem(ZZ_I, 10, 8, 8, seed=3).to_json()
    assert a == b
    assert a != verify_theorem(ZZ_I, 10, 8, 8, seed=4).to_json()


def test_verify_text_report():
    text = verify_theorem(Zloc(5), 5, 3, 3, seed=0).to_text()
    assert "census: FINITE(1)" in text
    assert "(5*x-1)" in text
    assert text.endswith("theorem consistent: true")


def test_verify_rejects_bad_budget():
    with pytest.raises(DomainError):
        verify_theorem(ZZ, budget=1, samples=1, lemma1_trials=1, seed=0)


def test_height_one_witness_contracts_to_zero():
    for R in (Zloc(2), Zloc(7), QQ):
        rep = verify_theorem(R, 5, 2, 2, seed=0)
        assert contract(rep.height1_witness).kind is ContractionKind.ZERO_IDEAL
