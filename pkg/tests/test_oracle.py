import pytest

from krull.errors import CapacityError, DomainError
from krull.ideals import Ideal, Status, classify
from krull.oracle import field_quotient_oracle
from krull.poly import Poly, parse_poly
from krull.residue import monic_residue_polys, residue_field
from krull.rings import QQ, ZZ, ZZ_I, GF_t, Zloc, first_irreducibles, parse_elem


def oracle(R, p, g):
    return field_quotient_oracle(parse_elem(R, p), parse_poly(R, g))


def test_oracle_examples():
    assert oracle(ZZ, "5", "x^2+2")
    assert not oracle(ZZ, "2", "x^2+1")
    assert oracle(ZZ, "3", "x")


def test_oracle_edge_cases():
    assert not oracle(ZZ, "3", "3x+1")          # constant mod 3: zero ring
    with pytest.raises(CapacityError):
        oracle(ZZ, "3", "3x")                   # (3) itself: infinite quotient
    with pytest.raises(DomainError):
        oracle(QQ, "2", "x")
    with pytest.raises(CapacityError):
        oracle(ZZ, "101", "x^2+1")              # 10201 > 4096 elements


def test_capacity_override(monkeypatch):
    monkeypatch.setenv("KRULL_CAPACITY", "quotient=20000")
    assert not oracle(ZZ, "101", "x^2+1")       # -1 is a square mod 101
    assert oracle(ZZ, "103", "x^2+1")


@pytest.mark.parametrize("R,p", [
    (ZZ_I, "1+i"), (ZZ_I, "3"), (ZZ_I, "1+2i"), (GF_t(2), "[t]"), (GF_t(2), "[t^2+t+1]"),
    (GF_t(3), "[t+1]"), (Zloc(2), "2"), (Zloc(3), "3"),
], ids=str)
def test_oracle_agrees_with_classify_on_other_rings(R, p):
    p = parse_elem(R, p)
    q = residue_field(p).size
    for d in (1, 2, 3):
        if q ** d > 200:
            break
        for gbar in monic_residue_polys(p, d):
            g = Poly.from_coeffs(R, gbar.coeffs)
            maximal = classify(Ideal.pair(p, g)).status is Status.MAXIMAL
            assert maximal == field_quotient_oracle(p, g), str(g)


def test_oracle_ignores_non_monic_scaling():
    for p in first_irreducibles(ZZ, 3):
        g = parse_poly(ZZ, "x^2+x+1")
        assert field_quotient_oracle(p, g) == field_quotient_oracle(p, g.scale(ZZ.elem(p.value + 1)))
