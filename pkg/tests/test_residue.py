import itertools

import pytest

from krull.errors import CapacityError, ConstantPolynomialError, DivisionByZeroError, InfiniteResidueFieldError
from krull.poly import parse_poly, reduce_mod
from krull.residue import ResidueField, ResiduePoly, monic_residue_polys, residue_field, residue_irreducible
from krull.rings import QQ, ZZ, ZZ_I, GF_t, Zloc, parse_elem


def rbar(R, p, text):
    return reduce_mod(parse_poly(R, text), parse_elem(R, p))


def test_residue_irreducible_examples():
    assert residue_irreducible(rbar(ZZ, "5", "x^2+2"))
    assert not residue_irreducible(rbar(ZZ, "2", "x^2+1"))
    assert residue_irreducible(rbar(ZZ, "7", "x"))
    with pytest.raises(ConstantPolynomialError):
        residue_irreducible(rbar(ZZ, "7", "3"))


def _reducible_by_products(p, d):
    """Every monic degree-d product of two monic factors of positive degree."""
    out = set()
    for k in range(1, d // 2 + 1):
        for a in monic_residue_polys(p, k):
            for b in monic_residue_polys(p, d - k):
                out.add(a * b)
    return out


FIELDS = [
    (ZZ, "2"), (ZZ, "3"), (ZZ, "5"), (ZZ, "7"),
    (ZZ_I, "1+i"), (ZZ_I, "2+i"), (GF_t(2), "[t^2+t+1]"), (GF_t(3), "[t]"), (Zloc(3), "3"),
]


@pytest.mark.parametrize("R,p", FIELDS, ids=str)
def test_residue_irreducible_vs_products(R, p):
    p = parse_elem(R, p)
    q = residue_field(p).size
    for d in range(1, 5):
        if q ** d > 3000:
            break
        reducible = _reducible_by_products(p, d)
        for f in monic_residue_polys(p, d):
            assert residue_irreducible(f) == (f not in reducible), str(f)


@pytest.mark.parametrize("q,d,count", [(2, 1, 2), (2, 2, 1), (2, 3, 2), (2, 4, 3), (3, 2, 3), (5, 2, 10), (7, 3, 112)])
def test_irreducible_counts_match_necklace_formula(q, d, count):
    # number of monic irreducibles of degree d over F_q (Moebius/necklace count)
    p = ZZ.elem(q)
    assert sum(residue_irreducible(f) for f in monic_residue_polys(p, d)) == count


def test_gaussian_residue_field_of_3_has_nine_elements():
    F = residue_field(ZZ_I.elem(3))
    assert F.size == 9
    # x^2 + 1 splits over F_9 = F_3[i]
    assert not residue_irreducible(rbar(ZZ_I, "3", "x^2+1"))
    # but not over F_3
    assert residue_irreducible(rbar(ZZ, "3", "x^2+1"))


@pytest.mark.parametrize("R,p", FIELDS, ids=str)
def test_field_inverses(R, p):
    F = residue_field(parse_elem(R, p))
    for a in F.elements()[1:]:
        assert F.mul(a, F.inv(a)) == F.one
    with pytest.raises(DivisionByZeroError):
        F.inv(F.zero)


def test_divmod_and_divides():
    p = ZZ.elem(5)
    f, g = rbar(ZZ, "5", "x^3+2x+1"), rbar(ZZ, "5", "2x+3")
    q, r = f.divmod(g)
    assert q * g + r == f and r.degree < g.degree
    assert g.divides(g * f) and not rbar(ZZ, "5", "x").divides(rbar(ZZ, "5", "x+1"))
    assert ResiduePoly.from_coeffs(p, []).divides(ResiduePoly.from_coeffs(p, []))


def test_residue_errors():
    with pytest.raises(InfiniteResidueFieldError):
        ResidueField(QQ.elem(2))
    with pytest.raises(CapacityError):
        residue_irreducible(rbar(ZZ, "7", "x^30+1"))


def test_monic_enumeration_is_complete():
    p = ZZ.elem(3)
    polys = list(monic_residue_polys(p, 2))
    assert len(polys) == len(set(polys)) == 9
    tails = {f.coeffs[:2] for f in polys}
    assert tails == set(itertools.product(residue_field(p).elements(), repeat=2))
