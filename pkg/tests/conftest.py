from fractions import Fraction

import pytest
from hypothesis import strategies as st

from krull.poly import Poly
from krull.rings import QQ, ZZ, ZZ_I, GF_t, Zloc

RINGS = [ZZ, ZZ_I, GF_t(2), GF_t(5), Zloc(2), Zloc(5), QQ]
RING_IDS = [str(R) for R in RINGS]
EUCLIDEAN = [R for R in RINGS if not R.is_field]


def small_ints(bound=50):
    return st.integers(-bound, bound)


def elems(R, bound=50):
    """Hypothesis strategy for elements of ``R``."""
    kind = R.kind.name
    if kind == "INTEGERS":
        v = small_ints(bound)
    elif kind == "GAUSSIAN":
        v = st.tuples(small_ints(bound), small_ints(bound))
    elif kind == "FF_POLY":
        v = st.lists(st.integers(0, R.p - 1), max_size=5).map(tuple)
    elif kind == "LOCALIZED":
        dens = st.integers(1, 20).filter(lambda d: d % R.p)
        v = st.builds(Fraction, small_ints(bound), dens)
    else:
        v = st.builds(Fraction, small_ints(bound), st.integers(1, 20))
    return v.map(lambda x: R.elem(x))


def nonzero(R, bound=50):
    return elems(R, bound).filter(bool)


def polys(R, max_degree=4, bound=20):
    return st.lists(elems(R, bound), max_size=max_degree + 1).map(
        lambda cs: Poly.from_coeffs(R, cs))


@pytest.fixture(params=RINGS, ids=RING_IDS)
def ring(request):
    return request.param
