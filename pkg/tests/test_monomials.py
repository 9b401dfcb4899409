import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borelreg.errors import AmbientMismatchError
from borelreg.monomials import EXPONENT_LIMIT, Monomial

from conftest import mono


def test_degree():
    assert mono(3).degree == 0
    assert mono(3, {2: 6, 3: 7}).degree == 13
    assert mono(5, {1: 5, 2: 5, 3: 5, 4: 11, 5: 11}).degree == 37


def test_nu():
    u = mono(3, {2: 6, 3: 7})
    assert u.nu(3) == 7
    assert u.nu(1) == 0
    assert all(mono(4).nu(i) == 0 for i in range(1, 5))
    with pytest.raises(ValueError):
        u.nu(4)


def test_max_support():
    assert mono(3, {2: 6, 3: 7}).max_support() == 3
    assert mono(1, {1: 13}).max_support() == 1
    assert mono(3).max_support() is None


def test_divisibility_algebra():
    a = mono(2, {1: 6})
    b = mono(2, {1: 6, 2: 7})
    assert a.divides(b)
    assert not b.divides(a)
    assert mono(2, {1: 6}).lcm(mono(2, {2: 6})) == mono(2, {1: 6, 2: 6})
    assert mono(3, {2: 6, 3: 7}).quotient(mono(3, {3: 7})) == mono(3, {2: 6})


def test_quotient_requires_divisibility():
    with pytest.raises(ValueError):
        mono(2, {1: 1}).quotient(mono(2, {2: 1}))


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        mono(2, {1: 1}).divides(mono(3, {1: 1}))


def test_multiply_overflow_is_checked():
    huge = Monomial(1, (EXPONENT_LIMIT,))
    with pytest.raises(OverflowError):
        huge * Monomial(1, (1,))


def test_with_ambient():
    u = mono(2, {1: 3})
    assert u.with_ambient(4).ambient == 4
    assert u.with_ambient(4).with_ambient(2) == u
    with pytest.raises(ValueError):
        mono(3, {3: 1}).with_ambient(2)


def test_text_form():
    assert str(mono(3)) == "1"
    assert str(mono(3, {2: 6, 3: 7})) == "x2^6*x3^7"
    assert str(mono(3, {1: 1, 3: 2})) == "x1*x3^2"


exponents = st.integers(min_value=0, max_value=9)


def pairs_of_monomials(n):
    vec = st.tuples(*([exponents] * n))
    return st.tuples(vec, vec)


@settings(max_examples=200, deadline=None)
@given(pairs_of_monomials(3))
def test_mutual_divisibility_is_equality(pair):
    u, v = (Monomial(3, e) for e in pair)
    if u.divides(v) and v.divides(u):
        assert u == v


@settings(max_examples=200, deadline=None)
@given(pairs_of_monomials(4))
def test_gcd_lcm_bounds(pair):
    u, v = (Monomial(4, e) for e in pair)
    g, l = u.gcd(v), u.lcm(v)
    assert g.divides(u) and g.divides(v)
    assert u.divides(l) and v.divides(l)


@settings(max_examples=200, deadline=None)
@given(pairs_of_monomials(4))
def test_product_quotient_roundtrip(pair):
    u, v = (Monomial(4, e) for e in pair)
    assert (u * v).quotient(v) == u
    assert (u * v).degree == u.degree + v.degree
