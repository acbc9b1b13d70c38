import math

import pytest
from hypothesis import given, strategies as st

from powideal.polys import SparseIntPoly, compositions, linear_sum, monomial_count, product


def test_compositions_order():
    assert list(compositions(2, 3)) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


@given(st.integers(0, 7), st.integers(1, 4))
def test_compositions_count(total, parts):
    got = list(compositions(total, parts))
    assert len(got) == len(set(got)) == monomial_count(parts, total) == math.comb(total + parts - 1, parts - 1)
    assert all(sum(a) == total for a in got)


def test_linear_sum_power_is_multinomial():
    f = linear_sum(3) ** 4
    assert f.terms[(2, 2, 0)] == 6
    assert f.terms[(3, 1, 0)] == 4
    assert f.is_homogeneous() and f.total_degree() == 4


def test_arithmetic():
    x, y = SparseIntPoly.variable(2, 0), SparseIntPoly.variable(2, 1)
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert (x - x).is_zero()
    assert 3 * x == x + x + x
    assert -(x - y) == y - x
    assert product([x, y, x], 2) == x ** 2 * y
    assert hash(x + y) == hash(y + x)


@pytest.mark.parametrize("text", ["x0^4 - 2*x0^2*x1^2 + x1^4", "3*x0*x1 - 7", "-x1^3"])
def test_text_round_trip(text):
    p = SparseIntPoly.from_text(text, 2)
    assert SparseIntPoly.from_text(p.to_text(), 2) == p


coeff = st.integers(-50, 50).filter(bool)
expo = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@given(st.dictionaries(expo, coeff, max_size=6))
def test_text_round_trip_random(terms):
    p = SparseIntPoly(3, terms)
    assert SparseIntPoly.from_text(p.to_text(), 3) == p


@given(st.dictionaries(expo, coeff, max_size=4), st.dictionaries(expo, coeff, max_size=4))
def test_product_commutes_and_distributes(a, b):
    p, q = SparseIntPoly(3, a), SparseIntPoly(3, b)
    assert p * q == q * p
    assert p * (q + q) == p * q + p * q
