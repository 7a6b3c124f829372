import json

import pytest
from hypothesis import given, strategies as st

from oddlength.poly import ONE, X, ZERO, IntPolynomial, PolynomialDivisionError

coeff_lists = st.lists(st.integers(-50, 50), max_size=8)
polys = coeff_lists.map(IntPolynomial)


def test_trailing_zeros_stripped():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).is_zero()
    assert ZERO.degree == -1


def test_rendering():
    assert str(IntPolynomial([1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 2])) == "1 - x^2 + 2*x^10"
    assert str(ZERO) == "0"
    assert str(-X) == "-x"


def test_known_product():
    p = (ONE - X**2) * (ONE - X**4)
    assert p.coeffs == (1, 0, -1, 0, -1, 0, 1)
    assert p(1) == 0 and p(2) == 45


def test_equality_with_int():
    assert IntPolynomial([3]) == 3
    assert ZERO == 0
    assert X != 1


def test_substitute_power():
    assert (ONE + X).substitute_power(2) == ONE + X**2
    assert IntPolynomial([1, 2, 3]).substitute_power(3).coeffs == (1, 0, 0, 2, 0, 0, 3)


def test_exact_division():
    assert ((ONE - X**6) * (ONE + X)).exact_div(ONE - X**2) == (ONE + X**2 + X**4) * (ONE + X)
    with pytest.raises(PolynomialDivisionError):
        (ONE + X).exact_div(ONE - X**2)
    with pytest.raises(PolynomialDivisionError):
        X.exact_div(IntPolynomial([0, 2]) + 1)


def test_from_json_rejects_floats():
    with pytest.raises(ValueError):
        IntPolynomial.from_json({"coeffs": [1.0], "var": "x"})
    with pytest.raises(ValueError):
        IntPolynomial.from_json({"coeffs": [1], "var": "q"})


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, x):
    assert (a * a)(x) == a(x) ** 2


@given(polys)
def test_json_round_trip(p):
    doc = json.loads(json.dumps(p.to_json()))
    assert IntPolynomial.from_json(doc) == p


@given(polys, polys)
def test_division_inverts_multiplication(a, b):
    if b.is_zero() or b.coeffs[-1] not in (1, -1):
        return
    assert (a * b).exact_div(b) == a
