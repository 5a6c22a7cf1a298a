"""Exact cyclotomic scalar arithmetic.

Reference values were computed by hand from the defining polynomials:
Phi_1 = z - 1, Phi_2 = z + 1, Phi_3 = z^2 + z + 1, Phi_4 = z^2 + 1,
Phi_6 = z^2 - z + 1, Phi_12 = z^4 - z^2 + 1.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jetva.cyclo import (
    CycScalar,
    FieldMismatchError,
    cyclotomic_poly,
    euler_phi,
    zeta_pow,
)


def test_euler_phi_small_values():
    assert [euler_phi(m) for m in range(1, 13)] == [
        1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4,
    ]


def test_cyclotomic_polynomials_frozen():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_zeta_relations_by_order():
    # zeta_2 = -1
    assert zeta_pow(2, 1) == CycScalar.from_rational(2, -1)
    # zeta_3^2 = -1 - zeta_3 (from Phi_3)
    z3 = CycScalar.zeta(3)
    assert z3 * z3 == CycScalar.from_rational(3, -1) - z3
    # zeta_4^2 = -1
    z4 = CycScalar.zeta(4)
    assert z4 * z4 == CycScalar.from_rational(4, -1)
    # zeta_6 satisfies z^2 = z - 1
    z6 = CycScalar.zeta(6)
    assert z6 * z6 == z6 - CycScalar.one(6)


def test_zeta_power_cycles():
    for m in (1, 2, 3, 4, 5, 6, 12):
        assert zeta_pow(m, m) == CycScalar.one(m)
        assert zeta_pow(m, -1) == zeta_pow(m, m - 1)


def test_inverse_frozen_example():
    # (1 + zeta_4)^-1 = (1 - zeta_4)/2
    z = CycScalar.zeta(4)
    a = CycScalar.one(4) + z
    inv = a.inverse()
    assert inv == (CycScalar.one(4) - z) * CycScalar.from_rational(4, Fraction(1, 2))
    assert a * inv == CycScalar.one(4)


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        CycScalar.zero(5).inverse()


def test_mixed_orders_rejected():
    with pytest.raises(FieldMismatchError):
        CycScalar.one(2) + CycScalar.one(3)


def test_rational_detection():
    z = CycScalar.zeta(3)
    assert not z.is_rational()
    # zeta_3 + zeta_3^2 = -1 is rational
    s = z + z * z
    assert s.is_rational() and s.as_rational() == -1


def test_string_forms():
    # zeta^4 = zeta^2 - 1 in order 12, so the constant term shifts by one
    z = CycScalar.zeta(12)
    assert str(CycScalar.from_rational(12, Fraction(1, 2)) + 3 * z - z ** 4) == (
        "3/2 + 3*zeta - zeta^2"
    )
    assert str(-z) == "-1*zeta"
    assert str(CycScalar.zero(12)) == "0"


def _scalars(order: int):
    coeff = st.fractions(
        min_value=-4, max_value=4, max_denominator=6
    )
    return st.lists(
        coeff, min_size=euler_phi(order), max_size=euler_phi(order)
    ).map(lambda cs: CycScalar(order, tuple(cs)))


@settings(max_examples=60, deadline=None)
@given(a=_scalars(12), b=_scalars(12), c=_scalars(12))
def test_field_axioms_order_12(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(a=_scalars(12))
def test_inverse_roundtrip_order_12(a):
    if not a:
        return
    assert a * a.inverse() == CycScalar.one(12)


@settings(max_examples=40, deadline=None)
@given(a=_scalars(5), k=st.integers(min_value=0, max_value=8))
def test_pow_matches_repeated_product(a, k):
    expected = CycScalar.one(5)
    for _ in range(k):
        expected = expected * a
    assert a ** k == expected
