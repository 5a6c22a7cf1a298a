"""Twisted fields, twisted-module axioms, the twisted quadratic identity,
and descent of jet equations into field coefficients.  Frozen coefficients
come from expanding the generator field x -> sum x[n] z^{-n} over the coset
alpha/m + Z by hand and differentiating in z.
"""

from fractions import Fraction

import pytest

from jetva.jetpoly import JetPoly, TruncationError, divided_t_power
from jetva.jetscheme import DiagAutomorphism, SchemeSpec
from jetva.reports import all_passed
from jetva.twisted import (
    check_descent,
    check_twisted_axioms,
    check_twisted_borcherds,
    twisted_field,
    twisted_mode,
    twisted_vertex_op,
)
from jetva.va import mode, vertex_op


def y(i, level=0, m=2):
    return JetPoly.var(m, i, level)


G2 = DiagAutomorphism(2, (1,))
G2P = DiagAutomorphism(2, (1, 0))


# ---------------------------------------------------------------------------
# field construction
# ---------------------------------------------------------------------------


def test_generator_field_frozen():
    s = twisted_vertex_op(y(1), G2, Fraction(5, 2))
    assert {str(w): str(p) for w, p in s.coeffs} == {
        "1/2": "x1[-1/2]",
        "3/2": "x1[-3/2]",
        "5/2": "x1[-5/2]",
    }


def test_derivative_field_frozen():
    # Y(x[-1]) = d/dz Y(x): coefficient of z^(n-1) picks up a factor n
    s = twisted_vertex_op(y(1, -1), G2, Fraction(5, 2))
    assert {str(w): str(p) for w, p in s.coeffs} == {
        "-1/2": "1/2*x1[-1/2]",
        "1/2": "3/2*x1[-3/2]",
        "3/2": "5/2*x1[-5/2]",
        "5/2": "7/2*x1[-7/2]",
    }


def test_product_field_frozen_coefficient():
    # Y(x^2) = Y(x)^2 = x[-1/2]^2 z + 2 x[-1/2] x[-3/2] z^2 + ...
    s = twisted_vertex_op(y(1) ** 2, G2, 2)
    assert str(s.coefficient(1)) == "x1[-1/2]^2"
    assert str(s.coefficient(2)) == "2*x1[-1/2]*x1[-3/2]"


def test_field_requires_eigen_homogeneous_source():
    with pytest.raises(ValueError):
        twisted_field(y(1) + y(2), G2P, 3)


def test_field_rejects_fractional_level_source():
    bad = JetPoly.var(2, 1, Fraction(-1, 2))
    with pytest.raises(ValueError):
        twisted_field(bad, G2, 3)


def test_modes_and_window_guard():
    f = twisted_field(y(1), G2, Fraction(5, 2))
    assert str(f.mode(Fraction(-3, 2))) == "x1[-1/2]"
    assert f.mode(Fraction(1, 2)).is_zero
    with pytest.raises(TruncationError):
        f.mode(Fraction(-9, 2))
    # off-coset modes act as exact zero on the twisted module
    assert f.mode(0).is_zero


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------


def test_axioms_on_parabola_states():
    spec = SchemeSpec.of(2, 2, [y(1, m=2) ** 2 - y(2, m=2)])
    pairs = [
        (y(1, m=2), y(2, m=2)),
        (y(1, m=2) * y(2, m=2), y(1, m=2)),
        (JetPoly.one(2), y(1, m=2) ** 2),
    ]
    for a, b in pairs:
        results = check_twisted_axioms(a, b, G2P, 4, spec)
        assert all_passed(results), [r for r in results if not r.passed]


def test_axioms_catch_support_coset():
    results = check_twisted_axioms(y(1), y(1), G2, 4)
    coset = [r for r in results if "coset" in r.name]
    assert coset and all(r.passed for r in coset)


# ---------------------------------------------------------------------------
# twisted quadratic identity
# ---------------------------------------------------------------------------


def test_borcherds_coset_validation():
    with pytest.raises(ValueError):
        check_twisted_borcherds(y(1), y(1), G2, 0, 0, Fraction(1, 2), 4)
    with pytest.raises(ValueError):
        check_twisted_borcherds(y(1), y(1), G2, Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), 4)


def test_borcherds_box_order2():
    a = y(1)
    b = y(1) ** 2  # characters 1 and 0: m in 1/2+Z, n in Z
    for l in range(-2, 3):
        for dm in range(-2, 3):
            for dn in range(-2, 3):
                res = check_twisted_borcherds(
                    a, b, G2, l, Fraction(2 * dm + 1, 2), dn, 6
                )
                assert res.passed, (l, dm, dn, res)


def test_borcherds_box_order3():
    g = DiagAutomorphism(3, (1, 2))
    a = JetPoly.var(3, 1)
    b = JetPoly.var(3, 2, -1)
    for l in range(-2, 2):
        for dm in range(-1, 2):
            for dn in range(-1, 2):
                res = check_twisted_borcherds(
                    a, b, g, l, Fraction(3 * dm + 1, 3), Fraction(3 * dn + 2, 3), 5
                )
                assert res.passed, (l, dm, dn, res)


def test_order_one_degenerates_to_plain_algebra():
    g1 = DiagAutomorphism(1, (0, 0))
    a = JetPoly.var(1, 1) * JetPoly.var(1, 2)
    b = JetPoly.var(1, 2, -1)
    # fields coincide
    tw = twisted_vertex_op(a, g1, 4)
    pl = vertex_op(a, 4)
    assert tw.coeffs == pl.coeffs
    # modes coincide
    for n in range(-4, 2):
        assert twisted_mode(a, g1, n, 5) == mode(a, n, window=5)
    # the two quadratic identities see the same instances
    for l in range(-2, 2):
        for m_idx in range(-2, 2):
            for n_idx in range(-2, 2):
                assert check_twisted_borcherds(a, b, g1, l, m_idx, n_idx, 6).passed


# ---------------------------------------------------------------------------
# descent of jet equations
# ---------------------------------------------------------------------------


def test_descent_parabola():
    spec = SchemeSpec.of(2, 2, [y(1, m=2) ** 2 - y(2, m=2)])
    for n in range(0, 3):
        results = check_descent(spec, G2P, 1, n, 4 - n)
        assert all_passed(results), (n, [r for r in results if not r.passed])


def test_descent_cusp_order3():
    x1 = JetPoly.var(3, 1)
    x2 = JetPoly.var(3, 2)
    spec = SchemeSpec.of(3, 2, [x1 ** 3 - x2 ** 2])
    g = DiagAutomorphism(3, (2, 0))  # 3*2 = 2*0 + 6 = 0 mod 3: eigenvector
    for n in range(0, 2):
        results = check_descent(spec, g, 1, n, 3 - n)
        assert all_passed(results), (n, [r for r in results if not r.passed])


def test_descent_rejects_bad_relation_index():
    spec = SchemeSpec.of(2, 1, [y(1) ** 2])
    with pytest.raises(ValueError):
        check_descent(spec, G2, 2, 0, 3)
