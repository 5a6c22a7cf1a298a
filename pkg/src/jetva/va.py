"""The commutative vertex algebra carried by a jet polynomial ring.

State space V is the polynomial ring in the untwisted jet variables; the
vertex operator is Y(a, z) = e^(zT) a acting by multiplication, so every
mode a_(n) is multiplication by the element T^(-n-1)(a)/(-n-1)! for
n <= -1 and zero for n >= 0.  The checkers below verify the axioms and the
Borcherds identity as exact polynomial identities applied to the vacuum;
every sum is finite and the code works out the support bounds itself.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .jetpoly import (
    JetPoly,
    PuiseuxSeries,
    TruncationError,
    apply_automorphism,
    binom,
    derivation_T,
    divided_t_power,
)
from .reports import CheckResult

ModeIndex = Union[int, Fraction]


def _require_untwisted(a: JetPoly) -> None:
    for v in a.variables():
        if v.point != 0 or v.level.denominator != 1:
            raise ValueError(f"not an untwisted jet polynomial (variable {v})")


def vertex_op(a: JetPoly, window) -> PuiseuxSeries:
    """Y(a, z) = sum_{n>=0} T^n(a)/n! z^n, truncated at the window."""
    _require_untwisted(a)
    W = Fraction(window)
    acc = {}
    cur = a
    n = 0
    while n <= W:
        acc[Fraction(n)] = cur
        cur = derivation_T(cur).scale(Fraction(1, n + 1))
        n += 1
    return PuiseuxSeries.from_dict(a.order, acc, W)


def mode(a: JetPoly, n: ModeIndex, window=None) -> JetPoly:
    """The multiplication element a_(n) 1: T^(-n-1)(a)/(-n-1)! for n <= -1,
    zero otherwise.  With a window given, refuses indices whose coefficient
    lies beyond it."""
    if Fraction(n).denominator != 1:
        raise ValueError("untwisted mode index must be an integer")
    n = int(n)
    if n >= 0:
        return JetPoly.zero(a.order)
    k = -n - 1
    if window is not None and k > Fraction(window):
        raise TruncationError(f"mode {n} needs the z^{k} coefficient, window {window}")
    return divided_t_power(a, k)


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------


def check_va_axioms(
    a: JetPoly, window, alpha=None, samples=None, mode_indices=range(-3, 2)
) -> list[CheckResult]:
    """Translation, vacuum, creation, multiplicativity, and (when an
    automorphism exponent vector is supplied) equivariance of modes."""
    W = Fraction(window)
    m = a.order
    out: list[CheckResult] = []

    lhs = vertex_op(derivation_T(a), W)
    rhs = vertex_op(a, W + 1).differentiate()
    bad = lhs.mismatches(rhs)
    out.append(
        CheckResult(
            "translation: Y(Ta,z) = d/dz Y(a,z)",
            not bad,
            None if not bad else f"z^{bad[0][0]}: {bad[0][1]}",
        )
    )

    one = JetPoly.one(m)
    vac = vertex_op(one, W)
    vac_ok = vac.support() == (Fraction(0),) and vac.coefficient(0) == one
    out.append(CheckResult("vacuum: Y(1,z) = id", vac_ok, None if vac_ok else str(vac)))

    created = mode(a, -1)
    no_neg = all(w >= 0 for w in vertex_op(a, W).support())
    crea_ok = no_neg and created == a
    out.append(
        CheckResult(
            "creation: Y(a,z)1 regular and a_(-1)1 = a",
            crea_ok,
            None if crea_ok else str(created - a),
        )
    )

    for b in samples or [one, a]:
        prod = vertex_op(a * b, W)
        split = vertex_op(a, W) * vertex_op(b, W)
        bad = prod.mismatches(split)
        out.append(
            CheckResult(
                f"multiplicative: Y(ab,z) = Y(a,z)Y(b,z) [b = {b}]",
                not bad,
                None if not bad else f"z^{bad[0][0]}: {bad[0][1]}",
            )
        )

    if alpha is not None:
        ga = apply_automorphism(alpha, a)
        for b in samples or [one, a]:
            gb = apply_automorphism(alpha, b)
            for n in mode_indices:
                lhs_p = mode(ga, n) * gb
                rhs_p = apply_automorphism(alpha, mode(a, n) * b)
                ok = lhs_p == rhs_p
                out.append(
                    CheckResult(
                        f"equivariance: g(a)_({n}) g(b) = g(a_({n}) b) [b = {b}]",
                        ok,
                        None if ok else str(lhs_p - rhs_p),
                    )
                )
                if not ok:
                    break
    return out


def check_borcherds(
    a: JetPoly,
    b: JetPoly,
    m_idx: int,
    n_idx: int,
    k_idx: int,
    window,
) -> CheckResult:
    """Borcherds identity evaluated on the vacuum, all modes exact.

    sum_j C(m,j) (a_(n+j) b)_(m+k-j)
      = sum_j (-1)^j C(n,j) [ a_(m+n-j) b_(k+j) - (-1)^n b_(n+k-j) a_(m+j) ]
    """
    for idx in (m_idx, n_idx, k_idx):
        if not isinstance(idx, int):
            raise ValueError("untwisted Borcherds indices must be integers")
    order = a.order
    name = f"borcherds(m={m_idx}, n={n_idx}, k={k_idx})"

    lhs = JetPoly.zero(order)
    j = 0
    while n_idx + j <= -1:
        inner = mode(a, n_idx + j) * b
        if not inner.is_zero:
            lhs = lhs + mode(inner, m_idx + k_idx - j, window).scale(
                binom(m_idx, j)
            )
        j += 1

    # For n >= 0 the binomial kills j > n.  For n < 0 the first product dies
    # once k + j >= 0 and the second once m + j >= 0, so everything is zero
    # from j = max(-k, -m) onward.
    if n_idx >= 0:
        j_max = n_idx
    else:
        j_max = max(-k_idx - 1, -m_idx - 1)
    sign_n = -1 if n_idx % 2 else 1
    rhs = JetPoly.zero(order)
    for j in range(0, j_max + 1):
        c = binom(n_idx, j) * (-1 if j % 2 else 1)
        if not c:
            continue
        t1 = mode(a, m_idx + n_idx - j, window) * mode(b, k_idx + j, window)
        t2 = mode(b, n_idx + k_idx - j, window) * mode(a, m_idx + j, window)
        rhs = rhs + (t1 - t2.scale(sign_n)).scale(c)

    diff = lhs - rhs
    return CheckResult(name, diff.is_zero, None if diff.is_zero else str(diff))
