"""Jet schemes and twisted jet schemes of affine schemes, presented exactly.

A scheme Z = V(P_1, ..., P_r) inside affine k-space is given by level-0 jet
polynomials.  Its jet scheme coordinate ring is the quotient of the free jet
polynomial ring by the generators P[i,n]; this module computes those
generators two independent ways (iterated translation derivation vs.
coefficient extraction from the jet substitution), their twisted analogues
for a diagonal automorphism of finite order, the fixed-point subscheme, and
exact bigraded dimension tables of bounded quotients.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .cyclo import CycScalar
from .jetpoly import (
    JetPoly,
    JetVar,
    Monomial,
    _mono_key,
    admissible_levels,
    apply_automorphism,
    derivation_T,
    jet_var,
    substitute_jets,
    series_coefficient,
)
from .linalg import RowReducer


class IdealNotPreservedError(ValueError):
    """The diagonal action does not map the relation span to itself."""


@dataclasses.dataclass(frozen=True)
class SchemeSpec:
    """An affine scheme: variable indices plus level-0 relations."""

    order: int
    variables: tuple[int, ...]
    relations: tuple[JetPoly, ...]

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable indices")
        if any(i < 1 for i in self.variables):
            raise ValueError("variable indices are 1-based")
        allowed = set(self.variables)
        for p in self.relations:
            if p.order != self.order:
                raise ValueError("relation coefficient order does not match scheme")
            if not p.is_level_zero():
                raise ValueError("relations must be level-0 polynomials")
            if any(v.index not in allowed or v.point != 0 for v in p.variables()):
                raise ValueError("relation uses a variable outside the scheme")

    @classmethod
    def affine(cls, order: int, k: int) -> SchemeSpec:
        return cls(order, tuple(range(1, k + 1)), ())

    @classmethod
    def of(cls, order: int, k: int, relations) -> SchemeSpec:
        return cls(order, tuple(range(1, k + 1)), tuple(relations))

    @property
    def k(self) -> int:
        return len(self.variables)


@dataclasses.dataclass(frozen=True)
class DiagAutomorphism:
    """x_i -> zeta_m^(alpha_i) x_i, exponents aligned with spec.variables."""

    order: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if any(not (0 <= a < self.order) for a in self.exponents):
            raise ValueError("exponents must lie in 0..order-1")

    def inverse(self) -> DiagAutomorphism:
        return DiagAutomorphism(
            self.order, tuple((-a) % self.order for a in self.exponents)
        )

    @property
    def is_trivial(self) -> bool:
        return all(a == 0 for a in self.exponents)

    def offsets(self, spec: SchemeSpec) -> dict[int, Fraction]:
        """Coset offset alpha_i/m in [0,1) for each variable index."""
        return {
            idx: Fraction(a, self.order)
            for idx, a in zip(spec.variables, self.exponents)
        }

    def alpha_by_index(self, spec: SchemeSpec) -> list[int]:
        """Exponent list positioned by variable index (for character sums)."""
        top = max(spec.variables, default=0)
        out = [0] * top
        for idx, a in zip(spec.variables, self.exponents):
            out[idx - 1] = a
        return out


def _poly_row(p: JetPoly, columns: dict[Monomial, int]) -> dict[int, CycScalar]:
    row = {}
    for mon, c in p.terms:
        if mon not in columns:
            columns[mon] = len(columns)
        row[columns[mon]] = c
    return row


def preserves_ideal(spec: SchemeSpec, g: DiagAutomorphism) -> bool:
    """Does the diagonal action map span{P_1..P_r} into itself?"""
    if len(g.exponents) != spec.k:
        raise ValueError("exponent count does not match the scheme")
    if not spec.relations:
        return True
    alpha = g.alpha_by_index(spec)
    columns: dict[Monomial, int] = {}
    red = RowReducer(spec.order)
    for p in spec.relations:
        red.add(_poly_row(p, columns))
    for p in spec.relations:
        image = apply_automorphism(alpha, p)
        if any(mon not in columns for mon, _ in image.terms):
            return False
        if not red.contains(_poly_row(image, columns)):
            return False
    return True


def checked_automorphism(
    spec: SchemeSpec, order: int, exponents
) -> DiagAutomorphism:
    g = DiagAutomorphism(order, tuple(exponents))
    if order != spec.order:
        raise ValueError("automorphism order must match the scheme's scalar order")
    if not preserves_ideal(spec, g):
        raise IdealNotPreservedError(
            f"exponents {g.exponents} do not preserve the relation span"
        )
    return g


# ---------------------------------------------------------------------------
# jet generators
# ---------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class JetGenerator:
    weight: Fraction
    relation: int  # 1-based index into spec.relations
    poly: JetPoly


@dataclasses.dataclass(frozen=True)
class JetPresentation:
    twisted: bool
    order: int
    automorphism: DiagAutomorphism | None
    max_weight: Fraction
    variables: tuple[JetVar, ...]
    generators: tuple[JetGenerator, ...]


def _presentation_vars(spec, offsets, max_weight) -> tuple[JetVar, ...]:
    out = []
    for idx in spec.variables:
        for n in admissible_levels(offsets.get(idx, Fraction(0)), max_weight):
            out.append(jet_var(idx, n))
    return tuple(sorted(out))


def jet_generators(
    spec: SchemeSpec, max_weight: int, method: str = "T_recursion"
) -> JetPresentation:
    """Untwisted jet ideal generators up to the given weight.

    Two routes are implemented and must agree: ``T_recursion`` iterates the
    divided translation derivation, P[i,n] = T(P[i,n-1])/n, while
    ``substitution`` expands P_i along the generic jet and reads off the
    t^n coefficient.  Exact zeros contribute nothing and are dropped.
    """
    if method not in ("T_recursion", "substitution"):
        raise ValueError(f"unknown method {method!r}")
    W = int(max_weight)
    offsets = {idx: Fraction(0) for idx in spec.variables}
    gens: list[JetGenerator] = []
    for i, p in enumerate(spec.relations, start=1):
        if method == "T_recursion":
            cur = p  # P[i,0]; then P[i,n] = T(P[i,n-1]) / n
            for n in range(0, W + 1):
                if not cur.is_zero:
                    gens.append(JetGenerator(Fraction(n), i, cur))
                cur = derivation_T(cur).scale(Fraction(1, n + 1))
        else:
            s = substitute_jets(p, offsets, W)
            for w in s.support():
                if 0 <= w <= W:
                    gens.append(JetGenerator(w, i, series_coefficient(s, w)))
    gens.sort(key=lambda gg: (gg.weight, gg.relation))
    return JetPresentation(
        twisted=False,
        order=spec.order,
        automorphism=None,
        max_weight=Fraction(W),
        variables=_presentation_vars(spec, offsets, W),
        generators=tuple(gens),
    )


def twisted_jet_generators(
    spec: SchemeSpec, g: DiagAutomorphism, max_weight
) -> JetPresentation:
    """Generators of the g-twisted jet ideal: the t^w coefficients of the
    relations expanded along the twisted jet, for all lattice weights w in
    [0, max_weight] where a coefficient survives."""
    if not preserves_ideal(spec, g):
        raise IdealNotPreservedError(
            f"exponents {g.exponents} do not preserve the relation span"
        )
    W = Fraction(max_weight)
    offsets = g.offsets(spec)
    gens: list[JetGenerator] = []
    for i, p in enumerate(spec.relations, start=1):
        s = substitute_jets(p, offsets, W)
        for w in s.support():
            if 0 <= w <= W:
                gens.append(JetGenerator(w, i, series_coefficient(s, w)))
    gens.sort(key=lambda gg: (gg.weight, gg.relation))
    return JetPresentation(
        twisted=True,
        order=spec.order,
        automorphism=g,
        max_weight=W,
        variables=_presentation_vars(spec, offsets, W),
        generators=tuple(gens),
    )


# ---------------------------------------------------------------------------
# fixed points
# ---------------------------------------------------------------------------


def fixed_point_ring(spec: SchemeSpec, g: DiagAutomorphism) -> SchemeSpec:
    """Presentation of the fixed subscheme: keep the variables with trivial
    character, set the others to zero in every relation, drop zeros."""
    if len(g.exponents) != spec.k:
        raise ValueError("exponent count does not match the scheme")
    retained = tuple(
        idx
        for idx, a in zip(spec.variables, g.exponents)
        if a % g.order == 0
    )
    keep = set(retained)
    new_rel = []
    for p in spec.relations:
        acc = {}
        for mon, c in p.terms:
            if all(v.index in keep for v, _ in mon.factors):
                acc[mon] = c
        q = JetPoly._from_dict(p.order, acc)
        if not q.is_zero:
            new_rel.append(q)
    return SchemeSpec(spec.order, retained, tuple(new_rel))


# ---------------------------------------------------------------------------
# bounded bigraded dimension tables
# ---------------------------------------------------------------------------


def enumerate_monomials(
    ambient: tuple[JetVar, ...], max_weight, max_degree: int
) -> dict[Fraction, list[Monomial]]:
    """All monomials in the ambient variables with weight <= max_weight and
    degree <= max_degree, grouped by weight, each slice sorted by degree."""
    W = Fraction(max_weight)
    vars_sorted = sorted(set(ambient))
    slices: dict[Fraction, list[Monomial]] = {}

    def rec(pos: int, factors, w: Fraction, d: int):
        if pos == len(vars_sorted):
            mon = Monomial(tuple(factors))
            slices.setdefault(w, []).append(mon)
            return
        v = vars_sorted[pos]
        e = 0
        while d + e <= max_degree and w + v.weight * e <= W:
            if e:
                factors.append((v, e))
            rec(pos + 1, factors, w + v.weight * e, d + e)
            if e:
                factors.pop()
            e += 1

    rec(0, [], Fraction(0), 0)
    for mons in slices.values():
        mons.sort(key=_mono_key)
    return slices


def graded_quotient_dims(
    order: int,
    ambient: tuple[JetVar, ...],
    ideal_gens,
    max_weight,
    max_degree: int,
) -> dict[tuple[Fraction, int], int]:
    """Dimension of each (weight, degree) piece of the bounded quotient.

    Within a weight slice the ideal rows are all in-box multiples of the
    generators; the (w, d) entry is the number of degree-d monomials still
    independent after the rows and all lower-degree monomials have been
    inserted.  Generators may mix degrees (they must be weight-homogeneous),
    in which case the table reads off the degree filtration of the quotient.
    Entries are upper bounds for the true quotient dimensions, exact once
    they are stable under enlarging the bounds.
    """
    W = Fraction(max_weight)
    D = int(max_degree)
    ambient = tuple(sorted(set(ambient)))
    allowed = set(ambient)
    gens = [p for p in ideal_gens if not p.is_zero]
    for p in gens:
        if p.order != order:
            raise ValueError("generator scalar order does not match")
        if p.homogeneous_weight() is None:
            raise ValueError(f"ideal generator is not weight-homogeneous: {p}")
        if not p.variables() <= allowed:
            raise ValueError("ideal generator uses a variable outside the ambient set")
    slices = enumerate_monomials(ambient, W, D)
    dims: dict[tuple[Fraction, int], int] = {}
    for w, mons in sorted(slices.items()):
        columns = {mon: j for j, mon in enumerate(mons)}
        red = RowReducer(order)
        for gen in gens:
            wg = gen.homogeneous_weight()
            room = D - gen.max_degree()
            if wg > w or room < 0:
                continue
            for q in slices.get(w - wg, []):
                if q.degree > room:
                    continue
                red.add({columns[q * mon]: c for mon, c in gen.terms})
        by_degree: dict[int, int] = {d: 0 for d in range(D + 1)}
        for mon in mons:  # already sorted by degree
            one = CycScalar.one(order)
            if red.add({columns[mon]: one}):
                by_degree[mon.degree] += 1
        for d in range(D + 1):
            dims[(w, d)] = by_degree[d]
    return dims
