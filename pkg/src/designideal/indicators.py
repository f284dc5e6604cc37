"""Indicator functions of fractions, mixture separator functions, and the
coefficient-based property analysis.

An indicator is kept in normal form against the ambient design ideal, which
makes it the unique polynomial supported on the design's standard monomials
taking value 1 on the fraction and 0 elsewhere. For full factorial designs
coded with roots of unity, the coefficients over the full exponent box are
computed from power sums over the fraction and verified by evaluation; the
exponent-negated variant is used automatically if the direct one fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from itertools import product
from math import prod

from .designs import (
    Design,
    canonical_generators,
    complement,
    ideal_of_points,
    ideal_of_projective_points,
    is_subdesign,
)
from .errors import (
    DegreeTooSmall,
    MissingCoeffs,
    MixtureViolation,
    NotASubset,
    NotFullFactorial,
    VerificationFailed,
)
from .groebner import (
    IdealRep,
    min_saturating_degree,
    normal_form,
)
from .orders import DEFAULT_ORDER
from .polynomials import Polynomial, sum_of_variables
from .scalars import Cyclotomic
from .switching import (
    gb_to_indicator_fast,
    gb_to_indicator_naive,
    gb_to_separator_fast_homog,
)


@dataclass
class IndicatorRep:
    """An indicator polynomial with its ambient design ideal and, for coded
    full factorials, the coefficient table over the exponent box."""

    polynomial: Polynomial
    ambient: IdealRep
    fraction: Design = None
    design: Design = None
    coeffs: dict = None
    variant: str = None
    levels: tuple = None


@dataclass
class SeparatorRep:
    """A homogeneous separator numerator; the full separator function is the
    ratio by (x1 + ... + xm) raised to the degree."""

    numerator: Polynomial
    degree: int
    ambient_cone: IdealRep
    fraction: Design = None
    design: Design = None


@dataclass
class PropertyReport:
    """Fraction properties read off the indicator coefficients."""

    ratio: object
    n_points: int
    n_design: int
    levels: tuple
    regular: bool
    defining_words: tuple
    balanced_factors: tuple
    orthogonal_pairs: dict
    oa_strength: int
    variant: str
    coeffs: dict = dataclass_field(repr=False, default=None)


def _require_subset(fraction: Design, design: Design):
    if not is_subdesign(fraction, design):
        raise NotASubset("fraction points must all belong to the design")


def _verify_indicator_values(poly: Polynomial, fraction: Design,
                             design: Design) -> bool:
    in_fraction = set(fraction.points)
    one, zero = design.field.one, design.field.zero
    for point in design.points:
        value = poly.evaluate(point)
        expected = one if point in in_fraction else zero
        if value != expected:
            return False
    return True


def indicator_from_points(fraction: Design, design: Design,
                          order=DEFAULT_ORDER) -> IndicatorRep:
    """Indicator by interpolation: the sum of the design's separators over
    the fraction points, reduced against the design ideal."""
    _require_subset(fraction, design)
    result = ideal_of_points(design, order)
    chosen = set(fraction.points)
    total = Polynomial.zero(design.factors, design.field)
    for point, sep in zip(design.points, result.separators):
        if point in chosen:
            total = total + sep
    poly = normal_form(total, result.ideal)
    if not _verify_indicator_values(poly, fraction, design):
        raise VerificationFailed("interpolated indicator failed evaluation")
    return IndicatorRep(poly, result.ideal, fraction=fraction, design=design)


def _design_ideal_and_gens(design: Design, order):
    # For a full level grid the one-variable generators are already the
    # reduced basis: their leading terms are coprime pure powers.
    if design.level_sets is not None:
        grid_size = prod(len(levels) for levels in design.level_sets)
        if grid_size == len(design.points):
            gens = canonical_generators(design)
            gb = tuple(g.monic(order) for g in gens)
            return IdealRep(gens, order, reduced_gb=gb), gens
    result = ideal_of_points(design, order)
    return result.ideal, result.ideal.reduced_gb


def indicator_fast(fraction: Design, design: Design,
                   order=DEFAULT_ORDER) -> IndicatorRep:
    """Indicator via the linear-algebra switch from the Groebner data of the
    fraction and the complement."""
    _require_subset(fraction, design)
    design_ideal, _ = _design_ideal_and_gens(design, order)
    if len(fraction) == len(design):
        poly = Polynomial.constant(1, design.factors, design.field)
        return IndicatorRep(poly, design_ideal, fraction=fraction, design=design)
    fraction_gb = ideal_of_points(fraction, order).ideal
    complement_gb = ideal_of_points(complement(design, fraction), order).ideal
    poly = gb_to_indicator_fast(fraction_gb, complement_gb, design_ideal,
                                order=order)
    return IndicatorRep(poly, design_ideal, fraction=fraction, design=design)


def indicator_naive(fraction: Design, design: Design,
                    order=DEFAULT_ORDER) -> IndicatorRep:
    """Indicator via the eliminated reference construction."""
    _require_subset(fraction, design)
    design_ideal, design_gens = _design_ideal_and_gens(design, order)
    if len(fraction) == len(design):
        poly = Polynomial.constant(1, design.factors, design.field)
        return IndicatorRep(poly, design_ideal, fraction=fraction, design=design)
    fraction_gb = ideal_of_points(fraction, order).ideal
    poly = gb_to_indicator_naive(design_gens, fraction_gb, order=order,
                                 design_ideal=design_ideal)
    if not _verify_indicator_values(poly, fraction, design):
        raise VerificationFailed("eliminated indicator failed evaluation")
    return IndicatorRep(poly, design_ideal, fraction=fraction, design=design)


# ---------------------------------------------------------------------------
# complex-coded coefficients

def _coding_orders(design: Design) -> tuple:
    """Validate that the design is a full factorial whose factor levels are
    complete sets of roots of unity; returns the per-factor orders."""
    m = design.n_factors
    level_values = [sorted({p[i] for p in design.points}, key=str)
                    for i in range(m)]
    orders = []
    one = design.field.one
    for values in level_values:
        n = len(values)
        for v in values:
            if v ** n != one:
                raise NotFullFactorial(
                    f"factor levels are not the {n}-th roots of unity"
                )
        orders.append(n)
    if prod(orders) != len(design.points):
        raise NotFullFactorial("point count does not match the level grid")
    grid = {tuple(c) for c in product(*level_values)}
    if set(design.points) != grid:
        raise NotFullFactorial("points do not form the full level grid")
    if design.coding is not None and tuple(design.coding) != tuple(orders):
        raise NotFullFactorial("recorded coding disagrees with the levels")
    return tuple(orders)


def _power_value(point, expo, orders, negate: bool):
    value = None
    for c, a, n in zip(point, expo, orders):
        if a:
            k = (-a) % n if negate else a
            factor = c ** k
            value = factor if value is None else value * factor
    return value


def complex_coeffs(fraction: Design, design: Design) -> IndicatorRep:
    """Indicator coefficients over the full exponent box of a coded full
    factorial, self-verified by evaluation on every design point.

    The direct power-sum formula is tried first; when it does not reproduce
    the 0/1 values, the exponent-negated variant is used instead, and the
    result records which one held.
    """
    _require_subset(fraction, design)
    orders = _coding_orders(design)
    field = design.field
    one = field.one
    inv_n = one / field.coerce(len(design.points))
    exponents = [tuple(e) for e in product(*(range(n) for n in orders))]
    for variant, negate in (("plain", False), ("conjugated", True)):
        coeffs = {}
        for expo in exponents:
            total = None
            for point in fraction.points:
                term = (_power_value(point, expo, orders, negate)
                        if any(expo) else one)
                total = term if total is None else total + term
            coeffs[expo] = total * inv_n
        poly = Polynomial(design.factors, field,
                          {e: c for e, c in coeffs.items() if c})
        if _verify_indicator_values(poly, fraction, design):
            gens = tuple(
                Polynomial.variable(name, design.factors, field) ** n - 1
                for name, n in zip(design.factors, orders)
            )
            ambient = IdealRep(gens, DEFAULT_ORDER, reduced_gb=gens)
            return IndicatorRep(poly, ambient, fraction=fraction,
                                design=design, coeffs=coeffs,
                                variant=variant, levels=orders)
    raise VerificationFailed(
        "neither power-sum variant reproduces the indicator values"
    )


def term_orthogonal(ind: IndicatorRep, alpha, beta) -> bool:
    """Whether the monomial responses x^alpha and x^beta are orthogonal on
    the fraction: the coefficient at the (componentwise, modular) exponent
    sum vanishes."""
    if ind.coeffs is None:
        raise MissingCoeffs("orthogonality needs the coefficient table")
    levels = ind.levels
    combined = tuple((a + b) % n for a, b, n in zip(alpha, beta, levels))
    return not ind.coeffs[combined]


def analyze(ind: IndicatorRep, levels=None) -> PropertyReport:
    """Read the regularity, balance, orthogonality and strength criteria off
    the indicator coefficients."""
    if ind.coeffs is None:
        raise MissingCoeffs("analysis needs the coefficient table")
    levels = tuple(levels) if levels is not None else ind.levels
    if levels is None:
        raise MissingCoeffs("analysis needs the per-factor level counts")
    m = len(levels)
    coeffs = ind.coeffs
    zero_expo = (0,) * m
    b0 = coeffs[zero_expo]
    nonzero = {e: c for e, c in coeffs.items() if c and e != zero_expo}
    regular = all(c == b0 for c in nonzero.values())
    words = tuple(sorted(nonzero)) if regular else ()
    balanced = []
    for j in range(m):
        flags = []
        for a in range(1, levels[j]):
            expo = tuple(a if k == j else 0 for k in range(m))
            flags.append(not coeffs[expo])
        balanced.append(all(flags))
    orthogonal = {}
    for i in range(m):
        for j in range(i + 1, m):
            ok = True
            for a in range(1, levels[i]):
                for b in range(1, levels[j]):
                    expo = tuple(
                        a if k == i else (b if k == j else 0) for k in range(m)
                    )
                    if coeffs[expo]:
                        ok = False
                        break
                if not ok:
                    break
            orthogonal[(i, j)] = ok
    max_order = m
    strength = 0
    for t in range(1, max_order + 1):
        if any(sum(1 for a in e if a) == t for e in nonzero):
            break
        strength = t
    n_design = prod(levels)
    if ind.fraction is not None:
        n_points = len(ind.fraction)
    else:
        scaled = b0 * n_design
        value = scaled.as_rational() if isinstance(scaled, Cyclotomic) else scaled
        n_points = int(value)
    return PropertyReport(
        ratio=b0,
        n_points=n_points,
        n_design=n_design,
        levels=levels,
        regular=regular,
        defining_words=words,
        balanced_factors=tuple(balanced),
        orthogonal_pairs=orthogonal,
        oa_strength=strength,
        variant=ind.variant,
        coeffs=coeffs,
    )


# ---------------------------------------------------------------------------
# mixture separators

def separator_function(fraction: Design, design: Design, order=DEFAULT_ORDER,
                       degree=None) -> SeparatorRep:
    """Separator numerator for a mixture fraction.

    The default degree is the least one where the ambient cone's Hilbert
    function reaches the design size; larger degrees are accepted and the
    numerator is then reduced to normal form against the ambient cone ideal
    to keep the output canonical.
    """
    if not (fraction.mixture and design.mixture):
        raise MixtureViolation("separators are defined for mixture designs")
    _require_subset(fraction, design)
    cone_design = ideal_of_projective_points(design, order)
    smin = min_saturating_degree(cone_design, len(design))
    s = smin if degree is None else int(degree)
    if s < smin:
        raise DegreeTooSmall(f"degree {s} is below the minimum {smin}")
    if len(fraction) == len(design):
        numerator = sum_of_variables(design.factors, design.field) ** s
        return SeparatorRep(numerator, s, cone_design,
                            fraction=fraction, design=design)
    cone_fraction = ideal_of_projective_points(fraction, order)
    cone_complement = ideal_of_projective_points(
        complement(design, fraction), order
    )
    numerator = gb_to_separator_fast_homog(
        cone_fraction, cone_complement, s, cone_ideal=cone_design, order=order
    )
    if s > smin:
        numerator = normal_form(numerator, cone_design)
    if not _verify_indicator_values(numerator, fraction, design):
        raise VerificationFailed("separator numerator failed evaluation")
    return SeparatorRep(numerator, s, cone_design,
                        fraction=fraction, design=design)
