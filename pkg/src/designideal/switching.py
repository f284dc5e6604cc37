"""Conversion between the Groebner and the indicator/separator
representations of a fraction.

Two directions are provided. Indicator-to-basis adjoins (indicator - 1) to
the ambient design generators and runs Buchberger. Basis-to-indicator comes
in a naive eliminated form used as an oracle, and in a fast form that solves
one square exact linear system whose unknowns are the coefficients of basis
elements of the quotient by the complement ideal.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import (
    DegreeTooSmall,
    LemmaViolated,
    NoUniquePolynomial,
    NotHomogeneous,
    SingularMatrix,
    SingularSystem,
    VerificationFailed,
)
from .groebner import (
    IdealRep,
    buchberger,
    graded_standard_monomials,
    normal_form,
    saturate,
    standard_monomials,
)
from .orders import DEFAULT_ORDER, BlockOrder
from .polynomials import Polynomial, mono_div, mono_divides, sum_of_variables


@dataclass
class FastSwitchSystem:
    """The square linear system behind the fast switch.

    One unknown per monomial in the difference of standard-monomial sets;
    one equation per standard monomial of the complement ideal."""

    difference_monomials: tuple
    basis_polys: tuple
    complement_monomials: tuple
    matrix: list
    rhs: list
    solution: list


def _as_monomial_set(est):
    if hasattr(est, "monomials"):
        return tuple(est.monomials)
    return tuple(tuple(e) for e in est)


def _basis_polys(difference, fraction_gb: IdealRep, order):
    # Divisor choice: first match scanning the reduced basis from the
    # largest leading term down. Any choice yields a valid system; this one
    # reproduces the reference outputs.
    gb = fraction_gb.reduced_gb
    lts = [g.leading_monomial(order) for g in gb]
    polys = []
    for expo in difference:
        for g, lt in zip(reversed(gb), reversed(lts)):
            if mono_divides(lt, expo):
                shift = mono_div(expo, lt)
                polys.append(
                    Polynomial.monomial(shift, g.variables, g.field) * g
                )
                break
        else:
            raise LemmaViolated(
                f"no fraction leading term divides {expo}; inputs inconsistent"
            )
    return polys


def build_fast_system(fraction_gb: IdealRep, complement_gb: IdealRep,
                      est_design, target: Polynomial, order=None,
                      graded_degree=None) -> FastSwitchSystem:
    """Assemble and solve the linear system expressing the class of the
    target polynomial over the quotient by the complement ideal."""
    if order is None:
        order = fraction_gb.order
    est_design = _as_monomial_set(est_design)
    if graded_degree is None:
        est_fraction = _as_monomial_set(standard_monomials(fraction_gb))
        est_complement = _as_monomial_set(standard_monomials(complement_gb))
    else:
        est_fraction = _as_monomial_set(
            graded_standard_monomials(fraction_gb, graded_degree)
        )
        est_complement = _as_monomial_set(
            graded_standard_monomials(complement_gb, graded_degree)
        )
    design_set = set(est_design)
    if not set(est_fraction) <= design_set:
        raise LemmaViolated(
            "fraction standard monomials are not contained in the design's"
        )
    fraction_set = set(est_fraction)
    difference = tuple(e for e in est_design if e not in fraction_set)
    if len(difference) != len(est_complement):
        raise SingularSystem(
            f"system is {len(est_complement)}x{len(difference)}, not square; "
            "the complement basis does not match the fraction"
        )
    basis = _basis_polys(difference, fraction_gb, order)
    reduced = [normal_form(b, complement_gb) for b in basis]
    reduced_target = normal_form(target, complement_gb)
    matrix = [[nf.terms.get(mu, target.field.zero) for nf in reduced]
              for mu in est_complement]
    rhs = [reduced_target.terms.get(mu, target.field.zero)
           for mu in est_complement]
    try:
        solution = linalg.solve_unique(matrix, rhs, target.field.one)
    except SingularMatrix as exc:
        raise SingularSystem(
            "switch system is singular; the complement basis is not the "
            "true complement ideal"
        ) from exc
    return FastSwitchSystem(
        difference_monomials=difference,
        basis_polys=tuple(basis),
        complement_monomials=est_complement,
        matrix=matrix,
        rhs=rhs,
        solution=solution,
    )


def indicator_to_gb(design_gens, indicator: Polynomial,
                    order=DEFAULT_ORDER) -> IdealRep:
    """Reduced basis of the fraction ideal from the ambient generators and
    the fraction's indicator polynomial."""
    gens = list(design_gens) + [indicator - 1]
    return buchberger(gens, order)


def gb_to_indicator_fast(fraction_gb: IdealRep, complement_gb: IdealRep,
                         design_ideal: IdealRep, order=None,
                         est_design=None, reduce=True) -> Polynomial:
    """Indicator polynomial of the fraction via one exact linear solve.

    With ``reduce`` the result is the canonical normal form against the
    ambient design ideal; without it, the solved combination of basis
    elements is returned as built. Either way the output is double-checked
    by membership: it must lie in the complement ideal while its
    co-indicator lies in the fraction ideal.
    """
    if order is None:
        order = design_ideal.order
    if est_design is None:
        est_design = standard_monomials(design_ideal)
    target = Polynomial.constant(1, design_ideal.variables, design_ideal.field)
    system = build_fast_system(fraction_gb, complement_gb, est_design, target,
                               order=order)
    f = target
    for a, b in zip(system.solution, system.basis_polys):
        if a:
            f = f - b.scale(a)
    if reduce:
        f = normal_form(f, design_ideal)
    if not normal_form(f, complement_gb).is_zero():
        raise VerificationFailed("indicator does not vanish off the fraction")
    if not normal_form(1 - f, fraction_gb).is_zero():
        raise VerificationFailed("indicator is not 1 on the fraction")
    return f


def gb_to_separator_fast_homog(fraction_gb: IdealRep, complement_gb: IdealRep,
                               degree: int, cone_ideal: IdealRep = None,
                               est_design=None, order=None) -> Polynomial:
    """Homogeneous separator numerator of the given degree via the same
    linear solve, with the power of the coordinate sum as the target."""
    if order is None:
        order = fraction_gb.order
    if est_design is None:
        if cone_ideal is None:
            raise ValueError("need either the ambient cone ideal or its "
                             "graded standard monomials")
        est_design = graded_standard_monomials(cone_ideal, degree)
    est_design = _as_monomial_set(est_design)
    if any(sum(e) != degree for e in est_design):
        raise DegreeTooSmall(
            f"ambient standard monomials are not all of degree {degree}"
        )
    sample = fraction_gb.reduced_gb[0]
    if not all(g.is_homogeneous() for g in fraction_gb.reduced_gb):
        raise NotHomogeneous("fraction ideal is not homogeneous")
    if not all(g.is_homogeneous() for g in complement_gb.reduced_gb):
        raise NotHomogeneous("complement ideal is not homogeneous")
    target = sum_of_variables(sample.variables, sample.field) ** degree
    system = build_fast_system(fraction_gb, complement_gb, est_design, target,
                               order=order, graded_degree=degree)
    f = target
    for a, b in zip(system.solution, system.basis_polys):
        if a:
            f = f - b.scale(a)
    if not normal_form(f, complement_gb).is_zero():
        raise VerificationFailed("separator does not vanish off the fraction")
    if not normal_form(target - f, fraction_gb).is_zero():
        raise VerificationFailed("separator does not match the target on "
                                 "the fraction cone")
    return f


def gb_to_indicator_naive(design_gens, fraction_gb, order=DEFAULT_ORDER,
                          design_ideal: IdealRep = None) -> Polynomial:
    """Reference construction of the indicator by variable elimination.

    For each basis element g of the fraction ideal, an auxiliary ring with
    two extra variables is used to interpolate the 0/1 indicator of the
    subset of the design where g vanishes; the product of those pieces,
    reduced against the design ideal, is the indicator of the fraction.
    """
    design_gens = list(design_gens)
    if design_ideal is None:
        design_ideal = buchberger(design_gens, order)
    if hasattr(fraction_gb, "reduced_gb"):
        fraction_polys = list(fraction_gb.reduced_gb)
    else:
        fraction_polys = list(fraction_gb)
    variables = design_ideal.variables
    field = design_ideal.field
    h, f = "_h", "_f"
    while h in variables or f in variables:
        h, f = "_" + h, "_" + f
    big = (h, f) + variables
    block = BlockOrder(((h,), (f,)))
    f_lead = tuple(1 if name == f else 0 for name in big)
    result = Polynomial.constant(1, variables, field)
    for g in fraction_polys:
        hpoly = Polynomial.variable(h, big, field)
        fpoly = Polynomial.variable(f, big, field)
        gens = [d.embed(big) for d in design_gens]
        gens.append((1 - fpoly) - hpoly * g.embed(big))
        gens.append(fpoly * g.embed(big))
        gb = buchberger(gens, block).reduced_gb
        matches = [p for p in gb if p.leading_monomial(block) == f_lead]
        if len(matches) != 1:
            raise NoUniquePolynomial(
                "elimination did not produce a unique interpolating polynomial"
            )
        piece = (fpoly - matches[0]).restrict(variables)
        result = result * piece
    return normal_form(result, design_ideal)


def separator_to_cone_gb(cone_design_gens, numerator: Polynomial,
                         degree: int, order=DEFAULT_ORDER) -> IdealRep:
    """Reduced basis of the saturation of the cone ideal extended by the
    separator relation."""
    if not numerator.is_homogeneous() or numerator.total_degree() != degree:
        raise NotHomogeneous(
            f"separator numerator must be homogeneous of degree {degree}"
        )
    gens = list(cone_design_gens)
    if not all(g.is_homogeneous() for g in gens):
        raise NotHomogeneous("cone generators must be homogeneous")
    target = sum_of_variables(numerator.variables, numerator.field) ** degree
    gens.append(numerator - target)
    extended = IdealRep(tuple(gens), order)
    return saturate(extended, order=order)
