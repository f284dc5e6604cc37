"""Exact polynomial representations of experimental designs.

Computes and converts between the two generating-set descriptions of a
design ideal: reduced Groebner bases and indicator/separator polynomials,
for ordinary fractions and for mixture designs, with exact rational and
cyclotomic arithmetic throughout.
"""

from .designs import (
    Design,
    canonical_generators,
    code_roots_of_unity,
    complement,
    full_factorial,
    ideal_of_points,
    ideal_of_projective_points,
    is_subdesign,
    simplex_centroid,
    simplex_lattice,
    validate,
)
from .groebner import (
    IdealRep,
    StandardMonomialSet,
    buchberger,
    eliminate,
    graded_standard_monomials,
    hilbert_function,
    intersect,
    is_groebner_basis,
    member,
    min_saturating_degree,
    normal_form,
    same_ideal,
    saturate,
    standard_monomials,
)
from .indicators import (
    IndicatorRep,
    PropertyReport,
    SeparatorRep,
    analyze,
    complex_coeffs,
    indicator_fast,
    indicator_from_points,
    indicator_naive,
    separator_function,
    term_orthogonal,
)
from .orders import BlockOrder, TermOrder
from .polynomials import Polynomial, divide, parse_polynomial, reduce_mod, sum_of_variables
from .scalars import (
    Cyclotomic,
    CyclotomicField,
    QQ,
    Rational,
    cyclotomic_poly,
    field_from_name,
    rational,
)
from .switching import (
    FastSwitchSystem,
    build_fast_system,
    gb_to_indicator_fast,
    gb_to_indicator_naive,
    gb_to_separator_fast_homog,
    indicator_to_gb,
    separator_to_cone_gb,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
