import random
from fractions import Fraction
from math import factorial

import pytest

from designideal.errors import (
    DimensionMismatch,
    FieldMismatch,
    PolynomialSyntaxError,
    UnknownVariable,
)
from designideal.orders import TermOrder
from designideal.polynomials import (
    Polynomial,
    divide,
    parse_polynomial,
    reduce_mod,
    sum_of_variables,
)
from designideal.scalars import QQ, CyclotomicField

VARS = ("x1", "x2")
DEG = TermOrder("degrevlex")


def rand_poly(rng, variables=VARS, field=QQ, max_terms=5, max_expo=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        expo = tuple(rng.randint(0, max_expo) for _ in variables)
        terms[expo] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return Polynomial(variables, field, terms)


def test_ring_axioms_random():
    rng = random.Random(4)
    for _ in range(40):
        f, g, h = (rand_poly(rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f - f == Polynomial.zero(VARS)


def test_leading_term_multiplicative():
    rng = random.Random(9)
    for kind in ("lex", "degrevlex"):
        order = TermOrder(kind)
        for _ in range(60):
            f, g = rand_poly(rng), rand_poly(rng)
            if f.is_zero() or g.is_zero():
                continue
            lf, cf = f.leading_term(order)
            lg, cg = g.leading_term(order)
            lfg, cfg = (f * g).leading_term(order)
            assert lfg == tuple(a + b for a, b in zip(lf, lg))
            assert cfg == cf * cg


def test_division_example_circle():
    f = parse_polynomial("x1^2", VARS)
    d = parse_polynomial("x1^2 + x2^2 - 1", VARS)
    quotients, rem = divide(f, [d], TermOrder("lex"))
    assert quotients[0] == Polynomial.constant(1, VARS)
    assert rem == parse_polynomial("1 - x2^2", VARS)


def test_division_zero_and_single_step():
    zero = Polynomial.zero(VARS)
    _, rem = divide(zero, [parse_polynomial("x1", VARS)], DEG)
    assert rem.is_zero()
    f = parse_polynomial("x1*x2 + x2", VARS)
    _, rem = divide(f, [parse_polynomial("x1*x2", VARS)], DEG)
    assert rem == parse_polynomial("x2", VARS)


def test_division_identity_and_remainder_criterion():
    rng = random.Random(17)
    for _ in range(30):
        f = rand_poly(rng)
        divisors = [p for p in (rand_poly(rng), rand_poly(rng))
                    if not p.is_zero()]
        if not divisors:
            continue
        quotients, rem = divide(f, divisors, DEG)
        total = rem
        for q, d in zip(quotients, divisors):
            total = total + q * d
        assert total == f
        lts = [d.leading_monomial(DEG) for d in divisors]
        for expo in rem.terms:
            assert not any(all(a <= b for a, b in zip(lt, expo)) for lt in lts)
        # reducing the remainder again changes nothing
        assert reduce_mod(rem, divisors, DEG) == rem


def test_division_field_mismatch():
    f = parse_polynomial("x1", VARS)
    g = parse_polynomial("x1", VARS, CyclotomicField(3))
    with pytest.raises(FieldMismatch):
        divide(f, [g], DEG)


def test_parse_examples():
    poly = parse_polynomial("x1^2+x2^2-1", VARS)
    assert poly.terms == {(2, 0): 1, (0, 2): 1, (0, 0): -1}
    assert parse_polynomial("0", VARS).is_zero()


def test_parse_power_of_sum_matches_multinomial_enumeration():
    variables = ("x1", "x2", "x3")
    poly = parse_polynomial("(x1+x2+x3)^3", variables)
    # independent oracle: multinomial coefficients 3!/(a!b!c!)
    expected = {}
    for a in range(4):
        for b in range(4 - a):
            c = 3 - a - b
            expected[(a, b, c)] = Fraction(
                factorial(3), factorial(a) * factorial(b) * factorial(c)
            )
    assert {e: c for e, c in poly.terms.items()} == {
        e: c for e, c in expected.items()
    }
    assert poly.terms[(1, 1, 1)] == 6
    assert poly == sum_of_variables(variables) ** 3


def test_print_parse_roundtrip_random():
    rng = random.Random(23)
    for _ in range(40):
        p = rand_poly(rng)
        assert parse_polynomial(p.to_string(), VARS) == p


def test_print_parse_roundtrip_cyclotomic():
    field = CyclotomicField(3)
    rng = random.Random(29)
    for _ in range(20):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            expo = (rng.randint(0, 2), rng.randint(0, 2))
            coeff = field.zeta(rng.randint(0, 2)) * Fraction(
                rng.randint(-3, 3) or 1, rng.randint(1, 3)
            )
            terms[expo] = coeff
        p = Polynomial(VARS, field, terms)
        assert parse_polynomial(p.to_string(), VARS, field) == p


def test_parse_errors_carry_positions():
    with pytest.raises(PolynomialSyntaxError) as err:
        parse_polynomial("x1 + @", VARS)
    assert err.value.position == 5
    with pytest.raises(UnknownVariable):
        parse_polynomial("x1 + y", VARS)
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x1/(x2+1)", VARS)
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("(x1+x2", VARS)


def test_implicit_multiplication_and_rational_coefficients():
    assert parse_polynomial("2x1", VARS) == parse_polynomial("2*x1", VARS)
    assert parse_polynomial("1/2 x1", VARS) == parse_polynomial("1/2*x1", VARS)
    assert parse_polynomial("-x1^2(x2+1)", VARS) == parse_polynomial(
        "-x1^2*x2 - x1^2", VARS
    )


def test_evaluate():
    poly = parse_polynomial("x1^2*x2 - 1/2", VARS)
    assert poly.evaluate((Fraction(2), Fraction(3))) == Fraction(23, 2)
    with pytest.raises(DimensionMismatch):
        poly.evaluate((1,))


def test_homogeneity_queries():
    assert parse_polynomial("x1^2 + x1*x2", VARS).is_homogeneous()
    assert not parse_polynomial("x1^2 + x2", VARS).is_homogeneous()
    assert parse_polynomial("x1^3", VARS).total_degree() == 3
