import random
from fractions import Fraction

import pytest

from designideal.errors import (
    CyclotomicOrderCap,
    DivisionByZero,
    FieldLiteralError,
    OrderMismatch,
)
from designideal.scalars import (
    QQ,
    Cyclotomic,
    CyclotomicField,
    Rational,
    cyclotomic_poly,
    euler_phi,
    field_from_name,
    format_rational,
    rational,
    rational_from_string,
)


@pytest.mark.parametrize("n, text", [
    (1, "x - 1"),
    (2, "x + 1"),
    (3, "x^2 + x + 1"),
    (4, "x^2 + 1"),
    (6, "x^2 - x + 1"),
    (12, "x^4 - x^2 + 1"),
])
def test_cyclotomic_poly(n, text):
    assert cyclotomic_poly(n).to_string() == text


def test_cyclotomic_poly_is_monic_with_integer_coefficients():
    for n in range(1, 31):
        poly = cyclotomic_poly(n)
        coeffs = list(poly.terms.values())
        assert all(c.denominator == 1 for c in coeffs)
        assert poly.terms[(euler_phi(n),)] == 1


def test_zeta_relations():
    z = Cyclotomic.zeta(3)
    assert z * z * z == 1
    assert z + z * z == -1
    w = Cyclotomic.zeta(4)
    assert (1 + w) / (1 + w) == 1
    assert w * w == -1


def test_powers_distinct_and_order():
    for n in range(1, 13):
        z = Cyclotomic.zeta(n)
        powers = [z ** k for k in range(n)]
        assert len({p.coords for p in powers}) == n
        for p in powers:
            assert p ** n == 1


def test_field_inverses_up_to_order_12():
    rng = random.Random(5)
    for n in range(1, 13):
        deg = euler_phi(n)
        for _ in range(8):
            coords = [rational(rng.randint(-4, 4), rng.randint(1, 4))
                      for _ in range(deg)]
            a = Cyclotomic(n, coords)
            if not a:
                continue
            assert a * a.inverse() == 1
            assert (1 / a) * a == 1


def test_rational_embedding_is_ring_homomorphism():
    rng = random.Random(11)
    for _ in range(40):
        p = rational(rng.randint(-9, 9), rng.randint(1, 9))
        q = rational(rng.randint(-9, 9), rng.randint(1, 9))
        ep = Cyclotomic.from_rational(p, 6)
        eq = Cyclotomic.from_rational(q, 6)
        assert ep + eq == Cyclotomic.from_rational(p + q, 6)
        assert ep * eq == Cyclotomic.from_rational(p * q, 6)


def test_rational_field_axioms_random():
    rng = random.Random(3)
    for _ in range(60):
        a, b, c = (rational(rng.randint(-20, 20), rng.randint(1, 12))
                   for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a


def test_rational_text_forms():
    assert format_rational(rational_from_string("3/6")) == "1/2"
    assert format_rational(rational_from_string("-4")) == "-4"
    assert rational_from_string(" 7/3 ") == Fraction(7, 3)
    with pytest.raises(FieldLiteralError):
        rational_from_string("x")
    with pytest.raises(FieldLiteralError):
        rational_from_string("1/0")
    with pytest.raises(DivisionByZero):
        rational(1, 0)


def test_order_mismatch_and_zero_division():
    a = Cyclotomic.zeta(3)
    b = Cyclotomic.zeta(4)
    with pytest.raises(OrderMismatch):
        a + b
    with pytest.raises(DivisionByZero):
        a / Cyclotomic.from_rational(0, 3)


def test_order_embedding():
    z3 = Cyclotomic.zeta(3)
    z6 = z3.to_order(6)
    assert z6 ** 3 == 1
    assert z6 == Cyclotomic.zeta(6) ** 2
    with pytest.raises(OrderMismatch):
        z3.to_order(4)


def test_order_cap():
    with pytest.raises(CyclotomicOrderCap):
        Cyclotomic.zeta(101)
    with pytest.raises(CyclotomicOrderCap):
        CyclotomicField(200)


def test_field_names_and_parsing():
    assert field_from_name("Q") is QQ or field_from_name("Q") == QQ
    f = field_from_name("Q(w:3)")
    assert f.order == 3
    value = f.parse("1/3 + 2*w^2")
    assert value == Cyclotomic(3, [Fraction(1, 3), 0]) + 2 * f.zeta(2)
    assert f.parse(f.format(value)) == value
    with pytest.raises(FieldLiteralError):
        field_from_name("R")


def test_cyclotomic_equality_against_rationals():
    half = Cyclotomic.from_rational(Fraction(1, 2), 5)
    assert half == Fraction(1, 2)
    assert half.as_rational() == Rational(1, 2)
    assert Cyclotomic.zeta(5).as_rational() is None
