"""Exact scalar arithmetic: arbitrary-precision rationals and cyclotomic numbers.

Rationals are backed by ``gmpy2.mpq`` when available (``fractions.Fraction``
otherwise); both backends keep values normalized with a positive denominator.
Cyclotomic numbers are residues modulo the n-th cyclotomic polynomial with
rational coordinates, so every operation stays exact.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction
from functools import lru_cache

from .errors import (
    CyclotomicOrderCap,
    DivisionByZero,
    FieldLiteralError,
    OrderMismatch,
)

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is normally installed
    Rational = Fraction

#: Largest cyclotomic order accepted for field construction.
MAX_CYCLOTOMIC_ORDER = int(os.environ.get("DESIGNIDEAL_MAX_CYCLO", "64"))

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def rational(numerator=0, denominator=1) -> Rational:
    """Build a normalized rational; denominator must be nonzero."""
    if denominator == 0:
        raise DivisionByZero("rational with zero denominator")
    return Rational(numerator, denominator)


def rational_from_string(text: str) -> Rational:
    """Parse ``p`` or ``p/q`` into a rational."""
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise FieldLiteralError(f"not a rational literal: {text!r}")
    num, den = m.groups()
    if den is None:
        return Rational(int(num))
    if int(den) == 0:
        raise FieldLiteralError(f"zero denominator in literal: {text!r}")
    return Rational(int(num), int(den))


def format_rational(value) -> str:
    """Render a rational as ``p`` or ``p/q``."""
    return str(value)


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _int_poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Long division of integer polynomials; the divisor is monic and the
    # division is exact by construction.
    num = list(num)
    deg_d = len(den) - 1
    out = [0] * (len(num) - deg_d)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i]
        if c:
            out[i - deg_d] = c
            for j, dj in enumerate(den):
                num[i - deg_d + j] -= c * dj
    if any(num[:deg_d]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return (-1, 1)
    coeffs = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        coeffs = _int_poly_exact_div(coeffs, cyclotomic_coefficients(d))
    return tuple(coeffs)


def euler_phi(n: int) -> int:
    """Degree of the n-th cyclotomic polynomial."""
    return len(cyclotomic_coefficients(n)) - 1


def cyclotomic_poly(n: int, variable: str = "x"):
    """The n-th cyclotomic polynomial as a univariate :class:`Polynomial`."""
    from .polynomials import Polynomial

    coeffs = cyclotomic_coefficients(n)
    terms = {(k,): Rational(c) for k, c in enumerate(coeffs) if c}
    return Polynomial((variable,), QQ, terms)


# ---------------------------------------------------------------------------
# univariate helpers over the rationals (dense, ascending coefficients)

def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_rem(p: list, mod: tuple[int, ...]) -> list:
    # Remainder of p modulo a monic integer polynomial.
    p = list(p)
    deg_m = len(mod) - 1
    for i in range(len(p) - 1, deg_m - 1, -1):
        c = p[i]
        if c:
            for j in range(deg_m):
                p[i - deg_m + j] -= c * mod[j]
            p[i] = Rational(0)
    del p[deg_m:]
    return p


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Rational(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    b = _trim(list(b))
    if not b:
        raise DivisionByZero("polynomial division by zero")
    deg_b = len(b) - 1
    lead = b[-1]
    q = [Rational(0)] * max(len(a) - deg_b, 0)
    for i in range(len(a) - 1, deg_b - 1, -1):
        c = a[i]
        if c:
            c = c / lead
            q[i - deg_b] = c
            for j, bj in enumerate(b):
                a[i - deg_b + j] -= c * bj
    return q, _trim(a[:deg_b])


def _poly_xgcd(a: list, b: list) -> tuple[list, list]:
    # Returns (g, u) with u*a = g modulo b and g a gcd of a and b.
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0, s1 = [Rational(1)], []
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s_next = _trim([x - y for x, y in _pad(s0, _poly_mul(q, s1))])
        s0, s1 = s1, s_next
    return r0, s0


def _pad(a: list, b: list):
    n = max(len(a), len(b))
    zero = Rational(0)
    a = a + [zero] * (n - len(a))
    b = b + [zero] * (n - len(b))
    return zip(a, b)


class Cyclotomic:
    """Element of Q(zeta_n): rational coordinates modulo the n-th cyclotomic
    polynomial. Instances are immutable and canonical, so equality is a
    coordinate comparison."""

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords):
        if order < 1:
            raise ValueError("order must be positive")
        if order > MAX_CYCLOTOMIC_ORDER:
            raise CyclotomicOrderCap(
                f"cyclotomic order {order} exceeds cap {MAX_CYCLOTOMIC_ORDER}"
            )
        degree = euler_phi(order)
        coords = [Rational(c) if not isinstance(c, type(Rational(0))) else c
                  for c in coords]
        if len(coords) > degree:
            coords = _poly_rem(coords, cyclotomic_coefficients(order))
        coords.extend([Rational(0)] * (degree - len(coords)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coords", tuple(coords))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, value, order: int) -> "Cyclotomic":
        return cls(order, [Rational(value)])

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclotomic":
        power %= order
        return cls(order, [Rational(0)] * power + [Rational(1)])

    # -- coercion ----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise OrderMismatch(
                    f"orders differ: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(Rational(0)):
            return Cyclotomic.from_rational(other, self.order)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-a for a in self.coords])

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.order, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        prod = _poly_mul(list(self.coords), list(other.coords))
        return Cyclotomic(self.order, _poly_rem(prod, cyclotomic_coefficients(self.order)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise DivisionByZero("inverse of zero cyclotomic")
        phi = [Rational(c) for c in cyclotomic_coefficients(self.order)]
        g, u = _poly_xgcd(list(self.coords), phi)
        # g is a nonzero constant because the modulus is irreducible
        inv_g = Rational(1) / g[0]
        return Cyclotomic(self.order, [c * inv_g for c in u])

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.from_rational(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- predicates --------------------------------------------------------

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coords == other.coords
        if isinstance(other, (int, Fraction)) or type(other) is type(Rational(0)):
            r = self.as_rational()
            return r is not None and r == other
        return NotImplemented

    def __hash__(self):
        r = self.as_rational()
        if r is not None:
            return hash(r)
        return hash((self.order, self.coords))

    def as_rational(self):
        """The value as a plain rational, or None if it has a zeta part."""
        if any(self.coords[1:]):
            return None
        return self.coords[0]

    def to_order(self, order: int) -> "Cyclotomic":
        """Embed into Q(zeta_m) for a multiple m of the current order."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise OrderMismatch(f"{self.order} does not divide {order}")
        step = order // self.order
        result = Cyclotomic.from_rational(0, order)
        z = Cyclotomic.zeta(order, step)
        for k, c in enumerate(self.coords):
            if c:
                result = result + Cyclotomic.from_rational(c, order) * z ** k
        return result

    # -- formatting --------------------------------------------------------

    def __str__(self):
        terms = []
        for k in range(len(self.coords) - 1, -1, -1):
            c = self.coords[k]
            if not c:
                continue
            if k == 0:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = "w" if k == 1 else f"w^{k}"
            else:
                body = f"{format_rational(abs(c))}*" + ("w" if k == 1 else f"w^{k}")
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append((" + " if c > 0 else " - ") + body)
        return "".join(terms) if terms else "0"

    def __repr__(self):
        return f"Cyclotomic({self.order}, {self})"


# ---------------------------------------------------------------------------
# coefficient fields

class RationalField:
    """The field of exact rationals; a stateless singleton."""

    name = "Q"

    def coerce(self, value):
        if type(value) is type(Rational(0)):
            return value
        if isinstance(value, (int, Fraction)):
            return Rational(value)
        if isinstance(value, Cyclotomic):
            r = value.as_rational()
            if r is not None:
                return r
        raise FieldLiteralError(f"cannot coerce {value!r} into Q")

    @property
    def zero(self):
        return Rational(0)

    @property
    def one(self):
        return Rational(1)

    def format(self, value) -> str:
        return format_rational(value)

    def parse(self, text: str):
        return rational_from_string(text)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class CyclotomicField:
    """The field Q(zeta_n), with zeta rendered as the token ``w``."""

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("order must be positive")
        if order > MAX_CYCLOTOMIC_ORDER:
            raise CyclotomicOrderCap(
                f"cyclotomic order {order} exceeds cap {MAX_CYCLOTOMIC_ORDER}"
            )
        self.order = order
        self.degree = euler_phi(order)

    @property
    def name(self) -> str:
        return f"Q(w:{self.order})"

    def zeta(self, power: int = 1) -> Cyclotomic:
        return Cyclotomic.zeta(self.order, power)

    def coerce(self, value):
        if isinstance(value, Cyclotomic):
            if value.order == self.order:
                return value
            if self.order % value.order == 0:
                return value.to_order(self.order)
            r = value.as_rational()
            if r is not None:
                return Cyclotomic.from_rational(r, self.order)
            raise OrderMismatch(
                f"cannot coerce order {value.order} into {self.name}"
            )
        if isinstance(value, (int, Fraction)) or type(value) is type(Rational(0)):
            return Cyclotomic.from_rational(value, self.order)
        raise FieldLiteralError(f"cannot coerce {value!r} into {self.name}")

    @property
    def zero(self):
        return Cyclotomic.from_rational(0, self.order)

    @property
    def one(self):
        return Cyclotomic.from_rational(1, self.order)

    def format(self, value) -> str:
        return str(self.coerce(value))

    def parse(self, text: str):
        from .polynomials import parse_polynomial

        poly = parse_polynomial(text, (), self)
        return poly.constant_value()

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("Qw", self.order))

    def __repr__(self):
        return f"CyclotomicField({self.order})"


QQ = RationalField()

_FIELD_RE = re.compile(r"^Q\(w:(\d+)\)$")


def field_from_name(name: str):
    """Resolve ``Q`` or ``Q(w:n)`` into a field object."""
    name = name.strip()
    if name == "Q":
        return QQ
    m = _FIELD_RE.match(name)
    if m:
        return CyclotomicField(int(m.group(1)))
    raise FieldLiteralError(f"unknown field: {name!r}")
