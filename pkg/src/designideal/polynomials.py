"""Sparse multivariate polynomials over exact coefficient fields.

A polynomial is an immutable mapping from exponent tuples to nonzero field
scalars, tagged with its variable list and field. Term order is supplied per
operation, so one value can be viewed under several orderings.
"""

from __future__ import annotations

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    PolynomialSyntaxError,
    UnknownVariable,
)
from .orders import DEFAULT_ORDER
from .scalars import QQ, Cyclotomic, CyclotomicField, Rational

# ---------------------------------------------------------------------------
# exponent-tuple helpers

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


def mono_is_one(a):
    return not any(a)


class Polynomial:
    """Immutable sparse polynomial with exact coefficients."""

    __slots__ = ("variables", "field", "terms")

    def __init__(self, variables, field, terms):
        variables = tuple(variables)
        m = len(variables)
        clean = {}
        for expo, coeff in terms.items():
            expo = tuple(expo)
            if len(expo) != m:
                raise DimensionMismatch(
                    f"exponent {expo} does not match {m} variables"
                )
            if any(e < 0 for e in expo):
                raise ValueError(f"negative exponent in {expo}")
            coeff = field.coerce(coeff)
            if coeff:
                clean[expo] = coeff
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial values are immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables, field=QQ):
        return cls(variables, field, {})

    @classmethod
    def constant(cls, value, variables, field=QQ):
        return cls(variables, field, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name, variables, field=QQ):
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariable(f"unknown variable {name!r}", 0)
        expo = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, field, {expo: 1})

    @classmethod
    def monomial(cls, expo, variables, field=QQ, coeff=1):
        return cls(variables, field, {tuple(expo): coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def constant_value(self):
        """Scalar value of a constant polynomial."""
        if not self.terms:
            return self.field.zero
        one = (0,) * len(self.variables)
        if set(self.terms) != {one}:
            raise ValueError("polynomial is not constant")
        return self.terms[one]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def sorted_terms(self, order=DEFAULT_ORDER):
        key = order.key_function(self.variables)
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)

    def leading_term(self, order=DEFAULT_ORDER):
        """(exponent, coefficient) of the largest term under the order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.key_function(self.variables)
        expo = max(self.terms, key=key)
        return expo, self.terms[expo]

    def leading_monomial(self, order=DEFAULT_ORDER):
        return self.leading_term(order)[0]

    def monic(self, order=DEFAULT_ORDER):
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        if lc == self.field.one:
            return self
        inv = self.field.one / lc
        return Polynomial(
            self.variables, self.field,
            {e: c * inv for e, c in self.terms.items()},
        )

    # -- ring structure ----------------------------------------------------

    def _check_compatible(self, other):
        if self.field != other.field:
            raise FieldMismatch(
                f"fields differ: {self.field.name} vs {other.field.name}"
            )
        if self.variables != other.variables:
            raise DimensionMismatch(
                f"variables differ: {self.variables} vs {other.variables}"
            )

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check_compatible(other)
            return other
        try:
            scalar = self.field.coerce(other)
        except Exception:
            return None
        return Polynomial.constant(scalar, self.variables, self.field)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            acc = terms.get(expo)
            if acc is None:
                terms[expo] = coeff
            else:
                acc = acc + coeff
                if acc:
                    terms[expo] = acc
                else:
                    del terms[expo]
        return self._wrap(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                expo = mono_mul(ea, eb)
                prod = ca * cb
                acc = out.get(expo)
                if acc is None:
                    out[expo] = prod
                else:
                    acc = acc + prod
                    if acc:
                        out[expo] = acc
                    else:
                        del out[expo]
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Polynomial.constant(1, self.variables, self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def _wrap(self, terms):
        poly = Polynomial.__new__(Polynomial)
        object.__setattr__(poly, "variables", self.variables)
        object.__setattr__(poly, "field", self.field)
        object.__setattr__(poly, "terms", terms)
        return poly

    def scale(self, scalar):
        scalar = self.field.coerce(scalar)
        if not scalar:
            return Polynomial.zero(self.variables, self.field)
        return self._wrap({e: c * scalar for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (
                self.variables == other.variables
                and self.field == other.field
                and self.terms == other.terms
            )
        try:
            scalar = self.field.coerce(other)
        except Exception:
            return NotImplemented
        return self == Polynomial.constant(scalar, self.variables, self.field)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- evaluation and ring moves ------------------------------------------

    def evaluate(self, point):
        """Value at a point given as one scalar per variable."""
        if len(point) != len(self.variables):
            raise DimensionMismatch("point length does not match variables")
        coords = [self.field.coerce(c) for c in point]
        total = self.field.zero
        for expo, coeff in self.terms.items():
            value = coeff
            for c, e in zip(coords, expo):
                if e:
                    value = value * c ** e
            total = total + value
        return total

    def embed(self, variables):
        """View this polynomial inside a larger variable list."""
        variables = tuple(variables)
        positions = []
        for name in self.variables:
            if name not in variables:
                raise DimensionMismatch(f"variable {name!r} missing from target")
            positions.append(variables.index(name))
        m = len(variables)
        terms = {}
        for expo, coeff in self.terms.items():
            new = [0] * m
            for pos, e in zip(positions, expo):
                new[pos] = e
            terms[tuple(new)] = coeff
        return Polynomial(variables, self.field, terms)

    def restrict(self, variables):
        """Project onto a sub-list of variables; the others must not occur."""
        variables = tuple(variables)
        keep = [self.variables.index(name) for name in variables]
        drop = [i for i in range(len(self.variables)) if i not in keep]
        terms = {}
        for expo, coeff in self.terms.items():
            if any(expo[i] for i in drop):
                raise ValueError("polynomial involves a dropped variable")
            terms[tuple(expo[i] for i in keep)] = coeff
        return Polynomial(variables, self.field, terms)

    # -- formatting ----------------------------------------------------------

    def _format_monomial(self, expo):
        parts = []
        for name, e in zip(self.variables, expo):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def to_string(self, order=DEFAULT_ORDER):
        if not self.terms:
            return "0"
        pieces = []
        for expo, coeff in self.sorted_terms(order):
            mono = self._format_monomial(expo)
            if isinstance(coeff, Cyclotomic) and coeff.as_rational() is None:
                body = f"({coeff})"
                if mono:
                    body += f"*{mono}"
                sign = "+"
            else:
                value = coeff.as_rational() if isinstance(coeff, Cyclotomic) else coeff
                sign = "-" if value < 0 else "+"
                mag = -value if value < 0 else value
                if not mono:
                    body = str(mag)
                elif mag == 1:
                    body = mono
                else:
                    body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r})"


def sum_of_variables(variables, field=QQ) -> Polynomial:
    """x1 + ... + xm."""
    variables = tuple(variables)
    m = len(variables)
    terms = {tuple(1 if j == i else 0 for j in range(m)): 1 for i in range(m)}
    return Polynomial(variables, field, terms)


# ---------------------------------------------------------------------------
# multivariate division

def divide(f: Polynomial, divisors, order=DEFAULT_ORDER):
    """Divide f by an ordered list of divisors.

    Returns (quotients, remainder) with f = sum(q_i * d_i) + remainder and no
    remainder term divisible by any divisor leading term. At each step the
    largest reducible term is cancelled with the first divisor (in the given
    order) whose leading term divides it, which makes the result
    deterministic.
    """
    divisors = list(divisors)
    if not divisors:
        return [], f
    for d in divisors:
        if d.field != f.field:
            raise FieldMismatch("divisor field differs from dividend field")
        if d.variables != f.variables:
            raise DimensionMismatch("divisor variables differ from dividend")
        if d.is_zero():
            raise DivisionByZero("zero divisor")
    key = order.key_function(f.variables)
    lead = [d.leading_term(order) for d in divisors]
    quotients = [dict() for _ in divisors]
    remainder = {}
    work = dict(f.terms)
    while work:
        expo = max(work, key=key)
        coeff = work.pop(expo)
        for i, (lt, lc) in enumerate(lead):
            if mono_divides(lt, expo):
                shift = mono_div(expo, lt)
                factor = coeff / lc
                q = quotients[i]
                acc = q.get(shift)
                if acc is None:
                    q[shift] = factor
                else:
                    acc = acc + factor
                    if acc:
                        q[shift] = acc
                    else:
                        del q[shift]
                for de, dc in divisors[i].terms.items():
                    if de == lt:
                        continue
                    target = mono_mul(shift, de)
                    delta = factor * dc
                    acc = work.get(target)
                    if acc is None:
                        work[target] = -delta
                    else:
                        acc = acc - delta
                        if acc:
                            work[target] = acc
                        else:
                            del work[target]
                break
        else:
            remainder[expo] = coeff
    wrap = f._wrap
    return [wrap(q) for q in quotients], wrap(remainder)


def reduce_mod(f: Polynomial, divisors, order=DEFAULT_ORDER) -> Polynomial:
    """Remainder of f under division by the divisor list."""
    _, remainder = divide(f, divisors, order)
    return remainder


# ---------------------------------------------------------------------------
# parsing

_TOKEN_OPS = set("+-*/^()")


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        if ch in _TOKEN_OPS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise PolynomialSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens, variables, field):
        self.tokens = tokens
        self.pos = 0
        self.variables = variables
        self.field = field

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect_op(self, char):
        kind, value, pos = self.peek()
        if kind != "op" or value != char:
            raise PolynomialSyntaxError(f"expected {char!r}", pos)
        return self.advance()

    def parse_expression(self):
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value in "+-":
            self.advance()
            negate = value == "-"
        poly = self.parse_product()
        if negate:
            poly = -poly
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.parse_product()
                poly = poly - rhs if value == "-" else poly + rhs
            else:
                return poly

    def parse_product(self):
        poly = self.parse_power()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                poly = poly * self.parse_power()
            elif kind == "op" and value == "/":
                self.advance()
                rhs = self.parse_power()
                try:
                    scalar = rhs.constant_value()
                except ValueError:
                    raise PolynomialSyntaxError("division by a non-constant", pos)
                if not scalar:
                    raise PolynomialSyntaxError("division by zero", pos)
                poly = poly.scale(self.field.one / self.field.coerce(scalar))
            elif kind == "ident" or (kind == "op" and value == "("):
                poly = poly * self.parse_power()
            else:
                return poly

    def parse_power(self):
        poly = self.parse_atom()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "^":
                self.advance()
                kind, value, pos = self.advance()
                if kind != "num":
                    raise PolynomialSyntaxError("exponent must be a number", pos)
                poly = poly ** value
            else:
                return poly

    def parse_atom(self):
        kind, value, pos = self.advance()
        if kind == "num":
            return Polynomial.constant(value, self.variables, self.field)
        if kind == "ident":
            if value not in self.variables:
                raise UnknownVariable(f"unknown variable {value!r}", pos)
            return Polynomial.variable(value, self.variables, self.field)
        if kind == "op" and value == "(":
            poly = self.parse_expression()
            self.expect_op(")")
            return poly
        raise PolynomialSyntaxError("expected a term", pos)


def parse_polynomial(text: str, variables, field=QQ) -> Polynomial:
    """Parse polynomial text over the given variables and field.

    For cyclotomic fields the token ``w`` denotes the field generator and may
    appear anywhere a variable can.
    """
    variables = tuple(variables)
    tokens = _tokenize(text)
    if isinstance(field, CyclotomicField):
        if "w" in variables:
            raise ValueError("variable name 'w' collides with the field generator")
        parser = _Parser(tokens, variables + ("w",), QQ)
        raw = parser.parse_expression()
        kind, _, pos = parser.peek()
        if kind != "end":
            raise PolynomialSyntaxError("trailing input", pos)
        terms = {}
        for expo, coeff in raw.terms.items():
            base, wpow = expo[:-1], expo[-1]
            scalar = field.zeta(wpow).__mul__(coeff) if wpow else field.coerce(coeff)
            acc = terms.get(base)
            terms[base] = scalar if acc is None else acc + scalar
        return Polynomial(variables, field, terms)
    parser = _Parser(tokens, variables, field)
    poly = parser.parse_expression()
    kind, _, pos = parser.peek()
    if kind != "end":
        raise PolynomialSyntaxError("trailing input", pos)
    return poly
