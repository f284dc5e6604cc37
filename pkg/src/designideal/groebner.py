"""Buchberger's algorithm, reduced bases, normal forms, standard monomials,
Hilbert functions, elimination and saturation.

All computations are exact over the polynomial's coefficient field. Reduced
Groebner bases are kept sorted by ascending leading term, which makes every
result deterministic and unique for a given (ideal, order) pair.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import (
    DegreeUnreachable,
    DimensionMismatch,
    FieldMismatch,
    MissingGB,
    NotHomogeneous,
    NotZeroDimensional,
)
from .orders import DEFAULT_ORDER, BlockOrder, TermOrder
from .polynomials import (
    Polynomial,
    divide,
    mono_div,
    mono_divides,
    mono_is_one,
    mono_lcm,
    mono_mul,
    reduce_mod,
)


class IdealRep:
    """A polynomial ideal: generators, a term order, and optionally the
    reduced Groebner basis for that order."""

    __slots__ = ("generators", "order", "reduced_gb", "variables", "field")

    def __init__(self, generators, order=DEFAULT_ORDER, reduced_gb=None,
                 variables=None, field=None):
        generators = tuple(generators)
        reduced = None if reduced_gb is None else tuple(reduced_gb)
        sample = next(iter(generators or reduced or ()), None)
        if sample is not None:
            variables = sample.variables
            field = sample.field
            for g in (generators or ()) + (reduced or ()):
                if g.variables != variables:
                    raise DimensionMismatch("generators use different variables")
                if g.field != field:
                    raise FieldMismatch("generators use different fields")
        elif variables is None or field is None:
            raise ValueError("empty ideal needs explicit variables and field")
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "reduced_gb", reduced)
        object.__setattr__(self, "variables", tuple(variables))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("IdealRep values are immutable")

    @property
    def homogeneous(self) -> bool:
        basis = self.reduced_gb if self.reduced_gb is not None else self.generators
        return all(g.is_homogeneous() for g in basis)

    def leading_monomials(self):
        if self.reduced_gb is None:
            raise MissingGB("reduced Groebner basis not computed")
        return tuple(g.leading_monomial(self.order) for g in self.reduced_gb)

    def __repr__(self):
        gb = "?" if self.reduced_gb is None else len(self.reduced_gb)
        return (f"IdealRep({len(self.generators)} generators, "
                f"gb={gb}, vars={self.variables})")


class StandardMonomialSet:
    """Monomials outside the leading-term ideal, sorted ascending."""

    __slots__ = ("monomials", "variables", "order", "graded_degree")

    def __init__(self, monomials, variables, order, graded_degree=None):
        object.__setattr__(self, "monomials", tuple(monomials))
        object.__setattr__(self, "variables", tuple(variables))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "graded_degree", graded_degree)

    def __setattr__(self, name, value):
        raise AttributeError("StandardMonomialSet values are immutable")

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def as_polynomials(self, field):
        return tuple(
            Polynomial.monomial(e, self.variables, field) for e in self.monomials
        )

    def __repr__(self):
        names = [Polynomial.monomial(e, self.variables)._format_monomial(e) or "1"
                 for e in self.monomials]
        return "{" + ", ".join(names) + "}"


def spolynomial(f: Polynomial, g: Polynomial, order=DEFAULT_ORDER) -> Polynomial:
    """The S-polynomial of f and g."""
    lt_f, lc_f = f.leading_term(order)
    lt_g, lc_g = g.leading_term(order)
    lcm = mono_lcm(lt_f, lt_g)
    one = f.field.one
    mf = Polynomial.monomial(mono_div(lcm, lt_f), f.variables, f.field, one / lc_f)
    mg = Polynomial.monomial(mono_div(lcm, lt_g), f.variables, f.field, one / lc_g)
    return mf * f - mg * g


def _interreduce(polys, order):
    keyf = None
    result = []
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    keyf = order.key_function(polys[0].variables)
    polys = sorted(polys, key=lambda p: keyf(p.leading_monomial(order)))
    kept = []
    for p in polys:
        lt = p.leading_monomial(order)
        if not any(mono_divides(q.leading_monomial(order), lt) for q in kept):
            kept.append(p)
    for i, p in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        r = reduce_mod(p, others, order) if others else p
        kept[i] = r.monic(order)
    kept.sort(key=lambda p: keyf(p.leading_monomial(order)))
    return kept


def buchberger(generators, order=DEFAULT_ORDER) -> IdealRep:
    """Reduced Groebner basis from any generating set.

    Pairs are handled smallest-lcm first; the coprime and chain criteria
    prune useless reductions. The final basis is interreduced, monic, and
    sorted by ascending leading term, so it is the unique reduced basis of
    the ideal for the given order.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValueError("Groebner basis of the zero ideal is not defined here")
    variables = gens[0].variables
    keyf = order.key_function(variables)
    basis = []
    for g in sorted(gens, key=lambda p: keyf(p.leading_monomial(order))):
        r = reduce_mod(g, basis, order) if basis else g
        if not r.is_zero():
            basis.append(r.monic(order))
    lts = [g.leading_monomial(order) for g in basis]
    pairs = {}
    for i, j in combinations(range(len(basis)), 2):
        pairs[(i, j)] = mono_lcm(lts[i], lts[j])
    while pairs:
        (i, j) = min(pairs, key=lambda ij: keyf(pairs[ij]))
        lcm_ij = pairs.pop((i, j))
        if lcm_ij == mono_mul(lts[i], lts[j]):
            continue  # coprime leading terms
        chained = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if (mono_divides(lts[k], lcm_ij)
                    and (min(i, k), max(i, k)) not in pairs
                    and (min(j, k), max(j, k)) not in pairs):
                chained = True
                break
        if chained:
            continue
        rem = reduce_mod(spolynomial(basis[i], basis[j], order), basis, order)
        if rem.is_zero():
            continue
        rem = rem.monic(order)
        t = len(basis)
        basis.append(rem)
        lts.append(rem.leading_monomial(order))
        for k in range(t):
            pairs[(k, t)] = mono_lcm(lts[k], lts[t])
    reduced = _interreduce(basis, order)
    return IdealRep(tuple(generators), order, reduced_gb=tuple(reduced))


def is_groebner_basis(polys, order=DEFAULT_ORDER) -> bool:
    """Full S-pair check without pruning; used as an independent oracle."""
    polys = [p for p in polys if not p.is_zero()]
    for f, g in combinations(polys, 2):
        if not reduce_mod(spolynomial(f, g, order), polys, order).is_zero():
            return False
    return True


def normal_form(f: Polynomial, ideal: IdealRep) -> Polynomial:
    """Unique remainder of f modulo the ideal's reduced basis."""
    if ideal.reduced_gb is None:
        raise MissingGB("normal form needs a reduced Groebner basis")
    if not ideal.reduced_gb:
        return f
    return reduce_mod(f, ideal.reduced_gb, ideal.order)


def member(f: Polynomial, ideal: IdealRep) -> bool:
    return normal_form(f, ideal).is_zero()


def same_ideal(a: IdealRep, b: IdealRep) -> bool:
    """Mutual membership of generators (both need reduced bases)."""
    return all(member(g, b) for g in a.reduced_gb) and all(
        member(g, a) for g in b.reduced_gb
    )


# ---------------------------------------------------------------------------
# standard monomials and Hilbert data

def standard_monomials(ideal: IdealRep) -> StandardMonomialSet:
    """All monomials outside the leading-term ideal (zero-dimensional case)."""
    lts = ideal.leading_monomials()
    m = len(ideal.variables)
    if any(mono_is_one(lt) for lt in lts):
        return StandardMonomialSet((), ideal.variables, ideal.order)
    bounds = []
    for i in range(m):
        power = None
        for lt in lts:
            if lt[i] and all(e == 0 for k, e in enumerate(lt) if k != i):
                power = lt[i] if power is None else min(power, lt[i])
        if power is None:
            raise NotZeroDimensional(
                f"no pure power of {ideal.variables[i]} among leading terms"
            )
        bounds.append(power)
    keyf = ideal.order.key_function(ideal.variables)
    found = []
    expo = [0] * m
    while True:
        candidate = tuple(expo)
        if not any(mono_divides(lt, candidate) for lt in lts):
            found.append(candidate)
        k = m - 1
        while k >= 0:
            expo[k] += 1
            if expo[k] < bounds[k]:
                break
            expo[k] = 0
            k -= 1
        if k < 0:
            break
    found.sort(key=keyf)
    return StandardMonomialSet(found, ideal.variables, ideal.order)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def graded_standard_monomials(ideal: IdealRep, degree: int) -> StandardMonomialSet:
    """Degree-s monomials outside the leading-term ideal of a homogeneous
    ideal."""
    lts = ideal.leading_monomials()
    if not ideal.homogeneous:
        raise NotHomogeneous("graded standard monomials need a homogeneous ideal")
    keyf = ideal.order.key_function(ideal.variables)
    found = [
        expo for expo in _compositions(degree, len(ideal.variables))
        if not any(mono_divides(lt, expo) for lt in lts)
    ]
    found.sort(key=keyf)
    return StandardMonomialSet(found, ideal.variables, ideal.order,
                               graded_degree=degree)


def hilbert_function(ideal: IdealRep, degree: int) -> int:
    """Vector-space dimension of the degree-t slice of the quotient ring."""
    return len(graded_standard_monomials(ideal, degree))


def min_saturating_degree(ideal: IdealRep, n_points: int, cap=None) -> int:
    """Least degree where the Hilbert function reaches the point count."""
    if cap is None:
        cap = max(8, 2 * n_points)
    for t in range(1, cap + 1):
        if hilbert_function(ideal, t) == n_points:
            return t
    raise DegreeUnreachable(
        f"Hilbert function never reaches {n_points} up to degree {cap}"
    )


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals (exact, combinatorial)

def minimalize_monomials(lts):
    """Minimal generators of the monomial ideal spanned by the input."""
    lts = sorted(set(tuple(t) for t in lts), key=lambda t: (sum(t), t))
    kept = []
    for t in lts:
        if not any(mono_divides(k, t) for k in kept):
            kept.append(t)
    return kept


def _numerator_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _numerator_add(a, b, shift=0):
    out = list(a) + [0] * max(0, shift + len(b) - len(a))
    for j, bj in enumerate(b):
        out[shift + j] += bj
    return out


def monomial_hilbert_numerator(lts, nvars) -> list:
    """Coefficients of N(z) with HS(R/J) = N(z)/(1-z)^m for a monomial
    ideal J; exact integer output."""
    lts = minimalize_monomials(lts)
    if not lts:
        return [1]
    if any(mono_is_one(t) for t in lts):
        return [0]
    mixed = [t for t in lts if sum(1 for e in t if e) > 1]
    if not mixed:
        result = [1]
        for t in lts:
            d = sum(t)
            factor = [1] + [0] * (d - 1) + [-1]
            result = _numerator_mul(result, factor)
        return result
    counts = [0] * nvars
    for t in mixed:
        for i, e in enumerate(t):
            if e:
                counts[i] += 1
    pivot = counts.index(max(counts))
    # J = (J + <x_i>) plus z * (J : x_i)
    plus = [t for t in lts if not t[pivot]]
    plus.append(tuple(1 if k == pivot else 0 for k in range(nvars)))
    colon = [tuple(e - 1 if k == pivot and e else e for k, e in enumerate(t))
             for t in lts]
    n_plus = monomial_hilbert_numerator(plus, nvars)
    n_colon = monomial_hilbert_numerator(colon, nvars)
    return _numerator_add(n_plus, n_colon, shift=1)


def monomial_quotient_hf(numerator, nvars, degree) -> int:
    """Hilbert function of R/J at one degree given the series numerator."""
    total = 0
    for k, c in enumerate(numerator):
        if c and degree - k >= 0:
            total += c * comb(degree - k + nvars - 1, nvars - 1)
    return total


# ---------------------------------------------------------------------------
# elimination, intersection, saturation

def _fresh_name(base, taken):
    name = base
    while name in taken:
        name = "_" + name
    return name


def eliminate(ideal: IdealRep, drop, order=None) -> IdealRep:
    """Generators of the ideal's intersection with the subring on the kept
    variables, via a block order ranking the dropped variables highest."""
    drop = tuple(drop)
    for name in drop:
        if name not in ideal.variables:
            raise ValueError(f"unknown variable {name!r}")
    if order is None:
        order = ideal.order if isinstance(ideal.order, TermOrder) else DEFAULT_ORDER
    if not drop:
        if ideal.reduced_gb is not None and ideal.order == order:
            return ideal
        return buchberger(ideal.generators, order)
    kept = tuple(v for v in ideal.variables if v not in drop)
    block = BlockOrder((drop,))
    gb = buchberger(ideal.generators, block).reduced_gb
    dropped_idx = [ideal.variables.index(v) for v in drop]
    projected = []
    for g in gb:
        if all(all(expo[i] == 0 for i in dropped_idx) for expo in g.terms):
            projected.append(g.restrict(kept))
    if not projected:
        return IdealRep((), order, reduced_gb=(),
                        variables=kept, field=ideal.field)
    if order == DEFAULT_ORDER:
        # the block order restricts to default degrevlex on the kept block
        return IdealRep(tuple(projected), order, reduced_gb=tuple(projected))
    return buchberger(projected, order)


def intersect(a: IdealRep, b: IdealRep, order=None) -> IdealRep:
    """Ideal intersection via the auxiliary-variable product construction."""
    if a.variables != b.variables or a.field != b.field:
        raise FieldMismatch("intersection needs matching rings")
    if order is None:
        order = a.order if isinstance(a.order, TermOrder) else DEFAULT_ORDER
    t = _fresh_name("_t", a.variables)
    big = (t,) + a.variables
    tpoly = Polynomial.variable(t, big, a.field)
    gens = [tpoly * g.embed(big) for g in a.generators]
    gens += [(1 - tpoly) * g.embed(big) for g in b.generators]
    joined = IdealRep(tuple(gens), DEFAULT_ORDER)
    return eliminate(joined, (t,), order=order)


def saturate_variable(ideal: IdealRep, name: str, order=None) -> IdealRep:
    """Saturation with respect to one variable, by inverting it with an
    auxiliary variable and eliminating."""
    if order is None:
        order = ideal.order if isinstance(ideal.order, TermOrder) else DEFAULT_ORDER
    y = _fresh_name("_y", ideal.variables)
    big = (y,) + ideal.variables
    ypoly = Polynomial.variable(y, big, ideal.field)
    xpoly = Polynomial.variable(name, big, ideal.field)
    gens = [g.embed(big) for g in ideal.generators]
    gens.append(1 - ypoly * xpoly)
    joined = IdealRep(tuple(gens), DEFAULT_ORDER)
    return eliminate(joined, (y,), order=order)


def saturate(ideal: IdealRep, order=None) -> IdealRep:
    """Saturation of a homogeneous ideal with respect to the irrelevant
    ideal: the intersection of the single-variable saturations."""
    if not all(g.is_homogeneous() for g in ideal.generators):
        raise NotHomogeneous("saturation expects homogeneous generators")
    if order is None:
        order = ideal.order if isinstance(ideal.order, TermOrder) else DEFAULT_ORDER
    result = None
    for name in ideal.variables:
        part = saturate_variable(ideal, name, order=order)
        result = part if result is None else intersect(result, part, order=order)
    return result
