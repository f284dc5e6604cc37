"""Design data model, standard design generators, level codings, and the
computation of vanishing ideals of points.

Point ideals are computed by incremental exact elimination of evaluation
vectors: monomials are scanned in ascending term order, each one either
joins the standard-monomial basis or yields a reduced-basis element. The
projective variant works degree by degree on cone representatives and stops
once a Hilbert-series certificate shows the leading-term ideal is complete.
"""

from __future__ import annotations

import heapq
from itertools import combinations, product
from math import lcm

from . import linalg
from .errors import (
    CodingViolation,
    DimensionMismatch,
    DuplicatePoint,
    EmptyLevelSet,
    FieldMismatch,
    LevelIndexError,
    MixtureViolation,
    NotASubset,
    OriginPoint,
)
from .groebner import (
    IdealRep,
    StandardMonomialSet,
    _compositions,
    monomial_hilbert_numerator,
    monomial_quotient_hf,
)
from .orders import DEFAULT_ORDER
from .polynomials import Polynomial, mono_divides
from .scalars import QQ, CyclotomicField, Rational


class Design:
    """A finite set of distinct points with factor names and metadata."""

    __slots__ = ("factors", "field", "points", "level_sets", "mixture", "coding")

    def __init__(self, factors, field, points, level_sets=None, mixture=False,
                 coding=None):
        object.__setattr__(self, "factors", tuple(factors))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "points", tuple(tuple(p) for p in points))
        object.__setattr__(self, "level_sets",
                           None if level_sets is None
                           else tuple(tuple(s) for s in level_sets))
        object.__setattr__(self, "mixture", bool(mixture))
        object.__setattr__(self, "coding",
                           None if coding is None else tuple(coding))

    def __setattr__(self, name, value):
        raise AttributeError("Design values are immutable")

    def __len__(self):
        return len(self.points)

    @property
    def n_factors(self):
        return len(self.factors)

    def __repr__(self):
        return (f"Design({len(self.points)} points, factors={self.factors}, "
                f"field={self.field.name}, mixture={self.mixture})")


def validate(points, factors=None, field=QQ, level_sets=None, mixture=False,
             coding=None) -> Design:
    """Check all design invariants and return the Design."""
    points = [tuple(p) for p in points]
    if not points:
        raise ValueError("a design needs at least one point")
    m = len(points[0])
    if factors is None:
        factors = tuple(f"x{i + 1}" for i in range(m))
    factors = tuple(factors)
    if len(factors) != m:
        raise DimensionMismatch(
            f"{len(factors)} factor names for points of length {m}"
        )
    coerced = []
    for p in points:
        if len(p) != m:
            raise DimensionMismatch(f"point {p} does not have {m} coordinates")
        coerced.append(tuple(field.coerce(c) for c in p))
    seen = set()
    for p in coerced:
        if p in seen:
            raise DuplicatePoint(f"replicated point {p}")
        seen.add(p)
    if mixture:
        if not isinstance(field, type(QQ)):
            raise MixtureViolation("mixture designs use rational coordinates")
        one = field.one
        for p in coerced:
            if any(c < 0 for c in p):
                raise MixtureViolation(f"negative coordinate in {p}")
            total = sum(p, field.zero)
            if total != one:
                raise MixtureViolation(f"coordinates of {p} sum to {total}")
    if coding is not None:
        coding = tuple(int(n) for n in coding)
        if len(coding) != m:
            raise DimensionMismatch("one coding order per factor is required")
        for p in coerced:
            for c, n in zip(p, coding):
                if c ** n != field.one:
                    raise CodingViolation(
                        f"coordinate {c} is not an {n}-th root of unity"
                    )
    if level_sets is not None:
        level_sets = tuple(
            tuple(field.coerce(x) for x in levels) for levels in level_sets
        )
        if len(level_sets) != m:
            raise DimensionMismatch("one level set per factor is required")
        for p in coerced:
            for c, levels in zip(p, level_sets):
                if c not in levels:
                    raise CodingViolation(f"coordinate {c} outside level set")
    return Design(factors, field, coerced, level_sets, mixture, coding)


# ---------------------------------------------------------------------------
# standard constructions

def full_factorial(level_sets, factors=None, field=QQ) -> Design:
    """Cartesian product design with its per-factor level sets recorded."""
    level_sets = [tuple(field.coerce(x) for x in levels) for levels in level_sets]
    for levels in level_sets:
        if not levels:
            raise EmptyLevelSet("every factor needs at least one level")
        if len(set(levels)) != len(levels):
            raise EmptyLevelSet("levels within a factor must be distinct")
    points = list(product(*level_sets))
    return validate(points, factors=factors, field=field, level_sets=level_sets)


def canonical_generators(design: Design):
    """The one-variable generators prod(x_j - level) of the full-factorial
    ideal, one per factor."""
    if design.level_sets is None:
        raise ValueError("design has no recorded level sets")
    gens = []
    for i, levels in enumerate(design.level_sets):
        poly = Polynomial.constant(1, design.factors, design.field)
        x = Polynomial.variable(design.factors[i], design.factors, design.field)
        for level in levels:
            poly = poly * (x - level)
        gens.append(poly)
    return tuple(gens)


def code_roots_of_unity(design: Design, orders) -> Design:
    """Map integer level indices k to the k-th power of the per-factor root
    of unity; the common field is Q(zeta_lcm), or Q when all orders divide 2."""
    orders = tuple(int(n) for n in orders)
    if len(orders) != design.n_factors:
        raise DimensionMismatch("one coding order per factor is required")
    if isinstance(design.field, CyclotomicField):
        raise LevelIndexError("level indices must be rational integers")
    common = lcm(*orders) if orders else 1
    if common <= 2:
        field = QQ
        roots = [[field.coerce(1), field.coerce(-1)][:n] for n in orders]
    else:
        field = CyclotomicField(common)
        roots = [[field.zeta((common // n) * k) for k in range(n)] for n in orders]
    new_points = []
    for p in design.points:
        coords = []
        for c, n, powers in zip(p, orders, roots):
            if hasattr(c, "denominator") and c.denominator != 1:
                raise LevelIndexError(f"level index {c} is not an integer")
            k = int(c)
            if not 0 <= k < n:
                raise LevelIndexError(f"level index {k} outside 0..{n - 1}")
            coords.append(powers[k])
        new_points.append(tuple(coords))
    return validate(new_points, factors=design.factors, field=field,
                    level_sets=roots, coding=orders)


def simplex_centroid(m: int, sizes=None, factors=None) -> Design:
    """Centroid mixture design: for each admitted support size, all points
    with equal weight on that support. All sizes 1..m by default."""
    if sizes is None:
        sizes = range(1, m + 1)
    points = []
    for size in sorted(set(int(s) for s in sizes)):
        weight = Rational(1, size)
        for support in combinations(range(m), size):
            point = [Rational(0)] * m
            for i in support:
                point[i] = weight
            points.append(tuple(point))
    return validate(points, factors=factors, mixture=True)


def simplex_lattice(m: int, q: int, factors=None) -> Design:
    """Lattice mixture design: all points with coordinates k/q summing to 1."""
    if q < 1:
        raise ValueError("lattice parameter must be positive")
    points = [
        tuple(Rational(k, q) for k in expo) for expo in _compositions(q, m)
    ]
    return validate(points, factors=factors, mixture=True)


def is_subdesign(fraction: Design, design: Design) -> bool:
    if fraction.factors != design.factors or fraction.field != design.field:
        return False
    return set(fraction.points) <= set(design.points)


def complement(design: Design, fraction: Design) -> Design:
    """Points of the design not in the fraction, in design order."""
    if not is_subdesign(fraction, design):
        raise NotASubset("fraction is not contained in the design")
    chop = set(fraction.points)
    points = [p for p in design.points if p not in chop]
    if not points:
        raise ValueError("complement is empty")
    return Design(design.factors, design.field, points,
                  mixture=design.mixture, coding=design.coding)


# ---------------------------------------------------------------------------
# vanishing ideals of points

class _Eliminator:
    """Incremental exact row elimination that tracks, for every reduced row,
    its expression over the raw input rows."""

    def __init__(self, zero, one):
        self.zero = zero
        self.one = one
        self.rows = []
        self.pivots = []
        self.combos = []

    def process(self, vector):
        """Reduce a raw vector. Returns None if it is independent (and keeps
        it), else the coefficients expressing it over the previous raws."""
        w = list(vector)
        coeffs = linalg.reduce_against(w, self.rows, self.pivots)
        combined = linalg.linear_combination(
            coeffs, self.combos, len(self.combos), self.zero
        )
        p = linalg.first_nonzero(w)
        if p < 0:
            return combined
        inv = self.one / w[p]
        linalg.scale_inplace(w, inv)
        neg = -inv
        combo = [c * neg for c in combined]
        combo.append(inv)
        self.rows.append(w)
        self.pivots.append(p)
        self.combos.append(combo)
        return None


class PointIdealResult:
    """Vanishing ideal of a point set plus its interpolation data."""

    def __init__(self, design, ideal, est, raw_vectors):
        self.design = design
        self.ideal = ideal
        self.est = est
        self._raw = raw_vectors
        self._separators = None

    @property
    def evaluation_matrix(self):
        """Rows indexed by points, columns by standard monomials."""
        n = len(self.design.points)
        return [[self._raw[k][i] for k in range(len(self._raw))]
                for i in range(n)]

    @property
    def separators(self):
        """Polynomials taking value 1 at their own point and 0 elsewhere."""
        if self._separators is None:
            field = self.design.field
            inverse = linalg.invert(self.evaluation_matrix, field.zero, field.one)
            polys = []
            for j in range(len(self.design.points)):
                terms = {}
                for k, expo in enumerate(self.est.monomials):
                    c = inverse[k][j]
                    if c:
                        terms[expo] = c
                polys.append(Polynomial(self.design.factors, field, terms))
            self._separators = tuple(polys)
        return self._separators


def ideal_of_points(design: Design, order=DEFAULT_ORDER) -> PointIdealResult:
    """Reduced Groebner basis of the vanishing ideal of the design points,
    with the standard monomials and evaluation data used to build it."""
    points = design.points
    n = len(points)
    m = design.n_factors
    field = design.field
    one, zero = field.one, field.zero
    keyf = order.key_function(design.factors)
    columns = [[p[i] for p in points] for i in range(m)]
    unit = tuple([0] * m)
    raw = {unit: [one] * n}
    elim = _Eliminator(zero, one)
    est = []
    lts = []
    gb = []
    heap = [(keyf(unit), unit)]
    seen = {unit}
    while heap:
        _, expo = heapq.heappop(heap)
        if any(mono_divides(lt, expo) for lt in lts):
            continue
        vec = raw.get(expo)
        if vec is None:
            for i in range(m):
                if expo[i]:
                    parent = list(expo)
                    parent[i] -= 1
                    parent = tuple(parent)
                    if parent in raw:
                        col = columns[i]
                        pvec = raw[parent]
                        vec = [pvec[r] * col[r] for r in range(n)]
                        break
            raw[expo] = vec
        combined = elim.process(vec)
        if combined is None:
            est.append(expo)
            for i in range(m):
                succ = list(expo)
                succ[i] += 1
                succ = tuple(succ)
                if succ not in seen:
                    seen.add(succ)
                    heapq.heappush(heap, (keyf(succ), succ))
        else:
            terms = {expo: one}
            for j, c in enumerate(combined):
                if c:
                    terms[est[j]] = -c
            gb.append(Polynomial(design.factors, field, terms))
            lts.append(expo)
    ideal = IdealRep(tuple(gb), order, reduced_gb=tuple(gb))
    est_set = StandardMonomialSet(est, design.factors, order)
    return PointIdealResult(design, ideal, est_set, [raw[e] for e in est])


def ideal_of_projective_points(design: Design, order=DEFAULT_ORDER) -> IdealRep:
    """Reduced Groebner basis of the homogeneous ideal of the cone through
    the design points and the origin.

    Monomials are processed degree by degree. The scan stops once the
    count of independent monomials has stabilized for two consecutive
    degrees and the Hilbert series of the found leading-term ideal
    certifies that no leading term is missing at any higher degree.
    """
    points = design.points
    n = len(points)
    m = design.n_factors
    field = design.field
    one, zero = field.one, field.zero
    keyf = order.key_function(design.factors)
    for p in points:
        if not any(p):
            raise OriginPoint("the origin spans no direction")
    columns = [[p[i] for p in points] for i in range(m)]
    unit = tuple([0] * m)
    raw = {unit: [one] * n}

    def vector(expo):
        vec = raw.get(expo)
        if vec is not None:
            return vec
        for i in range(m):
            if expo[i]:
                parent = list(expo)
                parent[i] -= 1
                pvec = vector(tuple(parent))
                col = columns[i]
                vec = [pvec[r] * col[r] for r in range(n)]
                break
        raw[expo] = vec
        return vec

    lts = []
    gb = []
    degree = 0
    prev_count = -1
    stable = 0
    certified_to = 0
    while True:
        degree += 1
        if degree > 4 * n + 2 * m + 8:
            raise RuntimeError("projective scan failed to stabilize")
        candidates = sorted(
            (expo for expo in _compositions(degree, m)
             if not any(mono_divides(lt, expo) for lt in lts)),
            key=keyf,
        )
        elim = _Eliminator(zero, one)
        est = []
        fresh = 0
        for expo in candidates:
            combined = elim.process(vector(expo))
            if combined is None:
                est.append(expo)
            else:
                terms = {expo: one}
                for j, c in enumerate(combined):
                    if c:
                        terms[est[j]] = -c
                gb.append(Polynomial(design.factors, field, terms))
                lts.append(expo)
                fresh += 1
        if fresh == 0 and len(est) == prev_count:
            stable += 1
        else:
            stable = 0
        prev_count = len(est)
        if stable >= 2 and degree > certified_to:
            # The Hilbert function of the found leading-term ideal agrees
            # with a polynomial of degree < m beyond the series numerator's
            # degree, so m constant checkpoints past both bounds certify it
            # stays at the stabilized count forever.
            numerator = monomial_hilbert_numerator(lts, m)
            horizon = max(degree, len(numerator) - 1) + m
            complete = True
            for t in range(degree + 1, horizon + 1):
                if monomial_quotient_hf(numerator, m, t) != prev_count:
                    certified_to = t
                    complete = False
                    break
            if complete:
                break
    return IdealRep(tuple(gb), order, reduced_gb=tuple(gb))
