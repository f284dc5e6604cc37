"""JSON and CSV interchange for designs, ideals, polynomials and reports.

Scalars travel as exact text (``p/q`` or expressions in ``w``), polynomials
in the expression grammar, so every file re-parses to the identical value.
"""

from __future__ import annotations

import csv
import io
import json

from .designs import Design, validate
from .errors import FieldLiteralError
from .groebner import IdealRep
from .indicators import PropertyReport
from .orders import TermOrder
from .polynomials import Polynomial, parse_polynomial
from .scalars import QQ, field_from_name


def _format_point(point, field):
    return [field.format(c) for c in point]


def design_to_dict(design: Design) -> dict:
    data = {
        "factors": list(design.factors),
        "field": design.field.name,
        "mixture": design.mixture,
        "points": [_format_point(p, design.field) for p in design.points],
    }
    if design.level_sets is not None:
        data["level_sets"] = [
            [design.field.format(x) for x in levels]
            for levels in design.level_sets
        ]
    if design.coding is not None:
        data["coding"] = list(design.coding)
    return data


def design_from_dict(data: dict) -> Design:
    field = field_from_name(data.get("field", "Q"))
    factors = data.get("factors")
    points = [[field.parse(c) for c in row] for row in data["points"]]
    level_sets = data.get("level_sets")
    if level_sets is not None:
        level_sets = [[field.parse(x) for x in levels] for levels in level_sets]
    return validate(
        points,
        factors=factors,
        field=field,
        level_sets=level_sets,
        mixture=data.get("mixture", False),
        coding=data.get("coding"),
    )


def design_from_csv(text: str, mixture: bool = False) -> Design:
    """One point per row under a header of factor names; rational entries."""
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row and any(cell.strip() for cell in row)]
    if len(rows) < 2:
        raise FieldLiteralError("CSV needs a header row and at least one point")
    factors = [name.strip() for name in rows[0]]
    points = [[QQ.parse(cell) for cell in row] for row in rows[1:]]
    return validate(points, factors=factors, field=QQ, mixture=mixture)


def order_to_name(order) -> str:
    if isinstance(order, TermOrder):
        return order.kind
    return "degrevlex"


def ideal_to_dict(ideal: IdealRep) -> dict:
    data = {
        "variables": list(ideal.variables),
        "field": ideal.field.name,
        "order": order_to_name(ideal.order),
        "generators": [g.to_string(ideal.order) for g in ideal.generators],
    }
    if ideal.reduced_gb is not None:
        data["reduced_gb"] = [g.to_string(ideal.order) for g in ideal.reduced_gb]
    return data


def ideal_from_dict(data: dict) -> IdealRep:
    field = field_from_name(data.get("field", "Q"))
    variables = tuple(data["variables"])
    order = TermOrder(data.get("order", "degrevlex"))
    gens = tuple(
        parse_polynomial(text, variables, field) for text in data["generators"]
    )
    reduced = data.get("reduced_gb")
    if reduced is not None:
        reduced = tuple(
            parse_polynomial(text, variables, field) for text in reduced
        )
    return IdealRep(gens, order, reduced_gb=reduced,
                    variables=variables, field=field)


def polynomial_to_dict(poly: Polynomial, order=None) -> dict:
    return {
        "variables": list(poly.variables),
        "field": poly.field.name,
        "polynomial": poly.to_string(order) if order else poly.to_string(),
    }


def polynomial_from_dict(data: dict) -> Polynomial:
    field = field_from_name(data.get("field", "Q"))
    return parse_polynomial(data["polynomial"], tuple(data["variables"]), field)


def _expo_key(expo) -> str:
    return ",".join(str(e) for e in expo)


def report_to_dict(report: PropertyReport, factors=None) -> dict:
    if factors is None:
        factors = [f"x{i + 1}" for i in range(len(report.levels))]
    field_format = str
    words = []
    for expo in report.defining_words:
        mono = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(factors, expo) if e
        )
        words.append(mono or "1")
    return {
        "ratio": field_format(report.ratio),
        "fraction_size": report.n_points,
        "design_size": report.n_design,
        "levels": list(report.levels),
        "regular": report.regular,
        "defining_words": words,
        "balanced_factors": {
            name: flag for name, flag in zip(factors, report.balanced_factors)
        },
        "orthogonal_pairs": [
            {"factors": [factors[i], factors[j]], "orthogonal": flag}
            for (i, j), flag in sorted(report.orthogonal_pairs.items())
        ],
        "oa_strength": report.oa_strength,
        "variant": report.variant,
        "coefficients": {
            _expo_key(expo): field_format(c)
            for expo, c in sorted(report.coeffs.items())
        },
    }


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
