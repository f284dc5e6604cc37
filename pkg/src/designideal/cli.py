"""Command line front end.

Results go to stdout or ``--out``; timing and verification notes go to
stderr, so identical inputs always produce byte-identical outputs. Failures
exit nonzero with a machine-readable error object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import serialize
from .designs import (
    code_roots_of_unity,
    complement,
    full_factorial,
    ideal_of_points,
    ideal_of_projective_points,
    simplex_centroid,
    simplex_lattice,
)
from .errors import DesignIdealError
from .groebner import (
    buchberger,
    graded_standard_monomials,
    hilbert_function,
    member,
    min_saturating_degree,
    normal_form,
    standard_monomials,
)
from .indicators import (
    analyze,
    complex_coeffs,
    indicator_fast,
    indicator_from_points,
    indicator_naive,
    separator_function,
)
from .orders import TermOrder
from .polynomials import Polynomial, parse_polynomial
from .scalars import field_from_name
from .switching import (
    gb_to_indicator_fast,
    indicator_to_gb,
    separator_to_cone_gb,
)


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load_design(path: str):
    if path.endswith(".csv"):
        with open(path, "r", encoding="utf-8") as handle:
            return serialize.design_from_csv(handle.read())
    return serialize.design_from_dict(_read_json(path))


def _load_ideal(path: str, order=None):
    ideal = serialize.ideal_from_dict(_read_json(path))
    if order is not None and serialize.order_to_name(ideal.order) != order.kind:
        ideal = buchberger(ideal.generators, order)
    elif ideal.reduced_gb is None:
        ideal = buchberger(ideal.generators, ideal.order)
    return ideal


def _load_polynomial(path: str, variables=None, field_name=None):
    try:
        data = _read_json(path)
    except json.JSONDecodeError:
        data = None
    if isinstance(data, dict) and "polynomial" in data:
        return serialize.polynomial_from_dict(data)
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if variables is None:
        raise DesignIdealError("raw polynomial input needs --vars")
    field = field_from_name(field_name or "Q")
    return parse_polynomial(text.strip(), tuple(variables), field)


def _emit(args, payload, text_lines=None):
    if getattr(args, "format", "json") == "text" and text_lines is not None:
        output = "\n".join(text_lines) + "\n"
    else:
        output = serialize.dumps(payload)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)


def _order_of(args) -> TermOrder:
    return TermOrder(getattr(args, "order", "degrevlex"))


def _split_levels(text: str):
    return [chunk.split(",") for chunk in text.split(";")]


def _monomial_strings(monomials, variables):
    out = []
    for expo in monomials:
        mono = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(variables, expo) if e
        )
        out.append(mono or "1")
    return out


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_generate(args):
    field = field_from_name(args.field)
    if args.kind == "full-factorial":
        levels = [[field.parse(x) for x in chunk]
                  for chunk in _split_levels(args.levels)]
        factors = args.vars.split(",") if args.vars else None
        design = full_factorial(levels, factors=factors, field=field)
    elif args.kind == "centroid":
        sizes = [int(s) for s in args.sizes.split(",")] if args.sizes else None
        design = simplex_centroid(args.factors_count, sizes=sizes)
    elif args.kind == "lattice":
        design = simplex_lattice(args.factors_count, args.steps)
    else:  # code-roots
        base = _load_design(args.design)
        orders = [int(n) for n in args.orders.split(",")]
        design = code_roots_of_unity(base, orders)
    payload = serialize.design_to_dict(design)
    _emit(args, payload)


def _cmd_ideal(args):
    design = _load_design(args.design)
    order = _order_of(args)
    if args.projective:
        ideal = ideal_of_projective_points(design, order)
        payload = serialize.ideal_to_dict(ideal)
        if args.verify:
            for g in ideal.reduced_gb:
                for p in design.points:
                    if g.evaluate(p):
                        raise DesignIdealError("basis element does not vanish")
    else:
        result = ideal_of_points(design, order)
        ideal = result.ideal
        payload = serialize.ideal_to_dict(ideal)
        if args.separators:
            payload["separators"] = [
                s.to_string(order) for s in result.separators
            ]
        if args.verify:
            for g in ideal.reduced_gb:
                for p in design.points:
                    if g.evaluate(p):
                        raise DesignIdealError("basis element does not vanish")
    lines = [g.to_string(order) for g in ideal.reduced_gb]
    _emit(args, payload, lines)


def _cmd_est(args):
    ideal = _load_ideal(args.ideal)
    if args.degree is None:
        est = standard_monomials(ideal)
    else:
        est = graded_standard_monomials(ideal, args.degree)
    names = _monomial_strings(est.monomials, ideal.variables)
    payload = {
        "variables": list(ideal.variables),
        "degree": args.degree,
        "monomials": names,
    }
    _emit(args, payload, names)


def _cmd_hilbert(args):
    ideal = _load_ideal(args.ideal)
    if args.attain is not None:
        degree = min_saturating_degree(ideal, args.attain)
        payload = {"attains": args.attain, "degree": degree}
        lines = [str(degree)]
    else:
        value = hilbert_function(ideal, args.degree)
        payload = {"degree": args.degree, "value": value}
        lines = [str(value)]
    _emit(args, payload, lines)


def _cmd_indicator(args):
    fraction = _load_design(args.fraction)
    design = _load_design(args.design)
    order = _order_of(args)
    if args.from_gb:
        rep = indicator_fast(fraction, design, order)
    elif args.naive:
        rep = indicator_naive(fraction, design, order)
    else:
        rep = indicator_from_points(fraction, design, order)
    if args.verify:
        one, zero = design.field.one, design.field.zero
        chosen = set(fraction.points)
        for p in design.points:
            want = one if p in chosen else zero
            if rep.polynomial.evaluate(p) != want:
                raise DesignIdealError("indicator failed evaluation")
    payload = serialize.polynomial_to_dict(rep.polynomial, order)
    _emit(args, payload, [rep.polynomial.to_string(order)])


def _cmd_separator(args):
    fraction = _load_design(args.fraction)
    design = _load_design(args.design)
    order = _order_of(args)
    rep = separator_function(fraction, design, order, degree=args.degree)
    payload = serialize.polynomial_to_dict(rep.numerator, order)
    payload["degree"] = rep.degree
    payload["denominator"] = (
        "(" + " + ".join(design.factors) + f")^{rep.degree}"
    )
    _emit(args, payload, [rep.numerator.to_string(order)])


def _cmd_switch(args):
    order = _order_of(args)
    if args.direction == "ind2gb":
        design_ideal = _load_ideal(args.design_ideal)
        indicator = _load_polynomial(
            args.indicator,
            args.vars.split(",") if args.vars else design_ideal.variables,
            args.field,
        )
        result = indicator_to_gb(design_ideal.generators, indicator, order)
        if args.verify:
            for g in design_ideal.generators:
                if not member(g, result):
                    raise DesignIdealError("design generator missing from output")
            if not member(indicator - 1, result):
                raise DesignIdealError("indicator relation missing from output")
        payload = serialize.ideal_to_dict(result)
        lines = [g.to_string(order) for g in result.reduced_gb]
    elif args.direction == "gb2ind":
        design_ideal = _load_ideal(args.design_ideal, order)
        fraction_gb = _load_ideal(args.fraction_gb, order)
        complement_gb = _load_ideal(args.complement_gb, order)
        poly = gb_to_indicator_fast(fraction_gb, complement_gb, design_ideal,
                                    order=order, reduce=args.reduce)
        payload = serialize.polynomial_to_dict(poly, order)
        lines = [poly.to_string(order)]
    else:  # sep2gb
        cone = _load_ideal(args.cone_ideal, order)
        numerator = _load_polynomial(
            args.numerator,
            args.vars.split(",") if args.vars else cone.variables,
            args.field,
        )
        result = separator_to_cone_gb(cone.generators, numerator, args.degree,
                                      order)
        if args.verify:
            for g in cone.generators:
                if not member(g, result):
                    raise DesignIdealError("cone generator missing from output")
        payload = serialize.ideal_to_dict(result)
        lines = [g.to_string(order) for g in result.reduced_gb]
    _emit(args, payload, lines)


def _cmd_analyze(args):
    fraction = _load_design(args.fraction)
    design = _load_design(args.design)
    rep = complex_coeffs(fraction, design)
    report = analyze(rep)
    payload = serialize.report_to_dict(report, factors=design.factors)
    lines = [f"{key}: {value}" for key, value in sorted(payload.items())
             if key != "coefficients"]
    _emit(args, payload, lines)


# ---------------------------------------------------------------------------

def _add_common(parser, order=True, out=True, fmt=True, verify=True):
    if order:
        parser.add_argument("--order", choices=("lex", "degrevlex"),
                            default="degrevlex")
    if out:
        parser.add_argument("--out", help="write the result to this path")
    if fmt:
        parser.add_argument("--format", choices=("json", "text"),
                            default="json")
    if verify:
        parser.add_argument("--verify", action="store_true",
                            help="run post-hoc checks and report elapsed time")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="designideal",
        description="Exact polynomial representations of experimental designs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="create standard designs")
    p.add_argument("kind", choices=("full-factorial", "centroid", "lattice",
                                    "code-roots"))
    p.add_argument("--levels", help="per-factor levels, ';' between factors")
    p.add_argument("--vars", help="comma-separated factor names")
    p.add_argument("--field", default="Q")
    p.add_argument("--factors-count", type=int, default=3)
    p.add_argument("--sizes", help="centroid support sizes, e.g. 1,3")
    p.add_argument("--steps", type=int, default=1, help="lattice parameter")
    p.add_argument("--design", help="index design for code-roots")
    p.add_argument("--orders", help="per-factor root orders for code-roots")
    _add_common(p, order=False, verify=False)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("ideal", help="vanishing ideal of a design")
    p.add_argument("design")
    p.add_argument("--projective", action="store_true")
    p.add_argument("--separators", action="store_true",
                   help="include the point separators (affine only)")
    _add_common(p)
    p.set_defaults(func=_cmd_ideal)

    p = sub.add_parser("est", help="standard monomials of an ideal")
    p.add_argument("ideal")
    p.add_argument("--degree", type=int, help="graded slice of a cone ideal")
    _add_common(p, order=False, verify=False)
    p.set_defaults(func=_cmd_est)

    p = sub.add_parser("hilbert", help="Hilbert function of a cone ideal")
    p.add_argument("ideal")
    p.add_argument("--degree", type=int)
    p.add_argument("--attain", type=int,
                   help="least degree reaching this dimension")
    _add_common(p, order=False, verify=False)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("indicator", help="indicator of a fraction")
    p.add_argument("fraction")
    p.add_argument("design")
    p.add_argument("--from-gb", action="store_true",
                   help="use the fast linear-algebra switch")
    p.add_argument("--naive", action="store_true",
                   help="use the eliminated reference construction")
    _add_common(p)
    p.set_defaults(func=_cmd_indicator)

    p = sub.add_parser("separator", help="mixture separator numerator")
    p.add_argument("fraction")
    p.add_argument("design")
    p.add_argument("--degree", type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_separator)

    p = sub.add_parser("switch", help="convert between representations")
    p.add_argument("direction", choices=("ind2gb", "gb2ind", "sep2gb"))
    p.add_argument("--design-ideal")
    p.add_argument("--fraction-gb")
    p.add_argument("--complement-gb")
    p.add_argument("--cone-ideal")
    p.add_argument("--indicator")
    p.add_argument("--numerator")
    p.add_argument("--degree", type=int)
    p.add_argument("--vars")
    p.add_argument("--field", default="Q")
    p.add_argument("--reduce", action="store_true",
                   help="gb2ind: return the normal form against the design "
                        "ideal instead of the solved combination")
    _add_common(p)
    p.set_defaults(func=_cmd_switch)

    p = sub.add_parser("analyze", help="coefficient-based property report")
    p.add_argument("fraction")
    p.add_argument("design")
    _add_common(p, order=False)
    p.set_defaults(func=_cmd_analyze)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        args.func(args)
    except DesignIdealError as exc:
        error = {"error": {"module": exc.module, "kind": exc.kind,
                           "message": str(exc)}}
        sys.stderr.write(json.dumps(error, sort_keys=True) + "\n")
        return 1
    except OSError as exc:
        error = {"error": {"module": "cli", "kind": type(exc).__name__,
                           "message": str(exc)}}
        sys.stderr.write(json.dumps(error, sort_keys=True) + "\n")
        return 1
    if getattr(args, "verify", False):
        elapsed = time.perf_counter() - started
        sys.stderr.write(f"verified; elapsed {elapsed:.3f}s\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
