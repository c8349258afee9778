# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""The command line interface for tropsing.

The interface is accessible via the ``tropsing`` command (or ``python -m
tropsing``) and gives access to tropical roots, Euler derivatives,
singularity tests, the fans H_{p,n}, universally singular polynomials,
discriminant Newton polytopes and the acceptance checks.

Execute ``tropsing --help`` for more information.
"""
import argparse
import json
import logging
import sys
import traceback

from . import __version__
from .disc_newton import (
    DETERMINANT_METHODS,
    compare_newton,
    discriminant_polytope,
    generic_discriminant,
    polytope_faces,
    support_mod_p,
)
from .errors import (
    DimensionMismatchError,
    ParseError,
    SizeLimitError,
    VerificationMismatch,
    WitnessMismatchError,
)
from .euler import LinearForm, derivative_family, euler_derivative
from .hpn import (
    ConeDescriptor,
    adjacency_probe,
    classify,
    count_cones,
    count_cones_closed_form,
    enumerate_cones,
    in_H,
    in_H_via_derivatives,
)
from .render import OUTPUT_FORMATS, render
from .singular import (
    is_singular_at,
    padic_interpolation_check,
    singular_points_multivariate,
    singular_points_univariate,
)
from .trop_core import (
    RegimeKind,
    argmin_support,
    evaluate,
    is_tropical_root,
    load_polynomial,
    polynomial_to_json,
    univariate_roots,
)
from .universal import (
    UnivCellWitness,
    active_equality_rank,
    construct_deep_cell,
    is_universally_singular,
)
from .util.config import RunConfig
from .util.misc import (
    _format_rational,
    _positive_int,
    _prime_or_zero,
    _rational,
    _rational_tuple,
)
from .verify import CHECKS, run_checks

logger = logging.getLogger(__name__)

_GLOBAL_OPTIONS = ("verbose", "debug", "format", "threads", "cache_dir")


def _char_pair(value):
    """Parse two comma separated characteristics, e.g. ``"0,3"``."""
    parts = value.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"{value} must be two characteristics 'P,Q'.")
    return tuple(_prime_or_zero(part.strip()) for part in parts)


def _run_config(args, regime=None, inputs=None, **overrides):
    overrides.setdefault("output_format", args.format)
    return RunConfig(
        regime=regime,
        inputs=inputs,
        threads=args.threads,
        cache_dir=args.cache_dir,
        **overrides,
    )


def _emit(config, doc, template, table=None):
    sys.stdout.write(render(doc, config.output_format, template, table))


def _exponents(argmin):
    return [list(exp) for exp in sorted(argmin)]


def _point(point):
    return [_format_rational(c) for c in point]


def main_roots(args):
    """Print the tropical roots of a univariate polynomial or evaluate at a point."""
    config = _run_config(args, inputs=[args.poly])
    f = load_polynomial(args.poly)
    doc = {"polynomial": str(f), "dim": f.dim}
    if args.point is not None:
        doc["evaluation"] = {
            "point": _point(args.point),
            "value": _format_rational(evaluate(f, args.point)),
            "argmin": _exponents(argmin_support(f, args.point)),
            "is_root": is_tropical_root(f, args.point),
        }
    elif f.dim != 1:
        raise DimensionMismatchError("Pass --point to evaluate a multivariate polynomial.")
    if f.dim == 1:
        doc["roots"] = [
            {"root": _format_rational(root), "argmin": _exponents(argmin)}
            for root, argmin in univariate_roots(f)
        ]
    rows = [[r["root"], " ".join(str(e[0]) for e in r["argmin"])] for r in doc.get("roots", [])]
    _emit(config, doc, "roots.txt", (["root", "argmin"], rows))


def main_euler(args):
    """Print an Euler derivative or the derivative family of a polynomial."""
    config = _run_config(args, regime=args.regime, inputs=[args.poly])
    regime = config.regime
    f = load_polynomial(args.poly)
    doc = {"polynomial": str(f), "regime": str(regime)}
    if args.form is not None:
        form = LinearForm.parse(args.form, f.dim)
        derivative = euler_derivative(f, form, regime)
        doc.update(
            form=str(form),
            derivative=polynomial_to_json(derivative),
            text=str(derivative),
        )
        _emit(config, doc, "euler.txt")
        return
    spread = 0
    if regime.kind == RegimeKind.padic and len(f):
        spread = max(f.values()) - min(f.values())
    doc["family"] = [
        {"form": form.label, "derivative": str(euler_derivative(f, form, regime))}
        for form in derivative_family(f.support, f.dim, regime, spread)
    ]
    rows = [[entry["form"], entry["derivative"]] for entry in doc["family"]]
    _emit(config, doc, "euler.txt", (["form", "derivative"], rows))


def main_singular(args):
    """Test a polynomial for singular points."""
    config = _run_config(args, regime=args.regime, inputs=[args.poly])
    regime = config.regime
    f = load_polynomial(args.poly)
    if args.epsilon is not None:
        if regime.p is None:
            raise ParseError("--epsilon needs a regime with a prime, e.g. 'padic:2'.")
        record = padic_interpolation_check(f, regime.p, args.epsilon)
        doc = dict(record.to_json(), polynomial=str(f), scaled=str(record.scaled))
        _emit(config, doc, "interpolation.txt")
        return
    if args.point is not None:
        reports = [is_singular_at(f, args.point, regime)]
    elif f.dim == 1:
        reports = singular_points_univariate(f, regime)
    else:
        reports = singular_points_multivariate(
            f,
            regime,
            max_support=config.limits["max_support"],
            parallelization=config.parallelization,
            max_workers=config.max_workers,
        )
    doc = {
        "polynomial": str(f),
        "regime": str(regime),
        "singular": any(report.is_singular for report in reports),
        "reports": [report.to_json() for report in reports],
    }
    rows = [
        [" ".join(r["point"]), r["singular"], r["failing_form"] or ""] for r in doc["reports"]
    ]
    _emit(config, doc, "singular.txt", (["point", "singular", "failing_form"], rows))


def main_hpn_enumerate(args):
    """Enumerate the maximal cones of H_{p,n}."""
    config = _run_config(args)
    cones = enumerate_cones(args.degree, args.p)
    counts = count_cones(cones, args.p)
    doc = {
        "p": args.p,
        "degree": args.degree,
        "counts": counts,
        "cones": [dict(cone.to_json(), label=str(cone)) for cone in cones],
    }
    if args.p == 0:
        doc["closed_form"] = count_cones_closed_form(args.degree, 0)
    elif (args.degree + 1) % args.p == 0:
        doc["closed_form"] = count_cones_closed_form((args.degree + 1) // args.p, args.p)
    if args.json is not None:
        with open(args.json, "w") as file:
            json.dump(doc, file, indent=2)
        logger.info("Wrote %d cones to '%s'.", len(cones), args.json)
    if args.count_only:
        _emit(config, counts, "counts.txt")
        return
    rows = [[cone["type"], cone["label"]] for cone in doc["cones"]]
    _emit(config, doc, "hpn_enumerate.txt", (["type", "cone"], rows))


def main_hpn_check(args):
    """Check membership in H_{p,n} and classify the cell."""
    config = _run_config(args, inputs=[args.poly])
    f = load_polynomial(args.poly)
    n = max(exp[0] for exp in f.support)
    cell = classify(f, n, args.p)
    doc = {
        "polynomial": str(f),
        "p": args.p,
        "degree": n,
        "in_H": in_H(f, args.p),
        "in_H_via_derivatives": in_H_via_derivatives(f, args.p),
        "cell": str(cell),
        "descriptor": cell.to_json() if isinstance(cell, ConeDescriptor) else None,
    }
    _emit(config, doc, "hpn_check.txt")


def main_hpn_probe(args):
    """Count the maximal cells adjacent to a codimension-one cell."""
    config = _run_config(args, inputs=[args.poly])
    f = load_polynomial(args.poly)
    samples = config.probe_samples if args.samples is None else args.samples
    result = adjacency_probe(f, args.p, samples=samples)
    doc = dict(result.to_json(), polynomial=str(f), p=args.p)
    rows = [
        [" ".join(cell["descriptors"]), "; ".join(cell["found_by"])] for cell in doc["cells"]
    ]
    _emit(config, doc, "hpn_probe.txt", (["descriptors", "found_by"], rows))


def main_universal_check(args):
    """Check universal singularity with a per-prime breakdown."""
    config = _run_config(args, inputs=[args.poly])
    f = load_polynomial(args.poly)
    verdict = is_universally_singular(f, args.degree)
    doc = dict(verdict.to_json(), polynomial=str(f))
    doc["rank"] = active_equality_rank(f, args.degree) if verdict else None
    try:
        witness = UnivCellWitness.from_polynomial(f)
    except WitnessMismatchError as error:
        logger.info("No codimension-3 witness: %s", error)
        doc["witness"] = None
    else:
        doc["witness"] = {
            "triple": [witness.i, witness.j, witness.k],
            "pair": [witness.r, witness.s],
            "d": witness.d,
            "units_ok": witness.units_ok,
        }
    rows = [[p, ok] for p, ok in doc["breakdown"].items()]
    _emit(config, doc, "universal_check.txt", (["p", "in_H"], rows))


def main_universal_construct(args):
    """Build the deep universally singular cell for a given k."""
    config = _run_config(args)
    cell = construct_deep_cell(args.k, max_degree=config.limits["max_universal_degree"])
    _emit(config, cell.to_json(), "universal_construct.txt")


def main_disc_newton(args):
    """Compute the Newton polytope of the discriminant modulo p."""
    config = _run_config(args)
    disc = generic_discriminant(
        args.degree,
        method=args.method,
        cache_dir=config.cache_dir,
        max_degree=config.limits["max_degree"],
    )
    support = support_mod_p(disc, args.char)
    polytope = discriminant_polytope(support, args.degree)
    census = polytope_faces(
        polytope,
        max_face_dim=2 if args.faces else 0,
        parallelization=config.parallelization,
        max_workers=config.max_workers,
    )
    doc = {
        "degree": args.degree,
        "char": args.char,
        "terms": len(disc),
        "support_size": len(support),
        "dim": polytope.dim,
        "vertices": [list(v) for v in census.vertices],
    }
    if args.faces:
        doc["faces"] = census.to_json()["counts"]
        doc["face_census"] = census.to_json()["face_census"]
    if args.json is not None:
        with open(args.json, "w") as file:
            json.dump(dict(doc, support=[list(e) for e in sorted(support)]), file, indent=2)
        logger.info("Wrote the Newton polytope to '%s'.", args.json)
    rows = [[" ".join(map(str, v))] for v in doc["vertices"]]
    _emit(config, doc, "disc_newton.txt", (["vertex"], rows))


def main_disc_compare(args):
    """Compare the vertex sets of two discriminant Newton polytopes."""
    config = _run_config(args)
    p, q = args.chars
    comparison = compare_newton(args.degree, p, q, cache_dir=config.cache_dir)
    doc = comparison.to_json()
    rows = [[p, " ".join(map(str, v))] for v in comparison.only_p]
    rows += [[q, " ".join(map(str, v))] for v in comparison.only_q]
    _emit(config, doc, "disc_compare.txt", (["only_in_char", "vertex"], rows))


def main_verify(args):
    """Run the acceptance checks."""
    config = _run_config(args, output_format=args.format or "text")
    results = run_checks(
        args.only,
        skip_slow=args.skip_slow,
        parallelization=config.parallelization,
        max_workers=config.max_workers,
        printer=None,
        raise_on_failure=False,
    )
    doc = {
        "passed": all(result.passed for result in results),
        "checks": [result.to_json() for result in results],
    }
    rows = [[result.name, "PASS" if result.passed else "FAIL"] for result in results]
    _emit(config, doc, "verify.txt", (["check", "verdict"], rows))
    failed = [result.name for result in results if not result.passed]
    if failed:
        raise VerificationMismatch(f"Checks failed: {', '.join(failed)}.")


def _add_global_options(parser, prefix=""):
    parser.add_argument(
        "-v",
        "--verbose",
        dest=prefix + "verbose",
        action="count",
        default=0,
        help="Increase output verbosity.",
    )
    parser.add_argument(
        "--debug",
        dest=prefix + "debug",
        action="store_true",
        help="Show debug output and the full traceback on error.",
    )
    parser.add_argument(
        "--format",
        dest=prefix + "format",
        choices=OUTPUT_FORMATS,
        default=None,
        help="Output format. Default: 'json' ('text' for verify).",
    )
    parser.add_argument(
        "--threads",
        dest=prefix + "threads",
        type=_positive_int,
        default=None,
        help="Number of worker processes. Overrides TROPSING_THREADS.",
    )
    parser.add_argument(
        "--cache-dir",
        dest=prefix + "cache_dir",
        type=str,
        default=None,
        help="Directory for cached discriminants. Overrides TROPSING_CACHE.",
    )


def _add_poly(parser):
    parser.add_argument(
        "--poly", required=True, help="Path of a polynomial JSON file."
    )


def _make_parser():
    parser = argparse.ArgumentParser(
        prog="tropsing",
        description="tropsing decides singularity of tropical polynomials and studies "
        "tropical discriminants in characteristic zero, characteristic p and p-adically.",
    )
    parser.add_argument(
        "--version", action="store_true", help="Display the version number and exit."
    )
    base_parser = argparse.ArgumentParser(add_help=False)
    # Global options are accepted before and after the subcommand; they are
    # stored under different destinations and merged in main().
    for prefix, _parser in (("main_", parser), ("", base_parser)):
        _add_global_options(_parser, prefix)

    subparsers = parser.add_subparsers()

    parser_roots = subparsers.add_parser(
        "roots", parents=[base_parser], help="Tropical roots of a polynomial."
    )
    _add_poly(parser_roots)
    parser_roots.add_argument(
        "--point",
        type=_rational_tuple,
        help="Evaluate at this point, e.g. '0' or '1/2,-1'.",
    )
    parser_roots.set_defaults(func=main_roots)

    parser_euler = subparsers.add_parser(
        "euler", parents=[base_parser], help="Euler derivatives."
    )
    _add_poly(parser_euler)
    selection = parser_euler.add_mutually_exclusive_group(required=True)
    selection.add_argument("--form", help="A linear form such as 'x-4' or 'x-y'.")
    selection.add_argument(
        "--family",
        action="store_true",
        help="Print the derivative family that decides singularity.",
    )
    parser_euler.add_argument(
        "--regime", required=True, help="Valuation regime: 'char:0', 'char:P' or 'padic:P'."
    )
    parser_euler.set_defaults(func=main_euler)

    parser_singular = subparsers.add_parser(
        "singular", parents=[base_parser], help="Singular points of a tropical hypersurface."
    )
    _add_poly(parser_singular)
    parser_singular.add_argument(
        "--regime", required=True, help="Valuation regime: 'char:0', 'char:P' or 'padic:P'."
    )
    parser_singular.add_argument(
        "--point", type=_rational_tuple, help="Test only this point."
    )
    parser_singular.add_argument(
        "--epsilon",
        type=_rational,
        help="Compare the p-adic and characteristic p verdicts in a ball of this radius.",
    )
    parser_singular.set_defaults(func=main_singular)

    parser_hpn = subparsers.add_parser("hpn", help="The fans H_{p,n}.")
    hpn_subparsers = parser_hpn.add_subparsers()

    parser_enumerate = hpn_subparsers.add_parser(
        "enumerate", parents=[base_parser], help="Enumerate the maximal cones."
    )
    parser_enumerate.add_argument("--p", type=_prime_or_zero, required=True)
    parser_enumerate.add_argument("--degree", type=_positive_int, required=True)
    parser_enumerate.add_argument(
        "--count-only", action="store_true", help="Print the counts per cone type only."
    )
    parser_enumerate.add_argument(
        "--json", metavar="OUT", help="Also write the cone list to this file."
    )
    parser_enumerate.set_defaults(func=main_hpn_enumerate)

    parser_check = hpn_subparsers.add_parser(
        "check", parents=[base_parser], help="Check membership and classify."
    )
    _add_poly(parser_check)
    parser_check.add_argument("--p", type=_prime_or_zero, required=True)
    parser_check.set_defaults(func=main_hpn_check)

    parser_probe = hpn_subparsers.add_parser(
        "probe", parents=[base_parser], help="Count the cells around a codimension-one cell."
    )
    _add_poly(parser_probe)
    parser_probe.add_argument("--p", type=_prime_or_zero, required=True)
    parser_probe.add_argument(
        "--samples",
        type=int,
        default=None,
        help="Number of sampled circle directions. Default: the probe_samples setting.",
    )
    parser_probe.set_defaults(func=main_hpn_probe)

    parser_universal = subparsers.add_parser(
        "universal", help="Universally singular polynomials."
    )
    universal_subparsers = parser_universal.add_subparsers()

    parser_universal_check = universal_subparsers.add_parser(
        "check", parents=[base_parser], help="Check universal singularity."
    )
    _add_poly(parser_universal_check)
    parser_universal_check.add_argument("--degree", type=_positive_int, required=True)
    parser_universal_check.set_defaults(func=main_universal_check)

    parser_construct = universal_subparsers.add_parser(
        "construct", parents=[base_parser], help="Build a deep universally singular cell."
    )
    parser_construct.add_argument("--k", type=_positive_int, required=True)
    parser_construct.set_defaults(func=main_universal_construct)

    parser_disc = subparsers.add_parser("disc", help="Discriminant Newton polytopes.")
    disc_subparsers = parser_disc.add_subparsers()

    parser_newton = disc_subparsers.add_parser(
        "newton", parents=[base_parser], help="The Newton polytope N_{p,n}."
    )
    parser_newton.add_argument("--degree", type=_positive_int, required=True)
    parser_newton.add_argument("--char", type=_prime_or_zero, required=True)
    parser_newton.add_argument(
        "--faces", action="store_true", help="Count edges and 2-faces as well."
    )
    parser_newton.add_argument(
        "--method",
        choices=DETERMINANT_METHODS,
        default="bareiss",
        help="Determinant method. Default: 'bareiss'.",
    )
    parser_newton.add_argument(
        "--json", metavar="OUT", help="Also write the support and vertices to this file."
    )
    parser_newton.set_defaults(func=main_disc_newton)

    parser_compare = disc_subparsers.add_parser(
        "compare", parents=[base_parser], help="Compare N_{p,n} and N_{q,n}."
    )
    parser_compare.add_argument("--degree", type=_positive_int, required=True)
    parser_compare.add_argument(
        "--chars", type=_char_pair, required=True, help="Two characteristics 'P,Q'."
    )
    parser_compare.set_defaults(func=main_disc_compare)

    parser_verify = subparsers.add_parser(
        "verify", parents=[base_parser], help="Run the acceptance checks."
    )
    parser_verify.add_argument(
        "--only", nargs="+", choices=sorted(CHECKS), metavar="NAME", help="Run these checks only."
    )
    parser_verify.add_argument(
        "--skip-slow", action="store_true", help="Use smaller instances for slow checks."
    )
    parser_verify.set_defaults(func=main_verify)
    return parser


def main(argv=None):
    """Run the 'tropsing' command line interface and return the exit code.

    Parse errors exit with 2, exceeded size limits with 3 and every other
    error, including failed checks, with 1.
    """
    parser = _make_parser()
    args = parser.parse_args(argv)
    if args.version:
        print("tropsing", __version__)
        return 0
    if not hasattr(args, "func"):
        parser.print_usage()
        return 2
    for dest in _GLOBAL_OPTIONS:
        setattr(args, dest, getattr(args, "main_" + dest) or getattr(args, dest, None))
        delattr(args, "main_" + dest)
    if args.debug:
        args.verbose = max(2, args.verbose)
    logging.basicConfig(level=max(0, logging.WARNING - 10 * args.verbose))

    def _fail(error, code):
        print(f"ERROR: {error}", file=sys.stderr)
        if args.debug:
            traceback.print_exception(type(error), error, error.__traceback__)
        return code

    try:
        args.func(args)
    except KeyboardInterrupt:
        print("\nInterrupted.", file=sys.stderr)
        return 1
    except ParseError as error:
        return _fail(error, 2)
    except SizeLimitError as error:
        return _fail(error, 3)
    except Exception as error:
        return _fail(error, 1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
