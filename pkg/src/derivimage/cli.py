"""Command-line interface: JSON on stdout, grammar-checked polynomial flags.

Exit codes: 0 success, 2 usage or parse error, 3 unsupported case,
4 verification-suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bernoulli as bern
from . import derivations as der
from . import ederivations as ed
from . import mathieu as ms
from . import translation as tr
from .poly import (
    Polynomial,
    PolynomialSyntaxError,
    parse_polynomial,
    parse_rational,
)
from .verify import Limits, run_verify

GRAMMAR_HELP = """\
polynomial grammar (whitespace-tolerant):
  poly  := term (("+"|"-") term)*
  term  := coeff | coeff "*"? var | var
  var   := "x" ("^" uint)?
  coeff := ("-")? uint ("/" uint)?
a sign directly before a bare variable term ("-x^2 + x") is also accepted;
canonical output uses descending powers, reduced fractions, and "0" for the
zero polynomial.
"""


class UnsupportedCaseError(Exception):
    pass


def _emit(payload, pretty: bool):
    if pretty:
        print(json.dumps(payload, indent=2))
    else:
        print(json.dumps(payload, separators=(",", ":")))


def _poly_arg(text: str) -> Polynomial:
    return parse_polynomial(text)


def _cmd_bernoulli(args) -> int:
    n = args.n
    if args.what == "num":
        _emit({"n": n, "value": str(bern.bernoulli_number(n))}, args.pretty)
    elif args.what == "poly":
        _emit({"n": n, "poly": bern.bernoulli_poly(n).to_json_dict()}, args.pretty)
    elif args.what == "dpoly":
        _emit({"n": n, "poly": bern.d_poly(n).to_json_dict()}, args.pretty)
    else:  # cvs
        defect = bern.clausen_staudt_defect(n)
        _emit(
            {"n": n, "defect": str(defect), "integer": defect.denominator == 1},
            args.pretty,
        )
    return 0


def _cmd_image_derivation(args) -> int:
    a = parse_polynomial(args.a)
    if args.shape:
        if args.ideal is None:
            raise UnsupportedCaseError("--shape needs --ideal")
        if a.is_zero or a.degree != 0:
            raise UnsupportedCaseError(
                "image shapes are classified only for constant nonzero weights"
            )
        shape = der.derivative_ideal_shape(parse_polynomial(args.ideal))
        _emit(shape.to_json_dict(), args.pretty)
        return 0
    if args.member is None:
        raise UnsupportedCaseError("need --member or --shape")
    f = parse_polynomial(args.member)
    if args.ideal is None:
        verdict = der.image_member(der.Derivation(a), f)
        _emit({"verdict": verdict}, args.pretty)
    else:
        got = der.derivation_ideal_member(a, parse_polynomial(args.ideal), f)
        _emit(got.to_json_dict(), args.pretty)
    return 0


def _cmd_image_ederivation(args) -> int:
    w = parse_polynomial(args.w)
    f = parse_polynomial(args.member)
    tag = ed.classify_case(w)
    if args.ideal is None:
        got = ed.image_member(w, f)
    else:
        got = ed.ideal_image_member(
            w, parse_polynomial(args.ideal), f, degree_bound=args.gbound
        )
    payload = {"case": tag.to_json_dict()}
    payload.update(got.to_json_dict())
    _emit(payload, args.pretty)
    return 0


def _cmd_image_translation(args) -> int:
    c = parse_rational(args.c)
    if args.shape:
        if args.a is None:
            raise UnsupportedCaseError("--shape needs --a")
        shape = tr.quadratic_shape(c, parse_rational(args.a))
        _emit(shape.to_json_dict(), args.pretty)
        return 0
    if args.member is None:
        raise UnsupportedCaseError("need --member or --shape")
    f = parse_polynomial(args.member)
    if args.ideal_roots is not None:
        roots = [parse_rational(part) for part in args.ideal_roots.split(",") if part.strip()]
        scale = parse_rational(args.lc) if args.lc is not None else Fraction(1)
        verdict = tr.rational_rooted_member(c, roots, scale, f)
        _emit({"verdict": verdict}, args.pretty)
        return 0
    if args.a is not None:
        verdict = tr.quadratic_member(c, parse_rational(args.a), f)
        _emit({"verdict": verdict}, args.pretty)
        return 0
    raise UnsupportedCaseError("need --ideal-roots or --a")


def _cmd_classify(args) -> int:
    _emit(ed.classify_case(parse_polynomial(args.w)).to_json_dict(), args.pretty)
    return 0


def _cmd_ms_classify(args) -> int:
    try:
        spec = json.loads(args.spec)
    except json.JSONDecodeError as exc:
        raise ValueError("malformed JSON: %s" % (exc,)) from exc
    s = ms.ExponentSet.from_json_dict(spec)
    verdict = ms.classify_homogeneous(s, 0 in s, s.is_finite)
    _emit(verdict.to_json_dict(), args.pretty)
    return 0


def _parse_coeff_samples(text: str):
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return [Fraction(v) for v in range(int(lo), int(hi) + 1)]
    return [parse_rational(part) for part in text.split(",") if part.strip()]


def _scan_target(text: str):
    kind, _, rest = text.partition(":")
    if kind == "ideal":
        u = parse_polynomial(rest)
        if u.is_zero:
            raise UnsupportedCaseError("the ideal generator must be nonzero")
        return lambda f: f.is_zero or u.divides(f)
    if kind == "derivative-ideal":
        u = parse_polynomial(rest)
        return lambda f: der.derivative_ideal_member(u, f).member
    if kind == "translation-quadratic":
        c_text, _, a_text = rest.partition(":")
        crit = tr.quadratic_criterion(parse_rational(c_text), parse_rational(a_text))
        return crit.contains
    if kind == "translation-roots":
        c_text, _, tail = rest.partition(":")
        lc_text, _, roots_text = tail.partition(":")
        c = parse_rational(c_text)
        scale = parse_rational(lc_text)
        roots = [parse_rational(part) for part in roots_text.split(",") if part.strip()]
        return lambda f: tr.rational_rooted_member(c, roots, scale, f)
    if kind == "bernoulli-span":
        indices = {int(part) for part in rest.split(",") if part.strip()}
        if not indices or 0 in indices:
            raise UnsupportedCaseError("span indices must be positive")

        def member(f: Polynomial) -> bool:
            coords = bern.v01_coords(f)
            return all(c == 0 for i, c in enumerate(coords) if i not in indices)

        return member
    if text.lstrip().startswith("{"):
        s = ms.ExponentSet.from_json_dict(json.loads(text))
        return ms.span_member(s)
    raise UnsupportedCaseError("unknown scan target %r" % (text,))


def _cmd_ms_radical_scan(args) -> int:
    member = _scan_target(args.target)
    samples = _parse_coeff_samples(args.coeffs)
    report = ms.radical_scan(member, args.max_degree, samples, args.window)
    _emit(
        {
            "target": args.target,
            "seed": args.seed,
            "degree_bound": report.degree_bound,
            "window": report.power_window,
            "candidates_checked": report.candidates_checked,
            "survivors": [p.to_json_dict() for p in report.survivors],
        },
        args.pretty,
    )
    return 0


def _cmd_qderiv(args) -> int:
    result = tr.quantum_derivative(parse_rational(args.h), parse_polynomial(args.f))
    _emit({"poly": result.to_json_dict()}, args.pretty)
    return 0


def _cmd_diffop(args) -> int:
    result = tr.forward_difference(parse_polynomial(args.f))
    _emit({"poly": result.to_json_dict()}, args.pretty)
    return 0


def _cmd_verify(args) -> int:
    limits = Limits(
        max_degree=args.max_degree, window=args.window, sample_count=args.samples
    )
    report = run_verify(args.suite, seed=args.seed, limits=limits)
    _emit(report.to_json_dict(), args.pretty)
    return 4 if report.failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="derivimage",
        description="Exact images of ideals of Q[x] under derivations and "
        "E-derivations; Bernoulli machinery; Mathieu-subspace classification.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli machinery")
    p.add_argument("what", choices=["num", "poly", "dpoly", "cvs"])
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_bernoulli)

    image = sub.add_parser("image", help="image membership and shapes")
    image_sub = image.add_subparsers(dest="operator", required=True)

    p = image_sub.add_parser("derivation", parents=[common])
    p.add_argument("--a", required=True, help="weight polynomial (the map is a*d/dx)")
    p.add_argument("--ideal", help="ideal generator u (defaults to the whole algebra)")
    p.add_argument("--member", help="polynomial to test")
    p.add_argument("--shape", action="store_true", help="report the image shape")
    p.set_defaults(func=_cmd_image_derivation)

    p = image_sub.add_parser("ederivation", parents=[common])
    p.add_argument("--w", required=True, help="image of x under the endomorphism")
    p.add_argument("--member", required=True, help="polynomial to test")
    p.add_argument("--ideal", help="ideal generator u (defaults to the whole algebra)")
    p.add_argument("--gbound", type=int, help="preimage-factor degree cap")
    p.set_defaults(func=_cmd_image_ederivation)

    p = image_sub.add_parser("translation", parents=[common])
    p.add_argument("--c", required=True, help="translation step (nonzero rational)")
    p.add_argument("--ideal-roots", help="comma-separated rational roots of the generator")
    p.add_argument("--lc", help="leading coefficient of the generator")
    p.add_argument("--a", help="quadratic generator parameter: u = x^2 - a*x")
    p.add_argument("--member", help="polynomial to test")
    p.add_argument("--shape", action="store_true", help="report the image shape")
    p.set_defaults(func=_cmd_image_translation)

    p = sub.add_parser("classify", parents=[common], help="classify an endomorphism by w")
    p.add_argument("--w", required=True)
    p.set_defaults(func=_cmd_classify)

    msp = sub.add_parser("ms", help="Mathieu-subspace tools")
    ms_sub = msp.add_subparsers(dest="action", required=True)

    p = ms_sub.add_parser("classify", parents=[common])
    p.add_argument("--spec", required=True, help="exponent-set JSON")
    p.set_defaults(func=_cmd_ms_classify)

    p = ms_sub.add_parser("radical-scan", parents=[common])
    p.add_argument("--target", required=True,
                   help="ideal:<poly> | derivative-ideal:<poly> | "
                        "translation-quadratic:<c>:<a> | "
                        "translation-roots:<c>:<lc>:<r1,r2,...> | "
                        "bernoulli-span:<i,j,...> | exponent-set JSON")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--coeffs", default="-2..2", help='"lo..hi" or comma list')
    p.add_argument("--window", type=int, default=10)
    p.add_argument("--seed", type=int, default=0,
                   help="recorded in the report; the scan itself is exhaustive")
    p.set_defaults(func=_cmd_ms_radical_scan)

    p = sub.add_parser("qderiv", parents=[common], help="quantum derivative")
    p.add_argument("--h", required=True)
    p.add_argument("--f", required=True)
    p.set_defaults(func=_cmd_qderiv)

    p = sub.add_parser("diffop", parents=[common], help="forward difference")
    p.add_argument("--f", required=True)
    p.set_defaults(func=_cmd_diffop)

    p = sub.add_parser("verify", parents=[common], help="run the verification suites")
    p.add_argument("--suite", default="all",
                   help="bernoulli, cvs, derivations, ederivations, translation, mathieu, all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--window", type=int)
    p.add_argument("--samples", type=int)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except PolynomialSyntaxError as exc:
        print("parse error: %s" % (exc,), file=sys.stderr)
        return 2
    except UnsupportedCaseError as exc:
        print("unsupported: %s" % (exc,), file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
