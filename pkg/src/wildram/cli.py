"""Command-line entry point: ``wildram <subcommand> ...``.

Exit codes: 0 positive verdict or success, 1 negative verdict or failed
check, 2 usage, parse or rejected input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict

from .census import DEFAULT_CAP, CensusTooLarge, census, write_csv
from .criterion import (classify_involution_square, classify_two_ramified,
                        predict_leading_term, rejected, square)
from .errors import OddPrimeRequired, WildramError
from .exact import PrimeField
from .identities import verify_identities
from .ramification import ramification_sequence
from .recurrence import abc_closed, abc_iterate
from .series import TruncatedSeries, iterate, parse_series

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, out):
    out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _load_series(args):
    g = parse_series(args.series, args.p)
    if getattr(args, "square", False):
        g = square(g)
    return g


def cmd_classify(args, out) -> int:
    if args.p == 2:
        _emit(rejected(2).as_dict(), out)
        return EXIT_USAGE
    g = parse_series(args.series, args.p)
    if args.involution:
        result = classify_involution_square(g)
    else:
        if args.square:
            g = square(g)
        result = classify_two_ramified(g)
    _emit(result.as_dict(), out)
    return EXIT_OK if result.is_two_ramified else EXIT_NEGATIVE


def cmd_ramify(args, out) -> int:
    if args.levels > 2 and args.precision is None:
        raise UsageError("--levels above 2 needs an explicit --precision")
    g = _load_series(args)
    text = args.series + (" (squared)" if args.square else "")
    report = ramification_sequence(g, args.levels, args.precision, description=text)
    _emit(report.as_dict(), out)
    return EXIT_OK


def _check_prediction(g):
    p = g.ring.p
    exponent, predicted = predict_leading_term(g)
    gp = iterate(g, p, exponent) - TruncatedSeries.identity(g.ring)
    observed = {k: gp[k] for k in (exponent - 2, exponent - 1, exponent)}
    ok = observed[exponent - 2] == 0 and observed[exponent - 1] == 0 \
        and observed[exponent] == predicted.residue
    return exponent, predicted, observed, ok


def cmd_predict(args, out) -> int:
    if args.seed is not None:
        rng = random.Random(args.seed)
        F = PrimeField(args.p)
        F.p.require_odd()
        failures = []
        for _ in range(args.samples):
            a = [rng.randrange(1, F.p), rng.randrange(F.p), rng.randrange(F.p)]
            g = TruncatedSeries([0, 1, 0, *a], F)
            if not _check_prediction(g)[3]:
                failures.append(a)
        _emit({"p": int(F.p), "seed": args.seed, "samples": args.samples,
               "mismatches": len(failures), "failing_coefficients": failures}, out)
        return EXIT_OK if not failures else EXIT_NEGATIVE
    if args.series is None:
        raise UsageError("predict needs --series or --seed")
    g = _load_series(args)
    exponent, predicted, observed, ok = _check_prediction(g)
    _emit({"p": int(g.ring.p), "series": args.series, "exponent": exponent,
           "predicted": predicted.residue,
           "observed": {str(k): v for k, v in observed.items()}, "agrees": ok}, out)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_symbolic(args, out) -> int:
    if args.level < 1:
        raise UsageError("--level must be >= 1")
    closed = abc_closed(args.level)
    agrees = closed == abc_iterate(args.level)
    polys = {"A": closed.A, "B": closed.B, "C": closed.C}
    if args.mod is not None:
        polys = {k: v.reduce(args.mod) for k, v in polys.items()}
    if args.format == "json":
        _emit({"level": args.level, "mod": args.mod, "iteration_agrees": agrees,
               **{k: str(v) for k, v in polys.items()}}, out)
    else:
        for k, v in polys.items():
            out.write(f"{k}_{args.level} = {v}\n")
    return EXIT_OK if agrees else EXIT_NEGATIVE


def cmd_verify_identities(args, out) -> int:
    report = verify_identities(args.max_n, args.max_p)
    _emit(report, out)
    return EXIT_OK if all(r["status"] == "pass" for r in report) else EXIT_NEGATIVE


def cmd_census(args, out) -> int:
    rows = list(census(args.p, with_a1=args.with_a1, cap=args.cap))
    if args.format == "json":
        _emit([asdict(r) for r in rows], out)
    else:
        write_csv(rows, out)
    return EXIT_OK if all(r.agreement for r in rows) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wildram",
        description="Lower ramification numbers and 2-ramification of power series over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)

    def series_args(sp, required=True):
        sp.add_argument("--p", type=int, required=True, help="prime characteristic")
        sp.add_argument("--series", required=required,
                        help='series literal, e.g. "z + z^3 + 2*z^4"')
        sp.add_argument("--square", action="store_true", help="analyse f∘f instead of f")

    sp = sub.add_parser("classify", help="closed-form 2-ramification verdict")
    series_args(sp)
    sp.add_argument("--involution", action="store_true",
                    help="series has linear coefficient -1; classify its square")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("ramify", help="brute-force lower ramification numbers")
    series_args(sp)
    sp.add_argument("--levels", type=int, default=2)
    sp.add_argument("--precision", type=int)
    sp.set_defaults(func=cmd_ramify)

    sp = sub.add_parser("predict", help="leading term of g^p - z, checked by iteration")
    series_args(sp, required=False)
    sp.add_argument("--seed", type=int, help="run a randomized self-test instead")
    sp.add_argument("--samples", type=int, default=50)
    sp.set_defaults(func=cmd_predict)

    sp = sub.add_parser("symbolic", help="print A_m, B_m, C_m")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--mod", type=int)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_symbolic)

    sp = sub.add_parser("verify-identities", help="check the double-factorial identities")
    sp.add_argument("--max-n", type=int, default=200)
    sp.add_argument("--max-p", type=int, default=97)
    sp.set_defaults(func=cmd_verify_identities)

    sp = sub.add_parser("census", help="sweep all (a2, a3, a4) with a2 != 0")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--with-a1", action="store_true", help="also sweep a1")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_census)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except OddPrimeRequired as exc:
        _emit(rejected(2).as_dict(), out)
        print(f"wildram: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, WildramError, CensusTooLarge, ValueError, TypeError) as exc:
        print(f"wildram: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

