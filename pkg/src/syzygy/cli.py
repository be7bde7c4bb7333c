"""Command-line interface.

Subcommands: gb, divide, resolve, hilbert, curve, gorenstein, examples.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resampling
exhausted.  All output is deterministic for a fixed configuration and seed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import EXAMPLE_IDS, run_example
from .curves import (
    DEFAULT_PRIME,
    ResamplingExhausted,
    construct_curve,
    gorenstein_experiment,
)
from .division import divide
from .fields import field_from_spec
from .groebner import buchberger_complete, colon_generators, is_groebner, minimal_groebner
from .hilbert import (
    NotACurve,
    degree_genus,
    hilbert_numerator_monomial,
    hilbert_polynomial,
    series_coefficients,
)
from .resolution import betti_table, free_resolution
from .reports import (
    json_dumps,
    write_curve_report,
    write_gorenstein_report,
    write_json,
)
from .textio import (
    format_polynomial,
    looks_like_matrix_file,
    parse_ideal_file,
    parse_matrix_file,
)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


def _load_polynomials(path, field_spec, order):
    field = field_from_spec(field_spec)
    text = Path(path).read_text(encoding="utf-8")
    return parse_ideal_file(text, field, order)


def _emit(payload, out):
    if out:
        write_json(out, payload)
    else:
        sys.stdout.write(json_dumps(payload))


def _cmd_gb(args):
    ring, gens = _load_polynomials(args.file, args.field, args.order)
    if not gens:
        print("error: no polynomials in input", file=sys.stderr)
        return EXIT_USAGE
    if args.check_only:
        check = is_groebner(gens)
        payload = {
            "input": [format_polynomial(f) for f in gens],
            "is_groebner": check.ok,
            "divisions": check.division_count,
            "nonzero_remainders": [format_polynomial(h) for h in check.remainders],
        }
        _emit(payload, args.out)
        return EXIT_OK if check.ok else EXIT_VERIFICATION
    gb = minimal_groebner(buchberger_complete(gens))
    leads = [f.lead_monomial() for f in gb.elements]
    payload = {
        "input": [format_polynomial(f) for f in gens],
        "basis": [format_polynomial(f) for f in gb.elements],
        "lead_terms": [format_polynomial(ring.monomial(m)) for m in leads],
        "colon_table": [
            sorted(format_polynomial(ring.monomial(a)) for a in colon_generators(leads, i))
            for i in range(len(leads))
        ],
        "divisions": gb.stats.get("divisions", 0),
    }
    _emit(payload, args.out)
    return EXIT_OK


def _cmd_divide(args):
    ring, dividends = _load_polynomials(args.file, args.field, args.order)
    ring2, divisors = _load_polynomials(args.by, args.field, args.order)
    if ring2.names != ring.names:
        print("error: dividend and divisor files use different variables", file=sys.stderr)
        return EXIT_USAGE
    results = []
    for g in dividends:
        res = divide(g, divisors)
        results.append(
            {
                "dividend": format_polynomial(g),
                "quotients": [format_polynomial(q) for q in res.quotients],
                "remainder": format_polynomial(res.remainder),
            }
        )
        print(f"dividend : {format_polynomial(g)}")
        for i, q in enumerate(res.quotients):
            print(f"  q[{i}]   : {format_polynomial(q)}")
        print(f"  rem    : {format_polynomial(res.remainder)}")
    if args.out:
        write_json(args.out, {"results": results})
    return EXIT_OK


def _load_resolution_input(args):
    field = field_from_spec(args.field)
    text = Path(args.file).read_text(encoding="utf-8")
    if looks_like_matrix_file(text):
        ring, matrix = parse_matrix_file(text, field, args.order)
        return ring, matrix
    ring, gens = parse_ideal_file(text, field, args.order)
    return ring, gens


def _cmd_resolve(args):
    ring, presentation = _load_resolution_input(args)
    res = free_resolution(
        presentation, minimal=args.minimal, max_length=args.max_length
    )
    bt = betti_table(res)
    payload = {
        "minimal": args.minimal,
        "ranks": res.ranks(),
        "twists": [sorted(res.twists(i)) for i in range(res.length + 1)],
        "betti": bt.to_triples(),
        "numerator": bt.numerator(),
    }
    print("ranks :", " <- ".join(str(r) for r in res.ranks()))
    if args.betti:
        print(bt.render())
    _emit(payload, args.out)
    return EXIT_OK


def _cmd_hilbert(args):
    ring, gens = _load_polynomials(args.file, args.field, args.order)
    gb = minimal_groebner(buchberger_complete(gens))
    num = hilbert_numerator_monomial(gb)
    payload = {"numerator": num, "nvars": ring.nvars}
    if args.function:
        try:
            lo, hi = (int(t) for t in args.function.split(".."))
        except ValueError:
            print("error: --function expects a range like 0..6", file=sys.stderr)
            return EXIT_USAGE
        values = series_coefficients(num, ring.nvars, hi)
        payload["function"] = [[n, values[n]] for n in range(lo, hi + 1)]
    if args.polynomial:
        hp = hilbert_polynomial(num, ring.nvars)
        payload["polynomial"] = [str(c) for c in hp]
        try:
            d, g = degree_genus(gb)
            payload["degree_genus"] = [d, g]
        except NotACurve as exc:
            payload["degree_genus"] = None
            payload["degree_genus_note"] = str(exc)
    _emit(payload, args.out)
    return EXIT_OK


def _cmd_curve(args):
    try:
        report, logs = construct_curve(
            args.d,
            args.g,
            p=args.p,
            seed=args.seed,
            attempts=args.attempts,
            require_smooth=not args.allow_singular,
        )
    except ResamplingExhausted as exc:
        payload = {
            "outcome": "exhausted",
            "attempts": exc.attempts,
            "config": {"d": args.d, "g": args.g, "p": args.p, "seed": args.seed},
        }
        _emit(payload, args.out and str(Path(args.out).with_suffix(".failed.json")))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(
        f"curve of degree {report.degree}, genus {report.genus} over "
        f"F_{report.prime} (seed {report.seed}); smoothness: {report.smoothness}"
    )
    for row in report.hilbert_table:
        print(
            f"  n={row['n']}: h1(I)={row['h1_ideal']:>3} h0(O_C)={row['h0_curve']:>4} "
            f"h0(O)={row['h0_ambient']:>4} h0(I)={row['h0_ideal']:>4}"
        )
    if args.out:
        files = write_curve_report(report, args.out, attempts=logs)
        print("wrote: " + ", ".join(str(f) for f in files))
    else:
        sys.stdout.write(json_dumps({"report": report.to_dict(), "attempts": logs}))
    return EXIT_OK


def _cmd_gorenstein(args):
    result = gorenstein_experiment(args.g, p=args.p, trials=args.trials, seed=args.seed)
    hist = result.to_dict()["histogram"]
    print(
        f"genus {args.g}: {result.accepted} accepted / {args.trials} trials; "
        f"counts: {hist}"
    )
    if args.out:
        files = write_gorenstein_report(result, args.out)
        print("wrote: " + ", ".join(str(f) for f in files))
    else:
        sys.stdout.write(json_dumps({"experiment": result.to_dict()}))
    return EXIT_OK


def _cmd_examples(args):
    ids = EXAMPLE_IDS if args.id == "all" else (args.id,)
    all_ok = True
    results = []
    for ex in ids:
        out = run_example(ex)
        results.append(out)
        status = "ok" if out["ok"] else "MISMATCH"
        print(f"{ex}: {status}")
        if not out["ok"]:
            all_ok = False
            for key, diff in out["diffs"].items():
                print(f"  {key}: expected {diff['expected']}, got {diff['actual']}")
    if args.out:
        write_json(args.out, {"examples": results})
    return EXIT_OK if all_ok else EXIT_VERIFICATION


def build_parser():
    parser = argparse.ArgumentParser(
        prog="syzygy",
        description=(
            "Exact Groebner bases, syzygies, free resolutions, Hilbert series, "
            "and random space curves over prime fields."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--order", default="degrevlex",
                       choices=["lex", "deglex", "degrevlex"])
        p.add_argument("--field", default=f"fp:{DEFAULT_PRIME}",
                       help="q for rationals, fp:<p> for a prime field")
        p.add_argument("--out", default=None, help="write JSON here")

    p_gb = sub.add_parser("gb", help="verify or complete a Groebner basis")
    p_gb.add_argument("file")
    p_gb.add_argument("--check-only", action="store_true")
    common(p_gb)
    p_gb.set_defaults(fn=_cmd_gb)

    p_div = sub.add_parser("divide", help="division with remainder")
    p_div.add_argument("file")
    p_div.add_argument("--by", required=True)
    common(p_div)
    p_div.set_defaults(fn=_cmd_divide)

    p_res = sub.add_parser("resolve", help="compute a graded free resolution")
    p_res.add_argument("file")
    p_res.add_argument("--minimal", action="store_true")
    p_res.add_argument("--betti", action="store_true")
    p_res.add_argument("--max-length", type=int, default=None)
    common(p_res)
    p_res.set_defaults(fn=_cmd_resolve)

    p_hil = sub.add_parser("hilbert", help="Hilbert numerator / function / polynomial")
    p_hil.add_argument("file")
    p_hil.add_argument("--function", default=None, metavar="a..b")
    p_hil.add_argument("--polynomial", action="store_true")
    common(p_hil)
    p_hil.set_defaults(fn=_cmd_hilbert)

    p_cur = sub.add_parser("curve", help="construct and verify a random space curve")
    p_cur.add_argument("--d", type=int, required=True)
    p_cur.add_argument("--g", type=int, required=True)
    p_cur.add_argument("--p", type=int, default=DEFAULT_PRIME)
    p_cur.add_argument("--seed", type=int, default=42)
    p_cur.add_argument("--attempts", type=int, default=10)
    p_cur.add_argument("--allow-singular", action="store_true")
    p_cur.add_argument("--out", default=None)
    p_cur.set_defaults(fn=_cmd_curve)

    p_gor = sub.add_parser("gorenstein", help="apolar cubic-generator experiment")
    p_gor.add_argument("--g", type=int, required=True)
    p_gor.add_argument("--p", type=int, default=DEFAULT_PRIME)
    p_gor.add_argument("--trials", type=int, default=200)
    p_gor.add_argument("--seed", type=int, default=7)
    p_gor.add_argument("--out", default=None)
    p_gor.set_defaults(fn=_cmd_gorenstein)

    p_ex = sub.add_parser("examples", help="replay the built-in worked examples")
    p_ex.add_argument("--id", default="all", choices=list(EXAMPLE_IDS) + ["all"])
    p_ex.add_argument("--out", default=None)
    p_ex.set_defaults(fn=_cmd_examples)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotACurve as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
