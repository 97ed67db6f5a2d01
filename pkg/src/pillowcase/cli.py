"""Command-line front end.

Subcommands: sublattices, series, correlators, potential, verify.  Exit
codes: 0 on success, 1 when a verification finds a counterexample, 2 on
usage errors.  Output is deterministic for fixed arguments; the only
environment variable honoured is CLI_COLOR (set to 1 for coloured pretty
output), everything else is flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import lattice, orbi, oracle, potential, qseries

DEFAULT_TRUNC = 20
DEFAULT_DEGREE_CAP = 10_000

SERIES_BUILDERS = {
    "f": qseries.f_series,
    "f0": qseries.f0_series,
    "f1": qseries.f1_series,
    "f2": qseries.f2_series,
    "Dodd": qseries.divisor_series_odd,
    "Deven": qseries.divisor_series_even,
    "D4": lambda n: qseries.substitute_power(qseries.divisor_series(n), 4),
}

VERIFY_SUITES = ("oracle", "parity", "rh", "lumpsum", "closedform", "all")


def _color(text: str, code: str) -> str:
    if os.environ.get("CLI_COLOR") == "1":
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_sublattices(args) -> int:
    if args.degree < 1:
        return _usage_error(f"--degree must be a positive integer, got {args.degree}")
    if args.degree > args.degree_cap:
        return _usage_error(
            f"--degree {args.degree} exceeds the cap {args.degree_cap}; raise --degree-cap"
        )
    lats = lattice.enumerate_sublattices(args.degree)
    s1 = lattice.sigma1(args.degree)
    if args.format == "json":
        print(
            _dump(
                {
                    "degree": args.degree,
                    "count": len(lats),
                    "sigma1": s1,
                    "sublattices": [lat.to_json() for lat in lats],
                }
            )
        )
    elif args.format == "csv":
        for lat in lats:
            print(f"{lat.h},{lat.m},{lat.g},{lat.d}")
        print(f"count={len(lats)} sigma1={s1}")
    else:
        print("h m g d")
        for lat in lats:
            print(f"{lat.h} {lat.m} {lat.g} {lat.d}")
        print(f"count={len(lats)} sigma1={s1}")
    return 0


def cmd_series(args) -> int:
    if args.max_degree < 0:
        return _usage_error(f"--max-degree must be >= 0, got {args.max_degree}")
    series = SERIES_BUILDERS[args.which](args.max_degree)
    if args.format == "json":
        print(_dump(qseries.to_json(series)))
    elif args.format == "csv":
        for deg, c in enumerate(series.coeffs):
            print(f"{deg},{c}")
    else:
        print(f"{args.which}, truncated at q^{series.trunc}")
        for deg, c in enumerate(series.coeffs):
            print(f"q^{deg}: {c}")
    return 0


def _parse_insertions(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"need exactly 4 comma-separated points, got {text!r}")
    values = []
    for part in parts:
        try:
            values.append(int(part))
        except ValueError:
            raise ValueError(f"insertion {part!r} is not an integer") from None
    if any(not 1 <= v <= 4 for v in values):
        raise ValueError(f"insertions must lie in 1..4, got {text!r}")
    return tuple(orbi.OrbiPoint(v) for v in values)


def cmd_correlators(args) -> int:
    try:
        ins = _parse_insertions(args.insertions)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.max_degree < 1:
        return _usage_error(f"--max-degree must be >= 1, got {args.max_degree}")
    series = orbi.correlator_series(ins, args.max_degree)
    labels = [int(p) for p in ins]
    if args.format == "json":
        records = [
            {"insertions": labels, "degree": d, "count": int(series.coeffs[d])}
            for d in range(1, series.trunc + 1)
        ]
        print(_dump(records))
    elif args.format == "csv":
        for d in range(1, series.trunc + 1):
            print(f"{d},{series.coeffs[d]}")
    else:
        print("insertions: " + ",".join(str(v) for v in labels))
        for d in range(1, series.trunc + 1):
            print(f"q^{d}: {series.coeffs[d]}")
    return 0


def cmd_potential(args) -> int:
    if args.max_degree < 1:
        return _usage_error(f"--max-degree must be >= 1, got {args.max_degree}")
    assembled = potential.assemble_potential(args.max_degree)
    if args.compare_st:
        reference = potential.st_reference_potential(args.max_degree)
        diffs = potential.compare_potentials(assembled, reference)
        if not diffs:
            print(_color("MATCH", "32") if args.format == "pretty" else "MATCH")
            return 0
        if args.format == "json":
            print(_dump({"match": False, "diffs": [_diff_json(diff) for diff in diffs]}))
        else:
            for diff in diffs:
                where = "log_term" if diff.monomial is None else str(diff.monomial)
                deg = "-" if diff.degree is None else f"q^{diff.degree}"
                print(f"{_color('MISMATCH', '31')} {where} {deg}: {diff.lhs} != {diff.rhs}")
        return 1
    if args.format == "json":
        print(_dump(potential.potential_to_json(assembled)))
    elif args.format == "csv":
        print(f"log_term,{assembled.log_term}")
        for mono in sorted(assembled.terms):
            series = assembled.terms[mono]
            exps = ",".join(str(e) for e in mono.exponents)
            for deg, c in enumerate(series.coeffs):
                print(f"{exps},{deg},{c}")
    else:
        print(potential.potential_pretty(assembled))
    return 0


def _diff_json(diff) -> dict:
    return {
        "monomial": None if diff.monomial is None else list(diff.monomial.exponents),
        "degree": diff.degree,
        "lhs": str(diff.lhs),
        "rhs": str(diff.rhs),
    }


def _verify_checks(suite: str, dmax: int):
    if suite in ("oracle", "all"):
        cap = min(dmax, oracle.SL2_EXHAUSTIVE_MAX)
        yield f"oracle (d <= {cap})", lambda: oracle.orbit_agreement_check(cap)
    if suite in ("parity", "all"):
        yield f"parity (d <= {dmax})", lambda: oracle.image_table_check(dmax)
    if suite in ("rh", "all"):
        cap = min(dmax, oracle.RH_EXHAUSTIVE_MAX)

        def run_rh(cap=cap):
            for d in range(1, cap + 1):
                result = oracle.rh_uniqueness_check(d)
                if not result:
                    return result
            return result

        yield f"rh (d <= {cap})", run_rh
    if suite in ("lumpsum", "all"):
        yield f"lumpsum (d <= {dmax})", lambda: oracle.lumpsum_check(dmax)
    if suite in ("closedform", "all"):
        yield f"closedform (d <= {dmax})", lambda: oracle.correlator_crosscheck(dmax)


def cmd_verify(args) -> int:
    if args.max_degree < 1:
        return _usage_error(f"--max-degree must be >= 1, got {args.max_degree}")
    failed = False
    for label, run in _verify_checks(args.suite, args.max_degree):
        result = run()
        if result.ok:
            print(f"{_color('PASS', '32')} {label}")
        else:
            failed = True
            print(f"{_color('FAIL', '31')} {label}")
            print(_dump(result.counterexample))
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pillowcase",
        description="Exact sublattice counts, q-series and the potential of the pillowcase.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    p = sub.add_parser("sublattices", help="list the index-d sublattices")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
    add_format(p)
    p.set_defaults(run=cmd_sublattices)

    p = sub.add_parser("series", help="print one of the named q-series")
    p.add_argument("--which", choices=tuple(SERIES_BUILDERS), required=True)
    p.add_argument("--max-degree", type=int, default=DEFAULT_TRUNC)
    add_format(p)
    p.set_defaults(run=cmd_series)

    p = sub.add_parser("correlators", help="four-point counts for one insertion tuple")
    p.add_argument("--insertions", required=True, metavar="I,J,K,L")
    p.add_argument("--max-degree", type=int, default=DEFAULT_TRUNC)
    add_format(p)
    p.set_defaults(run=cmd_correlators)

    p = sub.add_parser("potential", help="assemble the potential from the counts")
    p.add_argument("--max-degree", type=int, default=DEFAULT_TRUNC)
    p.add_argument(
        "--compare-st",
        action="store_true",
        help="diff the assembled potential against the closed form",
    )
    add_format(p)
    p.set_defaults(run=cmd_potential)

    p = sub.add_parser("verify", help="run the brute-force cross-checks")
    p.add_argument("--suite", choices=VERIFY_SUITES, default="all")
    p.add_argument("--max-degree", type=int, default=DEFAULT_TRUNC)
    add_format(p)
    p.set_defaults(run=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())
