"""Command line interface.

Subcommands:
  check       Eisenstein test for a polynomial (all witnesses or one prime).
  shift       shifted-Eisenstein decision with a checkable certificate.
  density     density constants P_n, rho_n, tau_n, gamma_n for a degree.
  census      exact counts over a height-bounded coefficient box.
  montecarlo  seeded random sampling from a coefficient box.

Exit codes: 0 success (or YES), 1 certified NO (or "not Eisenstein" for
check), 2 usage/domain/budget error, 3 heuristic NO (shift only: the
factorization budget ran out before the decision could be certified).

Polynomials are written as comma-separated coefficients from the constant
term up, e.g. "5,4,1" for x^2 + 4x + 5.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import exact_census, monte_carlo, reports_to_csv
from .density import DEFAULT_DPS, density_report, sinh_bound_check
from .eisenstein import (
    Verdict,
    eisenstein_primes,
    is_eisenstein_with,
    naive_shift_scan,
    shifted_eisenstein,
    verify_certificate,
)
from .errors import BudgetError, DomainError
from .intpoly import parse_poly
from .primes import DEFAULT_SEED, FactorBudget, first_primes

from . import __version__

__all__ = ["build_parser", "main", "entry"]

_CERTIFIED_RETRIES = 8


def _default_seed() -> int:
    raw = os.environ.get("EISENSHIFT_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_SEED


def _add_budget_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--trial-bound",
        type=int,
        default=100_000,
        help="trial division bound for factorizations (default 100000)",
    )
    sub.add_argument(
        "--rho-iterations",
        type=int,
        default=1_000_000,
        help="iteration budget for the rho factoring stage (default 1000000)",
    )


def _add_format_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisenshift",
        description="Eisenstein and shifted-Eisenstein irreducibility tools.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    subs = parser.add_subparsers(dest="command", required=True)

    check = subs.add_parser(
        "check", help="test the Eisenstein criterion for a polynomial"
    )
    check.add_argument("poly", help="coefficients, constant term first: '5,4,1'")
    check.add_argument(
        "--prime", type=int, default=None, help="test one specific prime only"
    )
    _add_budget_args(check)
    _add_format_arg(check)

    shift = subs.add_parser(
        "shift", help="decide whether some shift f(x+s) is Eisenstein"
    )
    shift.add_argument("poly", help="coefficients, constant term first: '5,4,1'")
    shift.add_argument(
        "--oracle",
        action="store_true",
        help="use the exhaustive shift scan instead of the discriminant engine",
    )
    shift.add_argument(
        "--scan-cap",
        type=int,
        default=1_000_000,
        help="max shifts the --oracle scan may try (default 1000000)",
    )
    shift.add_argument(
        "--certified",
        action="store_true",
        help="retry with growing budgets until the answer is certified",
    )
    _add_budget_args(shift)
    _add_format_arg(shift)

    density = subs.add_parser(
        "density", help="density constants for random polynomials of one degree"
    )
    density.add_argument("--degree", type=int, required=True, help="degree n >= 2")
    density.add_argument(
        "--primes",
        type=int,
        default=10_000,
        help="number of primes in the truncated Euler products (default 10000)",
    )
    density.add_argument(
        "--dps", type=int, default=DEFAULT_DPS, help="working decimal precision"
    )
    _add_format_arg(density)

    census = subs.add_parser(
        "census", help="exact counts over the box |a_i| <= H, a_n != 0"
    )
    census.add_argument("--degree", type=int, required=True, help="degree n >= 2")
    census.add_argument("--height", type=int, required=True, help="height bound H")
    census.add_argument(
        "--enumeration-cap",
        type=int,
        default=100_000_000,
        help="refuse boxes larger than this many polynomials",
    )
    census.add_argument("--csv", default=None, help="also append a CSV row to this file")
    _add_budget_args(census)
    _add_format_arg(census)

    mc = subs.add_parser(
        "montecarlo", help="classify uniform random samples from a box"
    )
    mc.add_argument("--degree", type=int, required=True, help="degree n >= 2")
    mc.add_argument("--height", type=int, required=True, help="height bound H")
    mc.add_argument("--samples", type=int, required=True, help="number of samples")
    mc.add_argument(
        "--seed",
        type=int,
        default=None,
        help="RNG seed (default: EISENSHIFT_SEED env var, else a fixed seed)",
    )
    mc.add_argument(
        "--workers", type=int, default=1, help="parallel worker processes"
    )
    mc.add_argument(
        "--chunk-size", type=int, default=256, help="samples per RNG substream chunk"
    )
    mc.add_argument("--csv", default=None, help="also append a CSV row to this file")
    _add_budget_args(mc)
    _add_format_arg(mc)

    return parser


def _budget(args: argparse.Namespace) -> FactorBudget:
    return FactorBudget(
        trial_bound=args.trial_bound, rho_iterations=args.rho_iterations
    )


def _emit(args: argparse.Namespace, record: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _write_csv(path: str, report) -> None:
    text = reports_to_csv([report])
    if os.path.exists(path) and os.path.getsize(path) > 0:
        text = text.split("\n", 1)[1]  # keep one header per file
    with open(path, "a", encoding="utf-8") as handle:
        handle.write(text)


def _cmd_check(args: argparse.Namespace) -> int:
    f = parse_poly(args.poly)
    if args.prime is not None:
        ok = is_eisenstein_with(f, args.prime)
        record = {
            "poly": str(f),
            "coeffs": list(f.coeffs),
            "prime": args.prime,
            "eisenstein": ok,
        }
        if ok:
            lines = ["%s is Eisenstein with respect to p = %d" % (f, args.prime)]
        else:
            lines = ["%s is not Eisenstein with respect to p = %d" % (f, args.prime)]
        _emit(args, record, lines)
        return 0 if ok else 1
    witnesses = eisenstein_primes(f, _budget(args))
    ok = bool(witnesses)
    record = {
        "poly": str(f),
        "coeffs": list(f.coeffs),
        "eisenstein": ok,
        "primes": witnesses,
    }
    if ok:
        lines = [
            "%s is Eisenstein with respect to p = %s"
            % (f, ", ".join(str(p) for p in witnesses))
        ]
    else:
        lines = ["%s is not Eisenstein with respect to any prime" % f]
    _emit(args, record, lines)
    return 0 if ok else 1


def _cmd_shift(args: argparse.Namespace) -> int:
    f = parse_poly(args.poly)
    if args.oracle:
        decision = naive_shift_scan(f, scan_cap=args.scan_cap)
    else:
        budget = _budget(args)
        decision = shifted_eisenstein(f, budget)
        if args.certified:
            scale = 1
            for _ in range(_CERTIFIED_RETRIES):
                if decision.verdict is not Verdict.NO_HEURISTIC:
                    break
                scale *= 4
                decision = shifted_eisenstein(f, budget.scaled(scale))
            else:
                raise BudgetError(
                    "still uncertified after %d budget escalations"
                    % _CERTIFIED_RETRIES
                )
    record = {
        "poly": str(f),
        "coeffs": list(f.coeffs),
        "verdict": decision.verdict.value,
        "certificate": None,
        "reason": decision.reason,
        "cofactor": decision.cofactor,
        "verified": None,
    }
    if decision.verdict is Verdict.YES:
        cert = decision.certificate
        verified = verify_certificate(f, cert)
        record["certificate"] = {"shift": cert.shift, "prime": cert.prime}
        record["verified"] = verified
        flag = "verified" if verified else "VERIFICATION FAILED"
        _emit(
            args,
            record,
            [
                "YES: f(x + %d) is Eisenstein with respect to p = %d (%s)"
                % (cert.shift, cert.prime, flag)
            ],
        )
        return 0 if verified else 2
    if decision.verdict is Verdict.NO_CERTIFIED:
        _emit(args, record, ["NO (certified): %s" % decision.reason])
        return 1
    _emit(
        args,
        record,
        [
            "NO (heuristic): %s; unfactored cofactor %d"
            % (decision.reason, decision.cofactor),
            "rerun with --certified or a larger --rho-iterations to settle it",
        ],
    )
    return 3


def _cmd_density(args: argparse.Namespace) -> int:
    primes = first_primes(args.primes)
    report = density_report(args.degree, primes, dps=args.dps)
    record = report.as_record()
    partial, union = sinh_bound_check(primes, dps=args.dps)
    record["sum_inv_p2"] = float(partial)
    record["union_bound"] = float(union)
    lines = [
        "degree n = %d, first %d primes (largest %d)"
        % (report.n, report.prime_count, report.largest_prime),
        "P_n    = %s  (truncation tail < %s)"
        % (record["p_n"], record["p_n_tail"]),
        "rho_n  = %s" % record["rho"],
        "tau_n  = %s" % record["tau"],
        "gamma_n = %s" % record["gamma"],
        "sum 1/p^2 (with tail) = %.6f, union bound 2*sinh = %.6f"
        % (record["sum_inv_p2"], record["union_bound"]),
    ]
    _emit(args, record, lines)
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    report = exact_census(
        args.degree,
        args.height,
        budget=_budget(args),
        enumeration_cap=args.enumeration_cap,
    )
    record = report.as_record()
    lines = [
        "census: degree %d, height %d, %d polynomials"
        % (report.n, report.height, report.samples),
        "eisenstein          : %d" % report.eisenstein,
        "shifted eisenstein  : %d" % report.shifted,
        "eisenstein at 0 and 1: %d" % report.f_count,
    ]
    if report.ratio is not None:
        lines.append("ratio shifted/eisenstein = %.6f" % report.ratio)
    if args.csv:
        _write_csv(args.csv, report)
    _emit(args, record, lines)
    return 0


def _cmd_montecarlo(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    report = monte_carlo(
        args.degree,
        args.height,
        args.samples,
        seed=seed,
        budget=_budget(args),
        chunk_size=args.chunk_size,
        workers=args.workers,
    )
    record = report.as_record()
    lines = [
        "montecarlo: degree %d, height %d, %d samples, seed %d"
        % (report.n, report.height, report.samples, seed),
        "eisenstein          : %d" % report.eisenstein,
        "shifted eisenstein  : %d" % report.shifted,
        "eisenstein at 0 and 1: %d" % report.f_count,
        "unresolved          : %d" % report.unresolved,
    ]
    if report.ratio is not None:
        lines.append(
            "ratio shifted/eisenstein = %.4f  (95%% CI [%.4f, %.4f])"
            % (report.ratio, report.ci_low, report.ci_high)
        )
    if args.csv:
        _write_csv(args.csv, report)
    _emit(args, record, lines)
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "shift": _cmd_shift,
    "density": _cmd_density,
    "census": _cmd_census,
    "montecarlo": _cmd_montecarlo,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on --help/--version/usage errors
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, BudgetError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())