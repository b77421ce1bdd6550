"""Command-line surface: compute rules, verify reference tables, integrate.

Subcommands
    coeffs        nodes, weights, decay parameters and norm of a rule
    norm          both norm routes and their agreement
    integrate     apply a rule to function samples (file or stdin)
    verify        recompute a built-in reference table and compare digits
    oracle-check  max deviation between the pipeline and the dense solver

Exit codes: 0 success, 1 usage/configuration error, 2 numerical failure
(precision exhausted / singular system), 3 verification mismatch.
All reals are emitted as decimal strings at --digits significant digits,
so output is deterministic and byte-identical across runs.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf, workprec

from .ef_roots import PrecisionConfig, PrecisionExhausted, RootCountMismatch
from .error_norm import norm_report, norm_squared_closed
from .golden_tables import TABLES, GoldenTable, table_ids
from .optimal_solver import (
    OptimalFormula,
    QuadratureSpec,
    SingularSystem,
    optimal_formula,
)
from . import oracle as oracle_mod

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_MISMATCH = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise _UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    command: str
    m: int | None
    N: int | None
    etas: tuple
    precision_bits: int
    output_format: str
    digits: int


def fraction_to_str(fr: Fraction) -> str:
    """Exact decimal string when the denominator is 2^a 5^b, else num/den."""
    den = fr.denominator
    two = five = 0
    while den % 2 == 0:
        den //= 2
        two += 1
    while den % 5 == 0:
        den //= 5
        five += 1
    if den != 1:
        return f"{fr.numerator}/{fr.denominator}"
    shift = max(two, five)
    scaled = fr.numerator * 10**shift // fr.denominator
    if shift == 0:
        return str(scaled)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(shift + 1, "0")
    return f"{sign}{digits[:-shift]}.{digits[-shift:]}"


def fmt(x, digits: int) -> str:
    return mpmath.nstr(x, digits)


def _sig_info(value_str: str) -> tuple[int, int]:
    """(exponent of leading significant digit, count of printed digits)."""
    s = value_str.lstrip("-")
    if "." not in s:
        raise ValueError(f"unexpected reference format: {value_str}")
    int_part, frac = s.split(".")
    if int_part.strip("0"):
        raise ValueError(f"unexpected reference format: {value_str}")
    lead = len(frac) - len(frac.lstrip("0"))
    return -(lead + 1), len(frac) - lead


def printed_tolerance(value_str: str, flagged: bool = False):
    """Five units in the last compared digit of a printed value.

    Values printed with 20 digits compare at the 19th significant digit;
    flagged (over-long) entries compare one digit looser; shorter prints
    compare at their own final digit.
    """
    e, sig = _sig_info(value_str)
    compare = min(18 if flagged else 19, sig)
    return 5 * mpf(10) ** (e - (compare - 1))


def rounded_matches(x, printed: str) -> bool:
    """True when x agrees with a printed constant to its own resolution."""
    e, sig = _sig_info(printed)
    tol = mpf("0.75") * mpf(10) ** (e - (sig - 1))
    return abs(x - mpf(printed)) <= tol


def _build_parser() -> _Parser:
    p = _Parser(prog="sardquad", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_instance=True):
        if need_instance:
            sp.add_argument("--m", type=int, required=True, help="smoothness order (>= 2)")
            sp.add_argument("--N", type=int, required=True, help="node count parameter")
            sp.add_argument(
                "--eta",
                action="append",
                default=None,
                metavar="OFFSET",
                help="boundary offset; repeat for the full boundary layout",
            )
        sp.add_argument("--bits", type=int, default=256, help="binary working precision")
        sp.add_argument(
            "--format",
            choices=("json", "csv", "text"),
            default="text",
            dest="output_format",
        )
        sp.add_argument("--digits", type=int, default=20, help="printed significant digits")

    common(sub.add_parser("coeffs", help="compute nodes, weights and norm"))
    common(sub.add_parser("norm", help="norm by both routes plus agreement"))
    sp = sub.add_parser("integrate", help="apply the rule to samples")
    common(sp)
    sp.add_argument("--samples", help="file with one decimal per line (default stdin)")
    sp = sub.add_parser("verify", help="check a built-in reference table")
    common(sp, need_instance=False)
    sp.add_argument("--table", required=True, help="table id, e.g. table1 or sard_n4")
    sp = sub.add_parser("oracle-check", help="pipeline vs dense reference solver")
    common(sp)
    sp.add_argument("--tol", default="1e-25", help="acceptable max deviation")
    return p


def _parse_etas(raw) -> tuple:
    if not raw:
        raise _UsageError("at least one --eta offset is required")
    out = []
    for item in raw:
        try:
            out.append(Fraction(item))
        except (ValueError, ZeroDivisionError):
            raise _UsageError(f"cannot parse --eta value {item!r}") from None
    return tuple(out)


def _make_spec(args) -> QuadratureSpec:
    try:
        return QuadratureSpec(m=args.m, N=args.N, etas=_parse_etas(args.eta))
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _make_prec(args) -> PrecisionConfig:
    try:
        prec = PrecisionConfig(working_bits=args.bits)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if args.digits < 1 or args.digits > prec.decimal_digits:
        raise _UsageError(
            f"--digits must be in [1, {prec.decimal_digits}] at {args.bits} bits"
        )
    return prec


def _formula_payload(formula: OptimalFormula, digits: int) -> dict:
    spec = formula.spec
    return {
        "m": spec.m,
        "N": spec.N,
        "etas": [fraction_to_str(e) for e in spec.etas],
        "precision_bits": formula.prec.working_bits,
        "roots": [fmt(q, digits) for q in formula.roots],
        "d": [fmt(d, digits) for d in formula.d],
        "coefficients": [fmt(c, digits) for c in formula.coefficients],
        "norm_squared": fmt(formula.norm_squared, digits),
        "norm": fmt(formula.norm, digits),
    }


def _emit_coeffs(formula: OptimalFormula, args, out) -> None:
    digits = args.digits
    if args.output_format == "json":
        out.write(json.dumps(_formula_payload(formula, digits), indent=2) + "\n")
    elif args.output_format == "csv":
        out.write("beta,x_beta,C_beta\n")
        for b, (x, c) in enumerate(zip(formula.nodes, formula.coefficients)):
            out.write(f"{b},{fmt(x, digits)},{fmt(c, digits)}\n")
    else:
        spec = formula.spec
        out.write(
            f"m={spec.m} N={spec.N} etas={','.join(fraction_to_str(e) for e in spec.etas)} "
            f"bits={formula.prec.working_bits}\n"
        )
        for b, (x, c) in enumerate(zip(formula.nodes, formula.coefficients)):
            out.write(f"C[{b:>4}]  x={fmt(x, digits):<{digits + 6}} {fmt(c, digits)}\n")
        out.write(f"norm_squared = {fmt(formula.norm_squared, digits)}\n")
        out.write(f"norm         = {fmt(formula.norm, digits)}\n")


def cmd_coeffs(args, out) -> int:
    spec = _make_spec(args)
    prec = _make_prec(args)
    formula = optimal_formula(spec, prec)
    with workprec(prec.working_bits):
        formula.norm_squared = norm_squared_closed(formula, formula.roots)
        formula.norm = mpmath.sqrt(formula.norm_squared)
    _emit_coeffs(formula, args, out)
    return EXIT_OK


def cmd_norm(args, out) -> int:
    spec = _make_spec(args)
    prec = _make_prec(args)
    formula = optimal_formula(spec, prec)
    rep = norm_report(formula)
    digits = args.digits
    rows = {
        "norm_squared_closed": fmt(rep.norm_squared_closed, digits),
        "norm_squared_direct": fmt(rep.norm_squared_direct, digits),
        "norm": fmt(rep.norm, digits),
        "agreement": fmt(rep.agreement, 3),
    }
    if args.output_format == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    elif args.output_format == "csv":
        out.write("quantity,value\n")
        for k, v in rows.items():
            out.write(f"{k},{v}\n")
    else:
        for k, v in rows.items():
            out.write(f"{k} = {v}\n")
    return EXIT_OK


def _read_samples(args):
    if args.samples:
        with open(args.samples, "r", encoding="ascii") as fh:
            lines = fh.read().split()
    else:
        lines = sys.stdin.read().split()
    try:
        with workprec(args.bits):
            return [mpf(tok) for tok in lines]
    except ValueError:
        raise _UsageError("samples must be decimal numbers, one per line") from None


def cmd_integrate(args, out) -> int:
    spec = _make_spec(args)
    prec = _make_prec(args)
    samples = _read_samples(args)
    if len(samples) != spec.N + 1:
        raise _UsageError(
            f"expected {spec.N + 1} samples (one per node), got {len(samples)}"
        )
    formula = optimal_formula(spec, prec)
    with workprec(prec.working_bits):
        total = mpf(0)
        for c, s in zip(formula.coefficients, samples):
            total += c * s
    val = fmt(total, args.digits)
    if args.output_format == "json":
        out.write(json.dumps({"integral": val}) + "\n")
    elif args.output_format == "csv":
        out.write(f"integral,{val}\n")
    else:
        out.write(val + "\n")
    return EXIT_OK


def _verify_table(table: GoldenTable, args, out) -> int:
    prec = _make_prec(args)
    spec = QuadratureSpec(m=table.m, N=table.N, etas=(Fraction(table.eta0),))
    formula = optimal_formula(spec, prec)
    bits = prec.working_bits
    entries = []
    worst = mpf(0)
    ok = True
    with workprec(bits):
        for idx, printed in table.entries:
            computed = formula.coefficients[idx]
            tol = printed_tolerance(printed, flagged=idx in table.flagged)
            dev = abs(computed - mpf(printed))
            worst = max(worst, dev)
            passed = dev <= tol
            ok &= passed
            entries.append(
                {
                    "index": idx,
                    "printed": printed,
                    "computed": fmt(computed, args.digits),
                    "deviation": fmt(dev, 3),
                    "tolerance": fmt(tol, 3),
                    "pass": bool(passed),
                }
            )
        filter_report = None
        if not table.full:
            h = mpf(1) / table.N
            cut = mpf("1e-8")
            found = [
                b
                for b in range(table.N // 2 + 1)
                if abs(formula.coefficients[b] - h) > cut
            ]
            listed = [idx for idx, _ in table.entries]
            filter_ok = found == listed
            ok &= filter_ok
            filter_report = {
                "listed_indices": listed,
                "boundary_layer_indices": found,
                "pass": bool(filter_ok),
            }
        norm_check = None
        if table.norm_text is not None:
            norm_val = mpmath.sqrt(norm_squared_closed(formula, formula.roots, bits))
            norm_ok = rounded_matches(norm_val, table.norm_text)
            ok &= norm_ok
            norm_check = {
                "printed": table.norm_text,
                "computed": fmt(norm_val, args.digits),
                "pass": bool(norm_ok),
            }
    report = {
        "table": table.table_id,
        "m": table.m,
        "N": table.N,
        "eta0": table.eta0,
        "max_deviation": fmt(worst, 3),
        "entries": entries,
        "boundary_filter": filter_report,
        "norm": norm_check,
        "pass": bool(ok),
    }
    if args.output_format == "json":
        out.write(json.dumps(report, indent=2) + "\n")
    elif args.output_format == "csv":
        out.write("index,printed,computed,deviation,tolerance,pass\n")
        for e in entries:
            out.write(
                f"{e['index']},{e['printed']},{e['computed']},"
                f"{e['deviation']},{e['tolerance']},{e['pass']}\n"
            )
    else:
        out.write(f"table {table.table_id}: m={table.m} N={table.N} eta0={table.eta0}\n")
        for e in entries:
            mark = "ok  " if e["pass"] else "FAIL"
            out.write(
                f"  {mark} C[{e['index']:>3}] printed={e['printed']} "
                f"computed={e['computed']} dev={e['deviation']}\n"
            )
        if filter_report is not None:
            mark = "ok  " if filter_report["pass"] else "FAIL"
            out.write(f"  {mark} boundary-layer index set matches listing\n")
        if norm_check is not None:
            mark = "ok  " if norm_check["pass"] else "FAIL"
            out.write(
                f"  {mark} norm printed={norm_check['printed']} "
                f"computed={norm_check['computed']}\n"
            )
        out.write(f"max deviation {report['max_deviation']}: "
                  f"{'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args, out) -> int:
    table = TABLES.get(args.table)
    if table is None:
        raise _UsageError(
            f"unknown table id {args.table!r}; known: {', '.join(table_ids())}"
        )
    return _verify_table(table, args, out)


def cmd_oracle_check(args, out) -> int:
    spec = _make_spec(args)
    prec = _make_prec(args)
    if spec.N + 1 + spec.m > oracle_mod.SIZE_GUARD:
        raise _UsageError(
            f"instance too large for the dense reference solve "
            f"(N+1+m must be <= {oracle_mod.SIZE_GUARD})"
        )
    with workprec(prec.working_bits):
        tol = mpf(args.tol)
    formula = optimal_formula(spec, prec)
    reference = oracle_mod.solve_full_system(spec, prec)
    dev = oracle_mod.check_against_formula(reference, formula)
    ok = dev <= tol
    rows = {
        "max_deviation": fmt(dev, 6),
        "tolerance": fmt(tol, 6),
        "solver_residual": fmt(reference.residual, 3),
        "pass": bool(ok),
    }
    if args.output_format == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    elif args.output_format == "csv":
        out.write("quantity,value\n")
        for k, v in rows.items():
            out.write(f"{k},{v}\n")
    else:
        for k, v in rows.items():
            out.write(f"{k} = {v}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


_COMMANDS = {
    "coeffs": cmd_coeffs,
    "norm": cmd_norm,
    "integrate": cmd_integrate,
    "verify": cmd_verify,
    "oracle-check": cmd_oracle_check,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionExhausted, SingularSystem, RootCountMismatch) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
