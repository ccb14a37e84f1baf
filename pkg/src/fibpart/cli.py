"""Command-line front end.

Every pipeline is exposed as a subcommand with deterministic output: fixed
orderings everywhere, floats printed with 12 significant digits in text
tables and as shortest round-trip decimals in JSON/CSV, exact integers as
decimal strings. Exit status is 0 on success, 1 when a verification
reports failures, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import automata, gsr, numeration, powersums, spectral
from .exactlin import IntPolynomial

__all__ = ["main", "build_parser"]


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _resolve_output(path: str | None) -> Path | None:
    if path is None:
        return None
    p = Path(path)
    base = os.environ.get("FIBPART_OUTPUT_DIR")
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _emit(text: str, output: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    target = _resolve_output(output)
    if target is None:
        sys.stdout.write(text)
    else:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text)


def _parse_precision(text: str) -> Fraction:
    value = Fraction(text) if "/" in text else Fraction(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("precision must be positive")
    return value


def _report_text(report) -> str:
    return "\n".join(report.lines()) + "\n"


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_rf(args) -> int:
    value = numeration.count_partitions(args.n)
    if args.format == "json":
        _emit(_json_text({"n": str(args.n), "count": str(value)}), args.output)
    else:
        _emit(str(value), args.output)
    return 0


def _cmd_powersum(args) -> int:
    value = powersums.power_sum_direct(args.p, args.n, cap=args.cap)
    if args.format == "json":
        _emit(
            _json_text({"p": args.p, "n": str(args.n), "sum": str(value)}),
            args.output,
        )
    else:
        _emit(str(value), args.output)
    return 0


def _cmd_series(args) -> int:
    series = powersums.scaling_series(args.p, args.ell_max)
    if args.format == "json":
        payload = {
            "p": series.p,
            "rows": [
                {"ell": ell, "cutoff": str(n), "sum": str(s), "ratio": r}
                for ell, n, s, r in series.rows()
            ],
        }
        _emit(_json_text(payload), args.output)
    elif args.format == "text":
        lines = [f"{'ell':>4}  {'cutoff':>14}  {'sum':>28}  ratio"]
        for ell, n, s, r in series.rows():
            lines.append(f"{ell:>4}  {n:>14}  {s:>28}  {_fmt(r)}")
        _emit("\n".join(lines), args.output)
    else:
        lines = ["ell,cutoff,sum,ratio"]
        for ell, n, s, r in series.rows():
            lines.append(f"{ell},{n},{s},{r!r}")
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_automaton(args) -> int:
    dfa = automata.accessible_product(args.p)
    if args.minimize:
        dfa = automata.minimize(dfa)
    if args.dot:
        _emit(automata.export_dot(dfa), args.output)
    elif args.json:
        _emit(_json_text(automata.to_json_dict(dfa)), args.output)
    else:
        lines = [
            f"p: {dfa.p}",
            f"states: {dfa.n_states}",
            f"edges: {dfa.n_edges}",
            f"initial: {dfa.states[dfa.initial]}",
            f"accepting: {', '.join(dfa.states[i] for i in sorted(dfa.accepting))}",
        ]
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_verify_claims(args) -> int:
    report = automata.verify_transition_claims(args.p)
    _emit(_report_text(report), args.output)
    return 0 if report.passed else 1


def _cmd_lambda(args) -> int:
    record = spectral.compute_lambda(args.p, precision=args.precision)
    if args.format == "json":
        _emit(_json_text(record.to_json()), args.output)
    else:
        lines = [
            f"p: {record.p}",
            f"lambda: {_fmt(record.value)}",
            f"interval: [{record.root.lo}, {record.root.hi}]",
            f"annihilator: {record.annihilator}",
            f"annihilator degree: {record.annihilator.degree}",
        ]
        if record.table_poly_verified is not None:
            lines.append(
                "reference polynomial check: "
                + ("ok" if record.table_poly_verified else "FAIL")
            )
            lines.append(
                "reference digits check: "
                + ("ok" if record.table_value_matched else "FAIL")
            )
        _emit("\n".join(lines), args.output)
    return 0


def _table1_record(p: int):
    return spectral.compute_lambda(p)


def _cmd_table1(args) -> int:
    ps = list(range(1, args.pmax + 1))
    if args.parallelism > 1:
        with ProcessPoolExecutor(max_workers=args.parallelism) as pool:
            records = list(pool.map(_table1_record, ps))
    else:
        records = [_table1_record(p) for p in ps]
    ok = all(r.table_poly_verified and r.table_value_matched for r in records)
    if args.format == "json":
        _emit(_json_text([r.to_json() for r in records]), args.output)
    else:
        width = max(len(str(spectral.reference_polynomial(p))) for p in ps)
        lines = [f"{'p':>2}  {'lambda':<14}  {'minimal polynomial':<{width}}  checks"]
        for r in records:
            poly = str(spectral.reference_polynomial(r.p))
            status = "ok" if (r.table_poly_verified and r.table_value_matched) else "FAIL"
            lines.append(f"{r.p:>2}  {_fmt(r.value):<14}  {poly:<{width}}  {status}")
        _emit("\n".join(lines), args.output)
    return 0 if ok else 1


def _cmd_gsr_rhok(args) -> int:
    family = gsr.berstel_family()
    rows = [
        gsr.rho_k(family, k, skip_consecutive_ones=not args.all_words)
        for k in range(1, args.kmax + 1)
    ]
    if args.format == "json":
        payload = [
            {"k": e.k, "rho": e.rho, "normalized": e.normalized, "witness": e.witness}
            for e in rows
        ]
        _emit(_json_text(payload), args.output)
    elif args.format == "text":
        lines = [f"{'k':>3}  {'rho_k':<16}  {'rho_k^(1/k)':<16}  witness"]
        for e in rows:
            lines.append(
                f"{e.k:>3}  {_fmt(e.rho):<16}  {_fmt(e.normalized):<16}  {e.witness}"
            )
        _emit("\n".join(lines), args.output)
    else:
        lines = ["k,rho,normalized,witness"]
        for e in rows:
            lines.append(f"{e.k},{e.rho!r},{e.normalized!r},{e.witness}")
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_gsr_kron(args) -> int:
    normalized = gsr.kronecker_radius(gsr.berstel_family(), args.p)
    radius = normalized**args.p
    if args.format == "json":
        _emit(
            _json_text({"p": args.p, "radius": radius, "normalized": normalized}),
            args.output,
        )
    else:
        _emit(
            f"p: {args.p}\nradius: {_fmt(radius)}\nnormalized: {_fmt(normalized)}",
            args.output,
        )
    return 0


def _cmd_gsr_trend(args) -> int:
    trend = gsr.theorem2_trend(args.pmax)
    if args.format == "json":
        _emit(_json_text(trend.to_json()), args.output)
    else:
        lines = [f"{'p':>2}  {'lambda_p^(1/p)':<16}  kron normalized"]
        for p, lam_root, kron_norm in trend.rows:
            lines.append(f"{p:>2}  {_fmt(lam_root):<16}  {_fmt(kron_norm)}")
        lines.extend(trend.report.lines())
        _emit("\n".join(lines), args.output)
    return 0 if trend.report.passed else 1


def _cmd_zbound(args) -> int:
    report = gsr.verify_z_bounds(args.hmax)
    _emit(_report_text(report), args.output)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# parser


def _add_output(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--output",
        metavar="PATH",
        help="write the result to a file instead of stdout "
        "(relative paths resolve against FIBPART_OUTPUT_DIR)",
    )


def _add_format(parser: argparse.ArgumentParser, choices, default):
    parser.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibpart",
        description="Fibonacci partition counts, product automata, growth "
        "constants, and generalized spectral radius experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rf = sub.add_parser("rf", help="number of Fibonacci partitions of n")
    p_rf.add_argument("n", type=int)
    _add_format(p_rf, ("text", "json"), "text")
    _add_output(p_rf)
    p_rf.set_defaults(func=_cmd_rf)

    p_ps = sub.add_parser("powersum", help="exact power sum of the counts below N")
    p_ps.add_argument("p", type=int)
    p_ps.add_argument("n", type=int)
    p_ps.add_argument(
        "--cap",
        type=int,
        default=powersums.DIRECT_SUM_CAP,
        help="override the direct summation cap (default %(default)s)",
    )
    _add_format(p_ps, ("text", "json"), "text")
    _add_output(p_ps)
    p_ps.set_defaults(func=_cmd_powersum)

    p_series = sub.add_parser(
        "series", help="power sums at Fibonacci cutoffs with scaling ratios"
    )
    p_series.add_argument("p", type=int)
    p_series.add_argument("ell_max", type=int)
    _add_format(p_series, ("csv", "json", "text"), "csv")
    _add_output(p_series)
    p_series.set_defaults(func=_cmd_series)

    p_auto = sub.add_parser("automaton", help="emit the accessible p-track product")
    p_auto.add_argument("p", type=int)
    p_auto.add_argument("--dot", action="store_true", help="GraphViz DOT output")
    p_auto.add_argument("--json", action="store_true", help="JSON dump")
    p_auto.add_argument(
        "--minimize", action="store_true", help="minimize before emitting"
    )
    _add_output(p_auto)
    p_auto.set_defaults(func=_cmd_automaton)

    p_claims = sub.add_parser(
        "verify-claims", help="check the ten structural transition claims"
    )
    p_claims.add_argument("p", type=int)
    _add_output(p_claims)
    p_claims.set_defaults(func=_cmd_verify_claims)

    p_lambda = sub.add_parser("lambda", help="certified growth constant for one p")
    p_lambda.add_argument("p", type=int)
    p_lambda.add_argument(
        "--precision",
        type=_parse_precision,
        default=Fraction(1, 10**12),
        help="isolating interval width, e.g. 1e-12 or 1/1000000000000",
    )
    _add_format(p_lambda, ("text", "json"), "text")
    _add_output(p_lambda)
    p_lambda.set_defaults(func=_cmd_lambda)

    p_table = sub.add_parser(
        "table1", help="reference table of growth constants with verification"
    )
    p_table.add_argument("--pmax", type=int, default=8, choices=range(1, 9))
    p_table.add_argument("--parallelism", type=int, default=1)
    _add_format(p_table, ("text", "json"), "text")
    _add_output(p_table)
    p_table.set_defaults(func=_cmd_table1)

    p_gsr = sub.add_parser("gsr", help="generalized spectral radius experiments")
    gsr_sub = p_gsr.add_subparsers(dest="gsr_command", required=True)

    p_rhok = gsr_sub.add_parser("rhok", help="best product radius per word length")
    p_rhok.add_argument("kmax", type=int)
    p_rhok.add_argument(
        "--all-words",
        action="store_true",
        help="enumerate every cyclic class (skip the nilpotent-factor shortcut)",
    )
    _add_format(p_rhok, ("csv", "json", "text"), "csv")
    _add_output(p_rhok)
    p_rhok.set_defaults(func=_cmd_gsr_rhok)

    p_kron = gsr_sub.add_parser("kron", help="Kronecker-power radius for one p")
    p_kron.add_argument("p", type=int)
    _add_format(p_kron, ("text", "json"), "text")
    _add_output(p_kron)
    p_kron.set_defaults(func=_cmd_gsr_kron)

    p_trend = gsr_sub.add_parser("trend", help="normalized growth constants per p")
    p_trend.add_argument("pmax", type=int)
    _add_format(p_trend, ("text", "json"), "text")
    _add_output(p_trend)
    p_trend.set_defaults(func=_cmd_gsr_trend)

    p_z = sub.add_parser("zbound", help="reduction matrix norm bounds")
    p_z.add_argument("hmax", type=int)
    _add_output(p_z)
    p_z.set_defaults(func=_cmd_zbound)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
