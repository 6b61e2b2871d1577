"""Command-line entry point: ``rverify list | run | eval``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__, contfrac, qseries, specfun
from .identities import analytic, classic, elliptic, lostnb
from .quadrature import QuadResult
from .registry import GROUPS, TIERS, ConfigError, run, select
from .report import to_json, to_markdown

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

_EVAL_MODULES = (specfun, qseries, classic, elliptic, analytic, lostnb)
_EVAL_NAMES = {
    "specfun": (
        "sinpi ln_gamma gamma recip_gamma gamma_ratio digamma pochhammer bessel_j bessel_j_scaled li2 agm "
        "elliptic_k elliptic_f_incomplete zeta xi xi_big"
    ),
    "qseries": "qpochhammer_inf euler_f_neg rr_cf_product lambda5 v14 v35",
    "classic": "q783_phi q783_functional_residual q295_side ram_phi ram_sine_integral ram_sine_transform ram_phi_gauss",
    "elliptic": (
        "addition_check entry_arccos_residual entry_double_integral_residual entry_page172_residual quartic_G "
        "quartic_inversion_residual lemniscate_F lemniscate_F_series lemniscate_inversion_residual "
        "lemniscate_doubling_residual"
    ),
    "analytic": (
        "phi_w psi_w mustafy_pair_residual gamma_quad_rhs bessel_product_rhs riemann_eq13_residual "
        "riemann_eq12_residual F_ns_residual"
    ),
    "lostnb": (
        "lemma_dlambda_residual entry5_residuals entry5_constant_C entry14_residual entry35_residual"
    ),
}


def eval_functions() -> dict:
    """Library functions reachable from ``rverify eval``."""
    table = {}
    for module in _EVAL_MODULES:
        short = module.__name__.rsplit(".", 1)[-1]
        for name in _EVAL_NAMES[short].split():
            table[name] = getattr(module, name)
    table["rogers_ramanujan_cf"] = lambda q: contfrac.evaluate_cf(contfrac.rogers_ramanujan_cf(q))
    return table


def _parse_arg(text: str):
    for kind in (int, float, complex):
        try:
            return kind(text)
        except ValueError:
            continue
    return text


def _resolve_section(value: str | None) -> str | None:
    if value is None:
        return None
    keys = list(GROUPS)
    if value.isdigit() and 1 <= int(value) <= len(keys):
        return keys[int(value) - 1]
    if value in GROUPS:
        return value
    raise ConfigError(f"unknown section {value!r}; use 1-{len(keys)} or one of {', '.join(keys)}")


def _tiers(values: list[str] | None) -> list[str] | None:
    if not values:
        return None
    return [t.strip() for v in values for t in v.split(",") if t.strip()]


def _cmd_list(args) -> int:
    specs = select("*", _tiers(args.tier), _resolve_section(args.section))
    for s in specs:
        print(f"{s.id:30s} {s.tier:12s} {s.section} {s.group:11s} {len(s.grid):3d}  {s.anchor}")
    return EXIT_OK


def _cmd_run(args) -> int:
    report = run(args.filter, _tiers(args.tier), args.tol_scale, args.jobs)
    if args.json:
        Path(args.json).write_text(to_json(report))
    if args.md:
        Path(args.md).write_text(to_markdown(report))
    for o in report.outcomes:
        note = f"  {o.message}" if o.message else ""
        print(f"{o.status:12s} {o.check_id:30s} {o.params}  abs={o.abs_residual:.3g}{note}")
    s = report.summary
    print(f"pass {s['pass']}  fail {s['fail']}  skipped {s['skipped']}  experimental {s['experimental']}")
    return report.exit_code


def _cmd_eval(args) -> int:
    table = eval_functions()
    if args.fn not in table:
        raise ConfigError(f"unknown function {args.fn!r}; available: {', '.join(sorted(table))}")
    result = table[args.fn](*[_parse_arg(a) for a in args.args])
    if isinstance(result, QuadResult):
        print(f"{result.value!r}  (error estimate {result.error_estimate:.3g}, converged={result.converged})")
    else:
        print(repr(result))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rverify", description="Numerical verification of integral identities.")
    parser.add_argument("--version", action="version", version=f"rverify {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list registered checks")
    p.add_argument("--tier", action="append", help=f"restrict to tier(s): {', '.join(TIERS)}")
    p.add_argument("--section", help=f"section number (1-{len(GROUPS)}) or key")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("run", help="run checks and report")
    p.add_argument("--filter", default="*", help="glob on check ids")
    p.add_argument("--tier", action="append", help="restrict to tier(s); repeat or comma-separate")
    p.add_argument("--tol-scale", type=float, default=1.0, help="loosen every tolerance by this factor (>= 1)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--json", help="write the JSON report here")
    p.add_argument("--md", help="write the Markdown report here")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("eval", help="call a library function")
    p.add_argument("fn")
    p.add_argument("args", nargs="*")
    p.set_defaults(func=_cmd_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help/--version
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"rverify: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, TypeError, ArithmeticError) as exc:
        if args.command != "eval":
            raise
        print(f"rverify: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
