"""Command-line front end: ``bessel-radii <command> [options]``.

Exit codes: 0 success, 2 usage or invalid parameters, 3 numerical failure,
4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings
from pathlib import Path

from . import __version__
from .bounds import DEFAULT_KMAX, MAX_K, TARGET_FAMILY, audit_report, bound_brackets
from .errors import BesselRadiiError, InvalidParameters
from .mapping import DEFAULT_SAMPLES, boundary_curve, curve_csv, curve_svg, is_starlike_curve
from .model import DEFAULT_MAX_TERMS, make_context
from .radii import KINDS, NORMALIZATIONS, radius
from .series import Family, SeriesFamily
from .sums import MAX_N, power_sums_det
from .tables import SWEEPS, TABLES, table_warnings
from .zeros import find_zeros

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_VERIFY = 0, 2, 3, 4
MAX_TERMS_ENV = "BESSEL_RADII_MAX_TERMS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- context and output helpers -------------------------------------------------

def _max_terms() -> int:
    raw = os.environ.get(MAX_TERMS_ENV)
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{MAX_TERMS_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise UsageError(f"{MAX_TERMS_ENV} must be positive")
    return value


def _context(args, a=None, b=None, c=None, nu=None):
    """Validated context; warnings raised while validating are kept on ``args.context_warnings``."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        ctx = make_context(
            args.a if a is None else a, args.b if b is None else b, args.c if c is None else c,
            args.nu if nu is None else nu,
            max_terms=_max_terms(), allow_unverified=args.allow_unverified,
        )
    args.context_warnings = _collect_warnings(caught)
    return ctx


def _fmt(x, digits: int = 4) -> str:
    """Display value cut (not rounded) to ``digits`` decimals, as the published tables are."""
    scale = 10**digits
    return f"{math.trunc(x * scale) / scale:.{digits}f}"


def _emit_rows(rows: list[dict], fmt: str, columns: list[str]) -> str:
    """CSV or JSON rendering of records with full-precision floats."""
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (repr(v) if isinstance(v, float) else
                             "; ".join(v) if isinstance(v, list) else v) for k, v in row.items()})
    return buf.getvalue()


def _collect_warnings(caught) -> list[str]:
    seen = []
    for w in caught:
        text = f"{w.category.__name__}: {w.message}"
        if text not in seen:
            seen.append(text)
    return seen


# -- radii ------------------------------------------------------------------------

RADII_COLUMNS = ["table", "a", "b", "c", "nu", "beta", "normalization", "kind", "radius", "residual",
                 "bracket_lo", "bracket_hi", "printed", "warnings"]


def _radius_record(ctx, normalization, kind, beta, table=None, printed=None, early=()) -> dict:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        res = radius(ctx, normalization, kind, beta)
    d = ctx.describe()
    return {
        "table": table, **d, "beta": float(beta), "normalization": normalization, "kind": kind,
        "radius": res.radius, "residual": res.residual,
        "bracket_lo": res.bracket[0], "bracket_hi": res.bracket[1], "printed": printed,
        "warnings": table_warnings(normalization, kind) + list(early) + _collect_warnings(caught),
    }


def table_records(number: int, args) -> list[dict]:
    spec = TABLES[number]
    return [_radius_record(_context(args, *triple, spec.nu), spec.normalization, spec.kind, beta, number, printed)
            for triple, beta, printed in spec.cells()]


def _table_text(number: int, rows: list[dict]) -> str:
    spec = TABLES[number]
    lines = []
    if spec.suspect:
        lines += [table_warnings(spec.normalization, spec.kind)[0], ""]
    lines.append(spec.title)
    width = 8
    header1 = "beta  " + "".join(f"{label:<{3 * width}s}" for label, _, _ in SWEEPS)
    header2 = "      " + "".join(f"{var}={dict(zip('abc', t))[var]:<{width - 2}g}"
                                for _, var, ts in SWEEPS for t in ts)
    lines += [header1.rstrip(), header2.rstrip()]
    for beta in (0.0, 0.5):
        cells = [r for r in rows if r["beta"] == beta]
        lines.append(f"{beta:<6g}" + "".join(f"{_fmt(r['radius']):<{width}s}" for r in cells).rstrip())
    return "\n".join(lines) + "\n"


def cmd_radii(args) -> tuple[str, int]:
    free = [args.norm, args.kind, args.a, args.b, args.c, args.nu]
    if args.table is not None:
        if any(v is not None for v in free) or args.beta is not None:
            raise UsageError("--table cannot be combined with --norm/--kind/--a/--b/--c/--nu/--beta")
        rows = table_records(args.table, args)
        if args.format == "text":
            return _table_text(args.table, rows), EXIT_OK
        return _emit_rows(rows, args.format, RADII_COLUMNS), EXIT_OK
    missing = [n for n, v in zip(("--norm", "--kind", "--a", "--b", "--c", "--nu"), free) if v is None]
    if missing:
        raise UsageError("either --table or all of " + ", ".join(missing) + " are required")
    ctx = _context(args)
    row = _radius_record(ctx, args.norm, args.kind, args.beta or 0.0, early=args.context_warnings)
    if args.format != "text":
        return _emit_rows([row], args.format, RADII_COLUMNS), EXIT_OK
    lines = [f"WARNING: {w}" if not w.startswith("WARNING") else w for w in row["warnings"]]
    lines.append(f"{row['kind']} radius of {row['normalization']} (a={row['a']:g}, b={row['b']:g}, "
                 f"c={row['c']:g}, nu={row['nu']:g}, beta={row['beta']:g}): {_fmt(row['radius'])}")
    return "\n".join(lines) + "\n", EXIT_OK


# -- zeros, bounds, sums -----------------------------------------------------------

def cmd_zeros(args) -> tuple[str, int]:
    ctx = _context(args)
    kind = Family(args.family)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        cat = find_zeros(SeriesFamily(kind, ctx), args.count, args.tol)
    notes = args.context_warnings + _collect_warnings(caught)
    variable = "z" if kind.squared else "x"
    rows = [{**ctx.describe(), "family": kind.value, "variable": variable, "index": i + 1,
             "zero": float(z), "warnings": notes} for i, z in enumerate(cat.zeros)]
    if args.format != "text":
        return _emit_rows(rows, args.format, ["a", "b", "c", "nu", "family", "variable", "index", "zero",
                                              "warnings"]), EXIT_OK
    lines = [f"WARNING: {w}" for w in notes]
    lines.append(f"first {args.count} positive zeros of {kind.value} in {variable} "
                 f"(a={ctx.coeffs.a:g}, b={ctx.coeffs.b:g}, c={ctx.coeffs.c:g}, nu={ctx.nu:g})")
    lines += [f"{r['index']:4d}  {r['zero']:.4f}" for r in rows]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_bounds(args) -> tuple[str, int]:
    ctx = _context(args)
    if args.audit:
        report = audit_report(ctx)
        if args.format == "text":
            return report.render() + "\n", EXIT_OK
        rows = [{**ctx.describe(), "item": e.item, "reference_form": e.reference_form,
                 "newton_form": e.newton_form, "rel_diff": e.rel_diff, "matches": e.matches}
                for e in report.entries]
        return _emit_rows(rows, args.format, ["a", "b", "c", "nu", "item", "reference_form", "newton_form",
                                              "rel_diff", "matches"]), EXIT_OK
    if args.target is None:
        raise UsageError("--target is required unless --audit is given")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        brs = bound_brackets(ctx, args.target, args.k)
    notes = args.context_warnings + _collect_warnings(caught)
    chosen = list(brs) if args.all else [brs[args.k]]
    rows = [{**ctx.describe(), "target": args.target, "k": b.k, "lower": b.lower, "upper": b.upper,
             "kreyszig_todd": brs.kreyszig_todd, "warnings": notes} for b in chosen]
    if args.format != "text":
        return _emit_rows(rows, args.format, ["a", "b", "c", "nu", "target", "k", "lower", "upper",
                                              "kreyszig_todd", "warnings"]), EXIT_OK
    lines = [f"WARNING: {w}" for w in notes]
    lines += [f"{args.target} k={r['k']}: [{r['lower']:.5f}, {r['upper']:.5f}]" for r in rows]
    if brs.kreyszig_todd is not None:
        lines.append(f"{args.target} Kreyszig-Todd upper bound: {brs.kreyszig_todd:.5f}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_sums(args) -> tuple[str, int]:
    ctx = _context(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        data = power_sums_det(ctx, args.n, alternating=args.alternating)
    notes = args.context_warnings + _collect_warnings(caught)
    rows = [{**ctx.describe(), "n": n, "e_n": data.e[n - 1], "s_det": data.s_det[n - 1],
             "s_newton": data.s_newton[n - 1], "s_closed_form": data.s_closed.get(n),
             "alternating": data.alternating, "warnings": notes}
            for n in range(1, args.n + 1)]
    if args.format != "text":
        return _emit_rows(rows, args.format, ["a", "b", "c", "nu", "n", "e_n", "s_det", "s_newton",
                                              "s_closed_form", "alternating", "warnings"]), EXIT_OK
    name = "sum (-4)^n / lambda^2n" if args.alternating else "s_n = sum lambda^-2n"
    lines = [f"WARNING: {w}" for w in notes]
    lines.append(f"{name} (a={ctx.coeffs.a:g}, b={ctx.coeffs.b:g}, c={ctx.coeffs.c:g}, nu={ctx.nu:g})")
    for r in rows:
        lines.append(f"n={r['n']}: determinant {r['s_det']:.10g}  newton {r['s_newton']:.10g}")
    return "\n".join(lines) + "\n", EXIT_OK


# -- verify and map ------------------------------------------------------------------

def cmd_verify(args) -> tuple[str, int]:
    from .verify import run_suite

    results = run_suite(quick=args.quick)
    failed = sum(not r.passed for _, reps in results for r in reps)
    if args.format == "text":
        lines = []
        for name, reps in results:
            bad = [r for r in reps if not r.passed]
            lines.append(f"criterion {name}: {'PASS' if not bad else 'FAIL'} ({len(reps) - len(bad)}/{len(reps)})")
            shown = reps if args.verbose else bad
            lines += ["  " + r.line() for r in shown]
        text = "\n".join(lines) + "\n"
    else:
        rows = [{"criterion": name, "check": r.check, "computed": r.computed, "reference": r.reference,
                 "tolerance": r.tolerance, "relative": r.relative, "passed": r.passed, "notes": r.notes}
                for name, reps in results for r in reps]
        text = _emit_rows(rows, args.format, list(rows[0]))
    return text, EXIT_VERIFY if failed else EXIT_OK


def cmd_map(args) -> tuple[str, int]:
    ctx = _context(args)
    r = args.radius
    if r is None:
        r = radius(ctx, args.norm, "starlike", 0.0).radius
    if not r > 0:
        raise InvalidParameters("--radius must be positive", "radius")
    if args.samples < 3:
        raise UsageError("--samples must be at least 3")
    theta, w = boundary_curve(ctx, args.norm, r, args.samples)
    out = Path(args.output)
    csv_path = Path(args.csv) if args.csv else out.with_suffix(".csv")
    title = (f"{args.norm}_nu image of |z| = {r!r}; a={ctx.coeffs.a!r} b={ctx.coeffs.b!r} "
             f"c={ctx.coeffs.c!r} nu={ctx.nu!r}")
    out.write_text(curve_svg(w, title=title))
    csv_path.write_text(curve_csv(theta, w))
    starlike = is_starlike_curve(w)
    row = {**ctx.describe(), "normalization": args.norm, "radius": float(r), "samples": args.samples,
           "svg": str(out), "csv": str(csv_path), "starlike_curve": starlike,
           "warnings": args.context_warnings}
    if args.format != "text":
        return _emit_rows([row], args.format, list(row)), EXIT_OK
    return (f"wrote {out} and {csv_path} ({args.samples} points on |z| = {r:.6g})\n"
            f"ray-crossing starlikeness test: {'pass' if starlike else 'fail'}\n"), EXIT_OK


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--banner", action="store_true", default=argparse.SUPPRESS,
                        help="print a version line first")
    common.add_argument("--allow-unverified", action="store_true",
                        help="accept orders below the real-zero threshold (with a warning)")

    def coeffs(p, required=True):
        for name in ("a", "b", "c", "nu"):
            p.add_argument(f"--{name}", type=float, required=required, default=None)

    parser = _Parser(prog="bessel-radii",
                     description="Radii of starlikeness and convexity for normalized Bessel combinations.")
    parser.add_argument("--version", action="version", version=f"bessel-radii {__version__}")
    parser.add_argument("--banner", action="store_true", help="print a version line first")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("radii", parents=[common], help="radius tables or a single radius")
    p.add_argument("--table", type=int, choices=sorted(TABLES))
    p.add_argument("--norm", choices=NORMALIZATIONS)
    p.add_argument("--kind", choices=KINDS)
    coeffs(p, required=False)
    p.add_argument("--beta", type=float)
    p.set_defaults(func=cmd_radii)

    p = sub.add_parser("zeros", parents=[common], help="positive zeros of a series family")
    p.add_argument("--family", choices=[f.value for f in Family], default="psi")
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--tol", type=float, default=1e-13)
    coeffs(p)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("bounds", parents=[common], help="Euler-Rayleigh brackets or the closed-form audit")
    p.add_argument("--target", choices=sorted(TARGET_FAMILY))
    p.add_argument("--k", type=int, default=DEFAULT_KMAX, choices=range(1, MAX_K), metavar=f"1..{MAX_K - 1}")
    p.add_argument("--all", action="store_true", help="print brackets for every k up to --k")
    p.add_argument("--audit", action="store_true", help="compare printed closed forms with Newton values")
    coeffs(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sums", parents=[common], help="power sums of squared reciprocal zeros")
    p.add_argument("--n", type=int, default=4, choices=range(1, MAX_N + 1), metavar=f"1..{MAX_N}")
    p.add_argument("--alternating", action="store_true")
    coeffs(p)
    p.set_defaults(func=cmd_sums)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--quick", action="store_true", help="skip the 1000-zero summations")
    p.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("map", parents=[common], help="image of a circle as SVG and CSV")
    p.add_argument("--norm", choices=NORMALIZATIONS, default="g")
    coeffs(p)
    p.add_argument("--radius", type=float)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("-o", "--output", required=True, help="SVG path")
    p.add_argument("--csv", help="CSV path (default: SVG path with .csv suffix)")
    p.set_defaults(func=cmd_map)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        print(f"bessel-radii {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidParameters as exc:
        print(f"bessel-radii {args.command}: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BesselRadiiError, ArithmeticError) as exc:
        print(f"bessel-radii {args.command}: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.banner:
        sys.stdout.write(f"# bessel-radii {__version__}\n")
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
