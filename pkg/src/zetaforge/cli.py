"""Command-line front end.

Subcommands:

  table    emit the improvement-threshold table (12 rho columns) plus the
           worked classical examples as CSV
  verify   run a named verification suite; exit 0 iff every margin is
           within tolerance; emit the BoundReport CSV
  zeta     compute zeta_s between two laws (builtin names, JSON files, or
           'normal') and print it with an error estimate

Builtin law names: rademacher, binomial:n (standardized), tworho:rho,
bernoulli:p (standardized).  Law files use the JSON format
{"atoms": [...], "masses": [...]}.

Exit codes: 0 success, 1 verification failure, 2 input error.
ZETA_FORGE_THREADS caps the verify worker pool (reports stay ordered, so
output is byte-identical for a fixed seed and config).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import bounds, laws
from .errors import MomentMismatch, ZetaForgeError
from .laws import (binomial_half, load_law, make_discrete, rademacher,
                   standardize, two_point_law)
from .zeta import NORMAL, zeta_discrete, zeta_vs_normal

TABLE_RHOS = (1.01, 1.10, 1.18, 1.24, 1.30, 1.52, 1.66, 1.77, 1.94, 2.17,
              2.33, 2.519)
BERNOULLI_LADDER = (0.45, 0.38, 0.34, 0.31, 0.2, 0.1)
POISSON_LAMBDAS = (1.0, 2.0, 4.0, 8.0)


def _fmt(x) -> str:
    return f"{x:.12g}" if isinstance(x, float) else str(x)


def table_rows() -> list[dict]:
    """Threshold table rows plus the worked classical examples."""
    from .extremal import b_value
    rows = []
    for rho in TABLE_RHOS:
        rows.append({"kind": "table", "name": f"rho<={rho:g}", "rho": rho,
                     "B": b_value(rho), "n_min": bounds.improvement_n_min(rho)})
    # worked examples use the published display-precision procedure
    for name, rho in (("exponential", laws.catalog_rho("exponential")),
                      ("uniform", laws.catalog_rho("uniform"))):
        rows.append({"kind": "example", "name": name, "rho": rho,
                     "B": b_value(rho),
                     "n_min": bounds.published_example_threshold(rho)})
    for p in BERNOULLI_LADDER:
        rho = laws.catalog_rho("bernoulli", p)
        rows.append({"kind": "example", "name": f"bernoulli_p>={p:g}",
                     "rho": rho, "B": b_value(rho),
                     "n_min": bounds.published_example_threshold(rho)})
    for lam in POISSON_LAMBDAS:
        rho = laws.catalog_rho("poisson", lam)
        rows.append({"kind": "example", "name": f"poisson_lambda={lam:g}",
                     "rho": rho, "B": b_value(rho),
                     "n_min": bounds.published_example_threshold(rho)})
    rho = laws.catalog_rho("geometric", 0.1)
    rows.append({"kind": "example", "name": "geometric_p=0.1", "rho": rho,
                 "B": b_value(rho),
                 "n_min": bounds.published_example_threshold(rho)})
    return rows


def _table_csv(rows) -> str:
    lines = ["kind,name,rho,B,n_min"]
    for r in rows:
        lines.append(",".join([r["kind"], r["name"], _fmt(float(r["rho"])),
                               _fmt(float(r["B"])), str(r["n_min"])]))
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def parse_law_spec(spec: str):
    """Builtin name, 'normal', or a JSON law file path."""
    if spec == "normal":
        return NORMAL
    if spec == "rademacher":
        return rademacher()
    if ":" in spec:
        name, _, arg = spec.partition(":")
        if name == "binomial":
            return standardize(binomial_half(int(arg)))
        if name == "tworho":
            return two_point_law(float(arg))
        if name == "bernoulli":
            p = float(arg)
            return standardize(make_discrete([(0.0, 1.0 - p), (1.0, p)]))
    return load_law(spec)


def _cmd_table(args) -> int:
    rows = table_rows()
    _emit(_table_csv(rows), args.out)
    if args.figures:
        from . import figures
        figures.render_table_figure(rows, args.figures)
    return 0


def _cmd_verify(args) -> int:
    threads = int(os.environ.get("ZETA_FORGE_THREADS", "0") or "0")
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        reports = bounds.run_suite(args.suite, args.trials, args.seed,
                                   tol=args.tol, executor=executor)
    finally:
        if executor is not None:
            executor.shutdown()
    _emit(bounds.reports_to_csv(reports), args.out)
    if args.figures:
        from . import figures
        figures.render_verify_figures(reports, args.suite, args.figures)
    bad = [r for r in reports if r.status not in ("ok", "equality")]
    if bad:
        sys.stderr.write(f"FAIL: {len(bad)} report(s) out of tolerance; "
                         f"first: {bounds.report_to_csv_row(bad[0])}\n")
        return 1
    return 0


def _cmd_zeta(args) -> int:
    a = parse_law_spec(args.law_a)
    b = parse_law_spec(args.law_b)
    s = args.s
    if a is NORMAL and b is NORMAL:
        sys.stdout.write(f"zeta_{s} = 0 (identical laws)\n")
        return 0
    try:
        if a is NORMAL or b is NORMAL:
            law = b if a is NORMAL else a
            value, err, _ = zeta_vs_normal(law, s, tol=args.tol,
                                           full_output=True)
            est = max(err, args.tol)
        else:
            value = zeta_discrete(a, b, s)
            est = 1e-12 * max(1.0, value)  # exact piecewise integration
    except MomentMismatch as exc:
        sys.stdout.write(f"zeta_{s} = infinite (moment {exc.moment_index} "
                         "mismatch)\n")
        return 2
    sys.stdout.write(f"zeta_{s} = {value:.12g} (abs err <= {est:.3g})\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetaforge",
        description="zeta-distances, extremal two-point bounds, verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="improvement-threshold table as CSV")
    p_table.add_argument("--out", help="CSV output path (default stdout)")
    p_table.add_argument("--figures", help="directory for rendered figures")
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", default="all",
                          choices=["main", "normal", "epsilon", "charfn",
                                   "osculation", "reduction", "all"])
    p_verify.add_argument("--trials", type=int, default=200)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.add_argument("--out", help="CSV output path (default stdout)")
    p_verify.add_argument("--figures", help="directory for rendered figures")
    p_verify.set_defaults(func=_cmd_verify)

    p_zeta = sub.add_parser("zeta", help="zeta_s distance between two laws")
    p_zeta.add_argument("--law-a", required=True)
    p_zeta.add_argument("--law-b", required=True)
    p_zeta.add_argument("--s", type=int, default=3, choices=[1, 2, 3, 4])
    p_zeta.add_argument("--tol", type=float, default=1e-10)
    p_zeta.set_defaults(func=_cmd_zeta)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ZetaForgeError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
