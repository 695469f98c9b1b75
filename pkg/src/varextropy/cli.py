"""Command-line interface.

Subcommands
-----------
estimate        spacing-based varextropy statistic of a data file
test            uniformity test of a data file (verdict + report)
critical-table  CSV grid of simulated critical values
power-table     CSV grid of simulated powers against an alternative
measure         extropy / varextropy of a named parametric law

Exit codes: 0 success (whatever the statistical verdict), 2 usage error,
3 data error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import distributions
from .distributions import DistributionSpec
from .errors import TieError
from .measures import (
    CLOSED_FORM,
    extropy,
    record_varextropy_exponential,
    varextropy_closed,
    varextropy_quadrature,
    varextropy_quantile_form,
)
from .simulate import RngSpec, SimulationTable, build_table
from .spacing import EstimatorConfig, Sample, default_window, estimate_varextropy
from .uniformity import run_test

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3

TABLE_HEADER = "m\\n"


class UsageError(Exception):
    """Bad flags or flag values (exit 2)."""


class DataError(Exception):
    """Bad input data (exit 3)."""


# ---------------------------------------------------------------------------
# input parsing


def read_observations(path) -> np.ndarray:
    """Whitespace/newline-separated decimals; lines starting with '#' ignored."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    values = []
    for lineno, line in enumerate(lines, start=1):
        if line.lstrip().startswith("#"):
            continue
        for token in line.split():
            try:
                value = float(token)
            except ValueError:
                raise DataError(
                    f"{path}: line {lineno}: {token!r} is not a number"
                ) from None
            if not np.isfinite(value):
                raise DataError(
                    f"{path}: line {lineno}: {token!r} is not a finite number"
                )
            values.append(value)
    if not values:
        raise DataError(f"{path}: no observations found")
    return np.asarray(values, dtype=np.float64)


def parse_distribution(text) -> DistributionSpec:
    """'uniform', 'uniform:a,b', 'exponential:rate', 'normal:mean,variance',
    'beta:a,b'."""
    name, _, rest = text.partition(":")
    name = name.strip().lower()
    args = [token for token in rest.split(",") if token.strip()] if rest else []
    try:
        params = [float(token) for token in args]
    except ValueError:
        raise UsageError(f"cannot parse parameters in {text!r}") from None
    try:
        if name == "uniform":
            if not params:
                return distributions.uniform()
            if len(params) == 2:
                return distributions.uniform(*params)
        elif name == "exponential" and len(params) == 1:
            return distributions.exponential(params[0])
        elif name == "normal" and len(params) == 2:
            return distributions.normal(*params)
        elif name == "beta" and len(params) == 2:
            return distributions.beta(*params)
        else:
            raise UsageError(
                f"unknown distribution {text!r}; expected uniform[:a,b], "
                "exponential:rate, normal:mean,variance, or beta:a,b"
            )
    except ValueError as exc:
        raise UsageError(f"invalid parameters in {text!r}: {exc}") from None
    raise UsageError(f"wrong number of parameters in {text!r}")


def _parse_int_list(text, label) -> list[int]:
    try:
        values = [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise UsageError(f"cannot parse {label} list {text!r}") from None
    if not values:
        raise UsageError(f"empty {label} list")
    return values


# ---------------------------------------------------------------------------
# table CSV


def format_table_csv(table: SimulationTable, n_list, m_list) -> str:
    """Header row 'm\\n' then one row per window; invalid cells stay blank."""
    lines = [",".join([TABLE_HEADER] + [str(n) for n in n_list])]
    for m in m_list:
        cells = [str(m)]
        for n in n_list:
            value = table.rows.get((n, m))
            cells.append("" if value is None else f"{value:.4f}")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def parse_table_csv(text):
    """Inverse of :func:`format_table_csv`: (n_list, m_list, rows dict)."""
    lines = [line for line in text.strip().splitlines() if line]
    header = lines[0].split(",")
    if header[0] != TABLE_HEADER:
        raise ValueError(f"not a table CSV: header starts with {header[0]!r}")
    n_list = [int(tok) for tok in header[1:]]
    m_list = []
    rows = {}
    for line in lines[1:]:
        cells = line.split(",")
        m = int(cells[0])
        m_list.append(m)
        for n, cell in zip(n_list, cells[1:]):
            if cell:
                rows[(n, m)] = float(cell)
    return n_list, m_list, rows


# ---------------------------------------------------------------------------
# subcommands


def _fmt(value) -> str:
    return f"{value:.6g}"


def _load_sample(args) -> Sample:
    data = read_observations(args.input)
    if getattr(args, "rescale", False):
        lo, hi = data.min(), data.max()
        if hi <= lo:
            raise DataError(f"{args.input}: cannot rescale constant data")
        data = (data - lo) / (hi - lo)
        print(
            f"warning: rescaled observations from [{_fmt(lo)}, {_fmt(hi)}] "
            "onto [0, 1]; interpret the verdict on that scale",
            file=sys.stderr,
        )
    return Sample(data)


def _resolve_window(args, n) -> int:
    if args.window is None:
        return default_window(n)
    m = args.window
    if m < 1 or 2 * m > n:
        raise UsageError(f"window m={m} outside [1, n/2] for n={n}")
    return m


def cmd_estimate(args) -> int:
    sample = _load_sample(args)
    m = _resolve_window(args, sample.n)
    value = estimate_varextropy(sample, EstimatorConfig(m=m))
    if args.format == "csv":
        print("n,m,estimate")
        print(f"{sample.n},{m},{_fmt(value)}")
    else:
        print(f"estimate {_fmt(value)}")
        print(f"n {sample.n}")
        print(f"m {m}")
    return EXIT_OK


def cmd_test(args) -> int:
    sample = _load_sample(args)
    m = _resolve_window(args, sample.n)
    report = run_test(sample, m, alpha=args.alpha, reps=args.reps, seed=args.seed)
    fields = [
        ("statistic", _fmt(report.statistic)),
        ("critical_value", _fmt(report.critical_value)),
        ("decision", report.decision),
        ("alpha", _fmt(report.alpha)),
        ("n", str(report.n)),
        ("m", str(report.m)),
        ("reps", str(report.reps)),
        ("seed", str(report.seed)),
    ]
    if args.format == "csv":
        print(",".join(name for name, _ in fields))
        print(",".join(value for _, value in fields))
    else:
        relation = ">=" if report.decision == "reject" else "<"
        verdict = (
            "reject uniformity" if report.decision == "reject" else "fail to reject uniformity"
        )
        print(
            f"{verdict} at alpha {_fmt(report.alpha)}: statistic "
            f"{_fmt(report.statistic)} {relation} critical value "
            f"{_fmt(report.critical_value)}"
        )
        for name, value in fields:
            print(f"{name} {value}")
    return EXIT_OK


def _table_args(args, kind, alt=None):
    n_list = _parse_int_list(args.n_list, "sample size")
    m_list = _parse_int_list(args.m_list, "window")
    try:
        table = build_table(
            kind,
            n_list,
            m_list,
            alpha=args.alpha,
            reps=args.reps,
            rng=RngSpec(args.seed),
            alt=alt,
            workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(format_table_csv(table, n_list, m_list))
    return EXIT_OK


def cmd_critical_table(args) -> int:
    return _table_args(args, "critical")


def cmd_power_table(args) -> int:
    alt = parse_distribution(args.alt)
    if alt.kind not in ("uniform", "beta"):
        raise UsageError(f"unsupported alternative {args.alt!r}; use beta:a,b")
    return _table_args(args, "power", alt=alt)


def cmd_measure(args) -> int:
    dist = parse_distribution(args.dist)
    j = extropy(dist)
    if args.method == "closed":
        vj = varextropy_closed(dist)
    elif args.method == "quadrature":
        vj = varextropy_quadrature(dist)
    else:
        try:
            vj = varextropy_quantile_form(dist)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    lines = [
        ("distribution", dist.describe(), ""),
        ("extropy", _fmt(j.value), j.method),
        ("varextropy", _fmt(vj.value), vj.method),
    ]
    if args.n_record is not None:
        if dist.kind != "exponential":
            raise UsageError("--n-record applies only to the exponential law")
        record = record_varextropy_exponential(args.n_record, dist.params[0])
        lines.append((f"record_varextropy[n={args.n_record}]", _fmt(record.value), CLOSED_FORM))
    if args.format == "csv":
        print("quantity,value,method")
        for name, value, method in lines:
            print(f"{name},{value},{method}")
    else:
        for name, value, method in lines:
            suffix = f" ({method})" if method else ""
            print(f"{name} {value}{suffix}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument plumbing


def _add_common(parser, *, seed=True):
    parser.add_argument("--format", choices=("plain", "csv"), default="plain")
    if seed:
        parser.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varextropy",
        description="Varextropy measures, spacing estimation, and uniformity testing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="estimate varextropy from a data file")
    p.add_argument("--input", "-i", required=True, help="file of decimal observations")
    p.add_argument("--window", "-m", type=int, default=None, help="window size (default round(sqrt(n)))")
    _add_common(p)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("test", help="test a data file for uniformity on [0, 1]")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--window", "-m", type=int, default=None)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--reps", type=int, default=10000)
    p.add_argument("--rescale", action="store_true", help="min-max rescale data onto [0, 1] first")
    _add_common(p)
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("critical-table", help="simulate a grid of critical values (CSV)")
    p.add_argument("--n-list", default="10,20,30,40,50,80,100")
    p.add_argument("--m-list", default="2,3,4,5,9,14,19,24,30,39,49")
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--reps", type=int, default=10000)
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_critical_table)

    p = sub.add_parser("power-table", help="simulate a grid of powers (CSV)")
    p.add_argument("--alt", required=True, help="alternative law, e.g. beta:1,2")
    p.add_argument("--n-list", default="10,20,30,40,50,80,100")
    p.add_argument("--m-list", default="2,3,4,5,9,14,19,24,30,39,49")
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--reps", type=int, default=10000)
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_power_table)

    p = sub.add_parser("measure", help="extropy and varextropy of a parametric law")
    p.add_argument("--dist", required=True, help="e.g. uniform, exponential:2, beta:1,2")
    p.add_argument("--method", choices=("closed", "quadrature", "quantile"), default="closed")
    p.add_argument("--n-record", type=int, default=None, help="also report the n-th record varextropy (exponential only)")
    _add_common(p)
    p.set_defaults(func=cmd_measure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems and 0 for --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, TieError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        # Library-level rejections of the data (support, size, ties).
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
