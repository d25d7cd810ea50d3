"""Command-line front end: every capability as a CSV-emitting subcommand.

All tabular output goes to standard output as UTF-8 CSV with a header row,
reals rendered to 9 significant digits. Exit codes: 0 success, 1 self-check
failure, 2 usage or parameter errors.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from importlib import resources
from typing import Iterable, Sequence

from . import _enumeration
from .distributions import (
    BernoulliParams,
    Dist,
    UrnParams,
    exact_pmf,
    maxnb_pmf,
    maxnh_pmf,
    pmf,
    pmf_table,
    support,
)
from .errors import DomainError, ParameterError
from .estimation import classify_critical_point, loglik_kernel, mle, profile
from .modes import local_modes, unimodal_m_range
from .urn_simulator import (
    SimConfig,
    Xoshiro256StarStar,
    _bernoulli_trial,
    _urn_trial,
    empirical_pmf,
)

_URN_DISTS = (Dist.NH, Dist.MINNH, Dist.MAXNH)

# Figure regimes: figure -> (c, m_num, m_den); m = N*m_num/m_den and the
# limiting Bernoulli p is m_num/m_den.
_FIG_REGIMES = {
    1: (3, 2, 5),
    2: (6, 1, 3),
    3: (20, 1, 4),
    4: (2, 1, 10),
    5: (20, 1, 2),
}


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.9g}"
    return str(v)


def _emit(header: Sequence[str], rows: Iterable[Sequence]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join(f"--{n}" for n in missing)
        raise ParameterError(f"missing required flags: {flags}")


def _build_params(dist: Dist, args: argparse.Namespace):
    if dist in _URN_DISTS:
        _need(args, "N", "m", "c")
        return UrnParams(args.N, args.m, args.c)
    _need(args, "c", "p")
    return BernoulliParams(args.c, args.p)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_pmf(args: argparse.Namespace) -> int:
    dist = Dist(args.dist)
    table = pmf_table(dist, _build_params(dist, args))
    if args.cdf:
        rows = []
        running = 0.0
        for y, p in zip(table.ys, table.probs):
            running += p
            rows.append((y, p, running))
        _emit(("y", "pmf", "cdf"), rows)
    else:
        _emit(("y", "pmf"), zip(table.ys, table.probs))
    return 0


def cmd_sample(args: argparse.Namespace) -> int:
    scheme = Dist(args.scheme)
    params = _build_params(scheme, args)
    _need(args, "trials", "seed")
    config = SimConfig(seed=args.seed, trials=args.trials)
    if args.empirical_pmf:
        table = empirical_pmf(scheme, params, config)
        _emit(("y", "freq"), zip(table.ys, table.probs))
        return 0
    rng = Xoshiro256StarStar(config.seed)
    rows = []
    for _ in range(config.trials):
        if scheme in _URN_DISTS:
            out = _urn_trial(params, rng, scheme)
        else:
            out = _bernoulli_trial(params, rng, scheme)
        rows.append((out.y, out.terminal_color.value, out.counts[0], out.counts[1]))
    _emit(("y", "terminal_color", "count1", "count2"), rows)
    return 0


def cmd_modes(args: argparse.Namespace) -> int:
    _need(args, "N", "c")
    if args.m is not None:
        params = UrnParams(args.N, args.m, args.c)
        report = local_modes(pmf_table(Dist.MAXNH, params))
        _emit(
            ("modes", "is_unimodal", "p0_over_p1"),
            [
                (
                    ";".join(str(y) for y in report.modes),
                    report.is_unimodal,
                    report.p0_over_p1,
                )
            ],
        )
        return 0
    intervals = unimodal_m_range(args.N, args.c)
    if not intervals:
        print(
            "note: every valid m is degenerate (point mass at 0); "
            "no intervals to report",
            file=sys.stderr,
        )
    _emit(("m_lo", "m_hi"), intervals)
    return 0


def _parse_grid(spec: str) -> tuple[float, float, float]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ParameterError(f"--profile wants lo:hi:step, got {spec!r}")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError as exc:
        raise ParameterError(f"bad --profile value: {exc}") from None
    return lo, hi, step


def cmd_mle(args: argparse.Namespace) -> int:
    _need(args, "N", "c", "y")
    N, c, y = args.N, args.c, args.y
    report = classify_critical_point(N, c, y)
    estimates = sorted(mle(N, c, y))
    summary = (
        ";".join(_fmt(float(e)) for e in estimates),
        report.phi_value,
        report.classification.value,
    )
    if args.profile is not None:
        prof = profile(N, c, y, _parse_grid(args.profile))
        _emit(("m", "loglik"), zip(prof.grid, prof.values))
        print(
            f"maximizers={summary[0]} phi={_fmt(summary[1])} "
            f"classification={summary[2]}",
            file=sys.stderr,
        )
        return 0
    _emit(("m_hat", "phi", "classification"), [summary])
    return 0


# ---------------------------------------------------------------------------
# Figures and self-check
# ---------------------------------------------------------------------------


def _load_golden(which: int) -> list[tuple[str, str, float]]:
    """Rows of the embedded reference dataset for one figure."""
    text = (
        resources.files(__package__)
        .joinpath(f"golden/fig{which}.csv")
        .read_text(encoding="utf-8")
    )
    rows = []
    for rec in csv.reader(
        line for line in text.splitlines() if line and not line.startswith("#")
    ):
        if rec[0] == "label":
            continue
        rows.append((rec[0], rec[1], float(rec[2])))
    return rows


def _figure_rows(which: int) -> list[tuple[str, str, float]]:
    """Recompute every (label, x) point of a figure from first principles."""
    golden = _load_golden(which)
    if which == 6:
        return [
            (label, x, loglik_kernel(float(x), 20, 3, int(label[2:])))
            for label, x, _ in golden
        ]
    c, num, den = _FIG_REGIMES[which]
    out = []
    for label, x, _ in golden:
        y = int(x)
        if label == "maxnb":
            value = maxnb_pmf(BernoulliParams(c, num / den), y)
        else:
            N = int(label[2:])
            value = maxnh_pmf(UrnParams(N, N * num // den, c), y)
        out.append((label, x, value))
    return out


def cmd_figure(args: argparse.Namespace) -> int:
    _need(args, "which")
    if args.which not in range(1, 7):
        raise ParameterError(f"--which must be 1..6, got {args.which}")
    _emit(("label", "x", "value"), _figure_rows(args.which))
    return 0


def _check_figures() -> list[tuple[str, float, float, bool]]:
    suites = []
    for which in range(1, 7):
        tol = 1e-5 if which == 6 else 1e-4
        golden = _load_golden(which)
        computed = _figure_rows(which)
        dev = max(
            abs(value - ref) for (_, _, ref), (_, _, value) in zip(golden, computed)
        )
        suites.append((f"figure {which}", dev, tol, dev <= tol))
    return suites


def _check_enumeration() -> tuple[str, float, float, bool]:
    """Closed forms vs brute-force enumeration for every N <= 12.

    The rational path must match the enumeration exactly; the reported
    deviation is the float path's worst distance from the rationals.
    """
    ok = True
    float_dev = 0.0
    for N in range(2, 13):
        for m in range(1, N):
            for c in range(1, min(m, N - m) + 1):
                params = UrnParams(N, m, c)
                for dist in _URN_DISTS:
                    ref = _enumeration.enumerate_pmf(dist, params)
                    if sum(ref.values()) != 1:
                        ok = False
                    for y in support(dist, params):
                        rational = exact_pmf(dist, params, y)
                        if rational != ref.get(y, 0):
                            ok = False
                        float_dev = max(
                            float_dev, abs(pmf(dist, params, y) - float(rational))
                        )
    return ("enumeration N<=12", float_dev, 1e-12, ok and float_dev <= 1e-12)


def cmd_selfcheck(args: argparse.Namespace) -> int:
    suites = _check_figures()
    suites.append(_check_enumeration())
    _emit(
        ("suite", "max_deviation", "tolerance", "status"),
        [
            (name, dev, tol, "PASS" if good else "FAIL")
            for name, dev, tol, good in suites
        ],
    )
    return 0 if all(good for _, _, _, good in suites) else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--N", type=int, default=None, help="population size")
    sub.add_argument("--m", type=int, default=None, help="first-color count")
    sub.add_argument("--c", type=int, default=None, help="target count")
    sub.add_argument("--p", type=float, default=None, help="success probability")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urnwait",
        description="Waiting-time distributions for two-color urn sampling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    names = [d.value for d in Dist]

    p_pmf = sub.add_parser("pmf", help="tabulate a pmf over its support")
    p_pmf.add_argument("dist", choices=names)
    _add_common(p_pmf)
    p_pmf.add_argument("--cdf", action="store_true", help="append a cdf column")
    p_pmf.set_defaults(func=cmd_pmf)

    p_sample = sub.add_parser("sample", help="simulate a sampling scheme")
    p_sample.add_argument("scheme", choices=names)
    _add_common(p_sample)
    p_sample.add_argument("--trials", type=int, default=None)
    p_sample.add_argument("--seed", type=int, default=None)
    p_sample.add_argument(
        "--empirical-pmf",
        action="store_true",
        help="emit the normalized histogram instead of raw draws",
    )
    p_sample.set_defaults(func=cmd_sample)

    p_modes = sub.add_parser("modes", help="mode report or unimodal m ranges")
    _add_common(p_modes)
    p_modes.set_defaults(func=cmd_modes)

    p_mle = sub.add_parser("mle", help="estimate m from one observed y")
    _add_common(p_mle)
    p_mle.add_argument("--y", type=int, default=None, help="observed value")
    p_mle.add_argument(
        "--profile", default=None, metavar="LO:HI:STEP", help="also emit the grid"
    )
    p_mle.set_defaults(func=cmd_mle)

    p_fig = sub.add_parser("figure", help="regenerate a reference figure")
    p_fig.add_argument("--which", type=int, default=None, help="figure number 1..6")
    p_fig.set_defaults(func=cmd_figure)

    p_self = sub.add_parser("selfcheck", help="compare against embedded references")
    p_self.set_defaults(func=cmd_selfcheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream closed early (e.g. piping into head); not our error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
