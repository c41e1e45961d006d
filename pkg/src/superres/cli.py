"""Command-line front end.

    superres single  [options]     single-parameter FI sweep
    superres qfim    [options]     two-parameter QFIM / precision sweep
    superres verify  [options]     analytic vs brute-force comparison
    superres figure  PRESET [...]  canned figure-data grids (fig1a..fig2b)

Exit codes: 0 success, 2 usage or domain error, 3 verification failure,
4 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import sweep as sweep_mod
from .errors import ConfigurationError, ContractViolationError, DomainError
from .sweep import (
    SweepSpec,
    VERIFY_TOLERANCE,
    emit,
    figure_preset,
    max_oracle_delta,
    run_sweep,
)

_HALF_PI = math.pi / 2


def _add_common(parser: argparse.ArgumentParser, mode: str) -> None:
    parser.add_argument("--sigma", type=float, default=1.0, help="PSF width (default 1)")
    parser.add_argument("--phi", type=float, default=0.0,
                        help="auxiliary relative phase; closed forms require 0")
    parser.add_argument("--nuisance", choices=sweep_mod.NUISANCES,
                        default="theta" if mode == "verify" else "coherence",
                        help="second sweep axis")
    parser.add_argument("--s-min", type=float, default=None)
    parser.add_argument("--s-max", type=float, default=None)
    parser.add_argument("--s-steps", type=int, default=None)
    parser.add_argument("--n-min", type=float, default=None)
    parser.add_argument("--n-max", type=float, default=None)
    parser.add_argument("--n-steps", type=int, default=None)
    parser.add_argument("--format", choices=sweep_mod.FORMATS, default="csv")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument("--oracle", action="store_true",
                        help="attach brute-force comparison deltas")
    parser.add_argument("--grid-points", type=int, default=4096)
    parser.add_argument("--grid-halfwidth", type=float, default=None)
    parser.add_argument("--fd-step", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superres",
        description="Fisher-information analysis of two-point-source resolution "
                    "under entanglement and coherence",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for mode in ("single", "qfim", "verify"):
        p = sub.add_parser(mode)
        _add_common(p, mode)
    fig = sub.add_parser("figure")
    fig.add_argument("preset", help="fig1a | fig1b | fig1c | fig2a | fig2b")
    _add_common(fig, "figure")
    return parser


def _default_ranges(mode: str, nuisance: str):
    if mode == "verify":
        return (0.5, 3.0, 4), (math.pi / 8, _HALF_PI, 4)
    top = _HALF_PI if nuisance == "theta" else 1.0
    return (1e-3, 5.0, 50), (0.0, top, 50)


def _range_from_args(args, defaults, prefix: str):
    lo, hi, steps = defaults
    if getattr(args, f"{prefix}_min") is not None:
        lo = getattr(args, f"{prefix}_min")
    if getattr(args, f"{prefix}_max") is not None:
        hi = getattr(args, f"{prefix}_max")
    if getattr(args, f"{prefix}_steps") is not None:
        steps = getattr(args, f"{prefix}_steps")
    return (lo, hi, steps)


def _spec_from_args(args, mode: str) -> SweepSpec:
    s_default, n_default = _default_ranges(mode, args.nuisance)
    return SweepSpec(
        mode=mode,
        nuisance=args.nuisance,
        sigma=args.sigma,
        phi=args.phi,
        s_range=_range_from_args(args, s_default, "s"),
        nuisance_range=_range_from_args(args, n_default, "n"),
        fmt=args.format,
        oracle=args.oracle or mode == "verify",
        grid_points=args.grid_points,
        grid_halfwidth=args.grid_halfwidth,
        fd_step=args.fd_step,
    )


def _emit_records(records, fmt, out_path, include_deltas) -> None:
    if out_path is None:
        emit(records, fmt, sys.stdout, include_deltas=include_deltas)
    else:
        emit(records, fmt, out_path, include_deltas=include_deltas)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "figure":
            blocks = figure_preset(args.preset)
            records = []
            for spec in blocks:
                spec.fmt = args.format
                spec.sigma = args.sigma
                spec.oracle = args.oracle
                if args.s_steps is not None:
                    spec.s_range = (spec.s_range[0], spec.s_range[1], args.s_steps)
                if args.n_steps is not None:
                    spec.nuisance_range = (*spec.nuisance_range[:2], args.n_steps)
                if args.phi != 0.0:
                    raise DomainError("figure presets require phi = 0")
                spec.validate()
                records.extend(run_sweep(spec))
            _emit_records(records, args.format, args.out, include_deltas=args.oracle)
            return 0

        spec = _spec_from_args(args, args.command)
        records = run_sweep(spec)
        if args.command == "verify":
            worst = max_oracle_delta(records)
            ok = worst < VERIFY_TOLERANCE
            print(
                f"verify: {len(records)} points, max relative QFIM delta "
                f"{worst:.3e} (tolerance {VERIFY_TOLERANCE:.0e}): "
                f"{'PASS' if ok else 'FAIL'}",
                file=sys.stderr,
            )
            if args.out is not None:
                _emit_records(records, args.format, args.out, include_deltas=True)
            return 0 if ok else 3
        _emit_records(records, args.format, args.out, include_deltas=spec.oracle)
        return 0
    except (DomainError, ConfigurationError, ContractViolationError) as exc:
        print(f"superres: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"superres: i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
