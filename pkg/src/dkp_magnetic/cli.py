"""Command-line front end.

Commands:
    spectrum      compute and export energy level tables
    wavefunction  build one ten-component state and export it
    verify        run the self-verification suites

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O failure,
4 degenerate parameters.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .spectrum import (Branch, DegenerateParameterError, enumerate_levels,
                       levels_to_csv, levels_to_json)
from .verify import run_all
from .wavefunction import build_branch_state, build_scalar_class, residual

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_DEGENERATE = 4

BRANCH_BY_NAME = {b.value: b for b in Branch}


def _parse_k_list(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part.strip() != ""]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dkp-magnetic",
        description="Spin-1 particle in a homogeneous magnetic field: "
                    "spectra, wavefunctions and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="compute energy levels")
    sp.add_argument("--B", type=float, required=True)
    sp.add_argument("--M", type=float, required=True)
    sp.add_argument("--k", type=str, default="0",
                    help="comma-separated longitudinal momenta")
    sp.add_argument("--n-max", type=int, default=0)
    sp.add_argument("--m", type=int, default=None,
                    help="single magnetic quantum number")
    sp.add_argument("--m-min", type=int, default=None)
    sp.add_argument("--m-max", type=int, default=None)
    sp.add_argument("--branch", choices=sorted(BRANCH_BY_NAME), default=None)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--output", type=str, default=None)
    sp.add_argument("--plot-data", type=str, default=None,
                    help="also write a gnuplot-compatible m vs epsilon file")

    wf = sub.add_parser("wavefunction", help="build one ten-component state")
    wf.add_argument("--branch", choices=sorted(BRANCH_BY_NAME), required=True)
    wf.add_argument("--n", type=int, required=True)
    wf.add_argument("--m", type=int, required=True)
    wf.add_argument("--k", type=float, default=0.0)
    wf.add_argument("--B", type=float, required=True)
    wf.add_argument("--M", type=float, required=True)
    wf.add_argument("--r-max", type=float, default=6.0)
    wf.add_argument("--points", type=int, default=200)
    wf.add_argument("--output-prefix", type=str, required=True,
                    help="writes PREFIX.csv (sampled) and PREFIX.json (exact)")
    wf.add_argument("--plot-data", type=str, default=None,
                    help="also write r vs component magnitudes")

    vf = sub.add_parser("verify", help="run the verification suites")
    vf.add_argument("--quick", action="store_true",
                    help="skip the finite-difference oracle")
    vf.add_argument("--perturb", action="store_true",
                    help=argparse.SUPPRESS)  # test hook: inject a failure
    return parser


def _validate_positive(name: str, value: float) -> None:
    if value <= 0:
        raise UsageError(f"{name} must be > 0, got {value}")


class UsageError(Exception):
    pass


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_spectrum(args) -> int:
    _validate_positive("B", args.B)
    _validate_positive("M", args.M)
    if args.n_max < 0:
        raise UsageError(f"n-max must be >= 0, got {args.n_max}")
    if args.m is not None:
        m_range = [args.m]
    else:
        lo = args.m_min if args.m_min is not None else 0
        hi = args.m_max if args.m_max is not None else 0
        m_range = range(lo, hi + 1)
        if not m_range:
            raise UsageError(f"empty m range [{lo}, {hi}]")
    k_values = _parse_k_list(args.k)
    if not k_values:
        raise UsageError("at least one k value required")
    branches = tuple(Branch) if args.branch is None \
        else (BRANCH_BY_NAME[args.branch],)
    levels = enumerate_levels(args.n_max, m_range, k_values, args.B, args.M,
                              branches=branches)
    text = levels_to_csv(levels) if args.format == "csv" \
        else levels_to_json(levels) + "\n"
    _write(args.output, text)
    if args.plot_data is not None:
        lines = ["# m epsilon branch"]
        for lv in levels:
            lines.append(f"{lv.m} {format(lv.epsilon, '.9g')} {lv.branch.value}")
        _write(args.plot_data, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_wavefunction(args) -> int:
    for name in ("B", "M"):
        _validate_positive(name, getattr(args, name))
    if args.n < 0:
        raise UsageError(f"n must be >= 0, got {args.n}")
    branch = BRANCH_BY_NAME[args.branch]
    if branch is Branch.SCALAR:
        state = build_scalar_class(args.n, args.m, args.k, args.B, args.M)
    else:
        variant = "A" if branch is Branch.PLUS_B else "B"
        state = build_branch_state(variant, args.n, args.m, args.k,
                                   args.B, args.M)
    res = residual(state)
    print(f"branch={branch.value} n={args.n} m={args.m} k={args.k} "
          f"epsilon={format(state.epsilon, '.9g')} residual={res:.3e}")
    r = np.linspace(args.r_max / args.points, args.r_max, args.points)
    _write(args.output_prefix + ".csv", state.sample_csv(r))
    _write(args.output_prefix + ".json", state.to_json() + "\n")
    if args.plot_data is not None:
        comps = state.components()
        lines = ["# r " + " ".join(comps)]
        mags = {name: np.abs(comp(r)) for name, comp in comps.items()}
        for i, ri in enumerate(r):
            row = [format(float(ri), ".9g")]
            row += [format(float(mags[name][i]), ".9g") for name in comps]
            lines.append(" ".join(row))
        _write(args.plot_data, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_all(quick=args.quick, perturb=args.perturb)
    width = max(len(f"{r.suite}: {r.name}") for r in results)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        label = f"{r.suite}: {r.name}"
        print(f"{label:<{width}}  {status}  {r.detail}".rstrip())
        if not r.passed:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"spectrum": cmd_spectrum, "wavefunction": cmd_wavefunction,
               "verify": cmd_verify}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateParameterError as exc:
        print(f"error: degenerate parameters: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as exc:
        print(f"error: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
