"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or
configuration error (including unresolvable grids), 3 a numerical engine
refused the input (tails not decayed, parity mismatch, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io
from .config import RunConfig, parse_tolerance
from .eigenspace import EigenLabel, decompose, project
from .errors import GridMismatch, ResolutionError, SpectralError
from .fourier import apply_fourier, cosine_transform, sine_transform
from .hardy_titchmarsh import (
    PsiFunction,
    analyze_eigenfunction,
    eigen_residual,
    synthesize_eigenfunction,
)
from .hermite import build_basis
from .mellin import DEFAULT_LOG_MIN, mellin_forward, mellin_inverse
from .verify import SUITES, dumps_report, run_verification, validate_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ENGINE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _common_parser():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("configuration")
    g.add_argument("--config", type=Path, help="JSON file with RunConfig fields")
    g.add_argument("--grid-half-width", type=float, dest="half_width",
                   help="half width T of the line grid (default: self-dual grid)")
    g.add_argument("--grid-points", type=int, dest="n_points", help="points N of the line grid")
    g.add_argument("--basis-size", type=int, dest="basis_size", help="number of Hermite functions")
    g.add_argument("--mellin-points", type=int, dest="mellin_points",
                   help="points M of the logarithmic half-line grid")
    g.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                   help="override a check tolerance (repeatable)")
    g.add_argument("--json-report", type=Path, help="write the JSON report here")
    return p


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="plancherel",
        description="Spectral tools for the Fourier-Plancherel operator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run invariant suites")
    v.add_argument("suite", nargs="?", default="all", choices=("all",) + SUITES)

    t = sub.add_parser("transform", parents=[common], help="apply a transform to a sampled function")
    t.add_argument("kind", choices=("fourier", "mellin", "cosine", "sine"))
    t.add_argument("--in", dest="inp", type=Path, required=True)
    t.add_argument("--out", type=Path)
    t.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    t.add_argument("--log-min", type=float, default=DEFAULT_LOG_MIN,
                   help="ln t of the first sample for an inverse Mellin transform")

    pr = sub.add_parser("project", parents=[common], help="split a function into eigenspace components")
    pr.add_argument("--in", dest="inp", type=Path, required=True)
    pr.add_argument("--out", type=Path)
    pr.add_argument("--lambda", dest="label", help="1, i, -1 or -i (default: all four)")

    sy = sub.add_parser("synthesize", parents=[common], help="eigenfunction from a free parameter psi")
    sy.add_argument("--lambda", dest="label", required=True)
    sy.add_argument("--psi", "--in", dest="inp", type=Path, required=True)
    sy.add_argument("--out", type=Path)

    an = sub.add_parser("analyze", parents=[common], help="free parameter psi of an eigenfunction")
    an.add_argument("--lambda", dest="label", required=True)
    an.add_argument("--in", dest="inp", type=Path, required=True)
    an.add_argument("--out", type=Path)

    b = sub.add_parser("basis", parents=[common], help="export sampled Hermite functions")
    b.add_argument("--n", type=int, help="number of functions (default: basis size)")
    b.add_argument("--out", type=Path)
    return parser


def load_config(args):
    config = RunConfig.from_file(args.config) if args.config else RunConfig()
    tols = {}
    for item in args.tol:
        try:
            name, value = parse_tolerance(item)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        tols[name] = value
    return config.replace(
        half_width=args.half_width,
        n_points=args.n_points,
        basis_size=args.basis_size,
        mellin_points=args.mellin_points,
        tolerances=tols or None,
    )


def _label(text):
    try:
        return EigenLabel.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read(reader, path):
    try:
        return reader(path)
    except FileNotFoundError:
        raise UsageError(f"{path}: no such file") from None
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        if isinstance(exc, SpectralError) and not isinstance(exc, (GridMismatch, ResolutionError)):
            raise
        raise UsageError(f"{path}: {exc}") from None


def _emit(args, summary):
    validate_report(summary)
    text = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    if args.json_report:
        args.json_report.write_text(text)
    sys.stdout.write(text)


def _summary(command, config, results):
    return {"command": command, "config": config.to_dict(), "results": results}


def _half_norm(f):
    return float(np.sqrt(f.norm2()))


def _critical_norm(phi):
    return float(np.sqrt(phi.norm2() / (2 * np.pi)))


def cmd_verify(args, config):
    report = run_verification(args.suite, config)
    validate_report(report)
    for c in report["checks"]:
        mark = "PASS" if c["passed"] else "FAIL"
        print(f"{mark} {c['name']:<36} {c['residual']:.3e} (tol {c['tolerance']:.1e})")
    for k, v in sorted(report["constants"].items()):
        print(f"     {k} = {v}")
    if args.json_report:
        args.json_report.write_text(dumps_report(report))
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_transform(args, config):
    results = {"kind": args.kind, "direction": args.direction}
    if args.kind == "fourier":
        x = _read(io.read_grid_function, args.inp)
        y = apply_fourier(x, 1 if args.direction == "forward" else 3)
        if args.out:
            io.write_grid_function(args.out, y)
        results.update(input_norm=x.norm(), output_norm=y.norm())
    elif args.kind == "mellin":
        if args.direction == "forward":
            f = _read(io.read_half_line, args.inp)
            phi = mellin_forward(f)
            if args.out:
                io.write_critical_line(args.out, phi)
            results.update(input_norm=_half_norm(f), output_norm=_critical_norm(phi))
        else:
            phi = _read(io.read_critical_line, args.inp)
            f = mellin_inverse(phi, args.log_min)
            if args.out:
                io.write_half_line(args.out, f)
            results.update(input_norm=_critical_norm(phi), output_norm=_half_norm(f))
    else:
        if args.direction == "inverse":
            raise UsageError("cosine and sine transforms are their own inverses; use forward")
        f = _read(io.read_half_line, args.inp)
        g = cosine_transform(f) if args.kind == "cosine" else sine_transform(f)
        if args.out:
            io.write_half_line(args.out, g)
        results.update(input_norm=_half_norm(f), output_norm=_half_norm(g))
    _emit(args, _summary("transform", config, results))
    return EXIT_OK


def cmd_project(args, config):
    x = _read(io.read_grid_function, args.inp)
    results = {"input_norm": x.norm()}
    if args.label:
        label = _label(args.label)
        p = project(x, label)
        results["label"] = str(label)
        results[f"norm[{label}]"] = p.norm()
        if args.out:
            io.write_grid_function(args.out, p)
    else:
        parts = decompose(x)
        for label, p in zip(EigenLabel, parts):
            results[f"norm[{label}]"] = p.norm()
        if args.out:
            header = ["t"]
            cols = [x.t]
            for label, p in zip(EigenLabel, parts):
                header += [f"re[{label}]", f"im[{label}]"]
                cols += [p.values.real, p.values.imag]
            io.write_columns(args.out, header, cols)
    _emit(args, _summary("project", config, results))
    return EXIT_OK


def cmd_synthesize(args, config):
    label = _label(args.label)
    crit = _read(io.read_critical_line, args.inp)
    psi = PsiFunction(crit, label.psi_parity)
    x = synthesize_eigenfunction(psi, label, config.grid)
    if args.out:
        io.write_grid_function(args.out, x)
    results = {
        "label": str(label),
        "norm": x.norm(),
        "eigen_residual": eigen_residual(x, label),
    }
    _emit(args, _summary("synthesize", config, results))
    return EXIT_OK


def cmd_analyze(args, config):
    label = _label(args.label)
    x = _read(io.read_grid_function, args.inp)
    psi = analyze_eigenfunction(x, label, config.log_grid)
    if args.out:
        io.write_critical_line(args.out, psi.critical)
    results = {
        "label": str(label),
        "parity": psi.parity,
        "stable_eta": psi.stable_eta,
        "truncated": psi.truncated,
    }
    _emit(args, _summary("analyze", config, results))
    return EXIT_OK


def cmd_basis(args, config):
    n = config.basis_size if args.n is None else args.n
    if n < 1:
        raise UsageError("--n must be positive")
    basis = build_basis(config.grid, n)
    if args.out:
        io.write_basis(args.out, basis)
    results = {
        "size": basis.size,
        "orthonormality": float(np.max(np.abs(basis.gram() - np.eye(basis.size)))),
    }
    _emit(args, _summary("basis", config, results))
    return EXIT_OK


_COMMANDS = {
    "verify": cmd_verify,
    "transform": cmd_transform,
    "project": cmd_project,
    "synthesize": cmd_synthesize,
    "analyze": cmd_analyze,
    "basis": cmd_basis,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args)
        return _COMMANDS[args.command](args, config)
    except (UsageError, ResolutionError, GridMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SpectralError as exc:
        print(f"engine: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except (OSError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
