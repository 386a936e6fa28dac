"""Command-line interface: evaluate kernels and potentials, or run the verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain or
singularity error.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import __version__, fourier, gegenbauer, potentials, verify
from .errors import ConvergenceError, DomainError, RepresentationError, SphereGreenError
from .fundsol import greens_theta
from .geometry import HopfPoint, SpherePoint

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
OUTPUT_DIR_ENV = "SPHEREGREEN_OUTPUT_DIR"
EVAL_KINDS = ("greens", "fourier-s2", "fourier-s3", "fourier-quad", "gegenbauer",
              "potential", "binding", "superintegrable")
EPS = 2.220446049250313e-16


class UsageError(Exception):
    """Bad command-line input that argparse cannot catch on its own."""


@dataclass
class Table:
    columns: Sequence[str]
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)


def parse_grid(text: str) -> list[float]:
    """Inclusive grid "start:stop:step", or a comma-separated list of values."""
    if ":" not in text:
        return [float(x) for x in text.split(",") if x.strip()]
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid {text!r} must look like start:stop:step")
    a, b, h = (float(x) for x in parts)
    if not h > 0 or b < a:
        raise UsageError(f"grid {text!r} needs step > 0 and stop >= start")
    n = int(math.floor((b - a) / h + 1e-9)) + 1
    return [round(a + i * h, 12) for i in range(n)]


def _floats(text: str | None) -> tuple:
    if not text:
        return ()
    return tuple(float(x) for x in text.split(","))


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_csv(table: Table, fh, timestamp: bool = True) -> None:
    """CSV with ``#``-prefixed metadata lines and round-trip float formatting."""
    fh.write(f"# spheregreen {__version__}\n")
    if timestamp:
        fh.write(f"# generated: {_dt.datetime.now(_dt.timezone.utc).isoformat(timespec='seconds')}\n")
    for key, val in table.metadata.items():
        fh.write(f"# {key}: {val}\n")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(table.columns)
    for row in table.rows:
        w.writerow([_fmt(v) for v in row])


def write_json(table: Table, fh, timestamp: bool = True) -> None:
    meta = {"version": __version__, **table.metadata}
    if timestamp:
        meta["generated"] = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    records = [dict(zip(table.columns, row)) for row in table.rows]
    json.dump({"metadata": meta, "records": records}, fh, indent=1)
    fh.write("\n")


# --- argument checks -----------------------------------------------------

def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for eval {args.kind}")


def _check_positive(name: str, value: float) -> float:
    if not (math.isfinite(value) and value > 0):
        raise DomainError(f"--{name}={value} must be positive")
    return value


def _check_d(args, low: int = 2) -> int:
    if args.d is None or args.d < low:
        raise DomainError(f"--d={args.d} must be an integer >= {low}")
    return args.d


def _check_angle(name: str, value: float, lo: float = 0.0, hi: float = math.pi) -> float:
    if not (math.isfinite(value) and lo <= value <= hi):
        raise DomainError(f"--{name}={value} must lie in [{lo:g}, {hi:g}]")
    return value


def _orders(args) -> list[int]:
    if args.m is not None and args.M is not None:
        raise UsageError("give either --m or --M, not both")
    if args.M is not None:
        if args.M < 0:
            raise DomainError(f"--M={args.M} must be >= 0")
        return list(range(args.M + 1))
    m = 0 if args.m is None else args.m
    if m < 0:
        raise DomainError(f"--m={m} must be >= 0")
    return [m]


def _guarded(name: str, value, fn):
    """Evaluate fn(); re-raise domain errors with the grid parameter named."""
    try:
        return fn()
    except DomainError as exc:
        if name.lstrip("-").replace("-", "_") in str(exc):
            raise
        raise type(exc)(f"{name}={value}: {exc}") from None


# --- eval commands -------------------------------------------------------

def eval_greens(args) -> Table:
    d = _check_d(args)
    R = _check_positive("R", args.R)
    thetas = parse_grid(args.theta_grid) if args.theta_grid else None
    if thetas is None:
        _need(args, "theta_sep")
        thetas = [args.theta_sep]
    rows = []
    for t in thetas:
        v = _guarded("--theta-sep", t, lambda: greens_theta(d, R, t))
        rows.append([t, v, "closed_form", 4 * EPS * (abs(v) + 1e-300) * d])
    return Table(("theta_sep", "value", "method", "est_error"), rows, {"kind": "greens", "d": d, "R": R})


def _coeff_rows(coeffs) -> list:
    return [[c.m, c.value, c.method, c.est_error] for c in coeffs]


def eval_fourier_s2(args) -> Table:
    _need(args, "theta", "theta_p")
    th = _check_angle("theta", args.theta)
    thp = _check_angle("theta-p", args.theta_p)
    rows = _coeff_rows(fourier.fourier_coeff_s2(m, th, thp) for m in _orders(args))
    return Table(fourier.TABLE_COLUMNS, rows, {"kind": "fourier-s2", "theta": th, "theta_p": thp})


def eval_fourier_s3(args) -> Table:
    _need(args, "theta", "theta_p", "theta2", "theta2_p")
    angles = [_check_angle(n, getattr(args, n.replace("-", "_"))) for n in ("theta", "theta-p", "theta2", "theta2-p")]
    rows = _coeff_rows(fourier.fourier_coeff_s3(m, *angles, precision=args.precision) for m in _orders(args))
    meta = {"kind": "fourier-s3", "angles": ",".join(repr(a) for a in angles), "precision": args.precision}
    return Table(fourier.TABLE_COLUMNS, rows, meta)


def eval_fourier_quad(args) -> Table:
    d = _check_d(args)
    _need(args, "theta", "theta_p")
    mids, mids_p = _floats(args.mids), _floats(args.mids_p)
    if len(mids) != d - 2 or len(mids_p) != d - 2:
        raise DomainError(f"--mids/--mids-p need {d - 2} comma-separated angles each for d={d}")
    tol = args.tol if args.tol is not None else 1e-12
    rows = _coeff_rows(fourier.fourier_coeff_quadrature(d, m, args.theta, args.theta_p, mids, mids_p, tol)
                       for m in _orders(args))
    return Table(fourier.TABLE_COLUMNS, rows, {"kind": "fourier-quad", "d": d})


def eval_gegenbauer(args) -> Table:
    d = _check_d(args, 3)
    R = _check_positive("R", args.R)
    _need(args, "theta", "theta_p")
    mids, mids_p = _floats(args.mids), _floats(args.mids_p)
    if len(mids) != d - 2 or len(mids_p) != d - 2:
        raise DomainError(f"--mids/--mids-p need {d - 2} comma-separated angles each for d={d}")
    p = SpherePoint(R, args.theta, mids, args.phi)
    q = SpherePoint(R, args.theta_p, mids_p, args.phi_p)
    if args.L is not None:
        if args.L < 0:
            raise DomainError(f"--L={args.L} must be >= 0")
        sums = gegenbauer.gegenbauer_partial_sums(d, R, p, q, args.L)
        est = abs(sums[-1] - sums[-2]) if len(sums) > 1 else abs(sums[-1])
        row = [args.L, sums[-1], "gegenbauer_partial_sum", est]
    else:
        tol = args.tol if args.tol is not None else 1e-12
        val, n = gegenbauer.gegenbauer_sum_adaptive(d, R, p, q, tol=tol)
        row = [n - 1, val, "gegenbauer_adaptive", tol * abs(val)]
    meta = {"kind": "gegenbauer", "d": d, "R": R,
            "convergence_ratio": gegenbauer.convergence_ratio(p.theta, q.theta)}
    return Table(("L", "value", "method", "est_error"), [row], meta)


def _density_spec(args) -> potentials.DensitySpec:
    if args.density_json:
        return potentials.DensitySpec.from_json(args.density_json)
    if not args.density:
        raise UsageError("--density (or --density-json) is required")
    amp = args.rho0 if args.rho0 is not None else args.alpha
    if amp is None:
        raise UsageError("--rho0 (or --alpha) is required")
    extent = args.theta0 if args.theta0 is not None else args.varphi
    d = args.d if args.d is not None else (2 if args.density == "disc2" else 3)
    return potentials.DensitySpec(args.density, amp, extent, d=d, R=args.R, epsilon=args.epsilon)


def _grid(args) -> list[float]:
    if args.theta_grid:
        return parse_grid(args.theta_grid)
    _need(args, "theta")
    return [args.theta]


def eval_potential(args) -> Table:
    spec = _density_spec(args)
    rows = []
    for t in _grid(args):
        if spec.kind == "disc2":
            pv = _guarded("theta", t, lambda: potentials.potential_2disc(spec.amplitude, spec.R, spec.extent, t))
            rows.append([t, pv.value, pv.branch, "closed_form", 8 * EPS * max(1.0, abs(pv.value))])
        elif spec.kind == "ball3":
            pv = _guarded("theta", t, lambda: potentials.potential_3ball(spec.amplitude, spec.R, spec.extent, t))
            rows.append([t, pv.value, pv.branch, "closed_form", 8 * EPS * max(1.0, abs(pv.value))])
        elif spec.kind == "curve_segment":
            pt = _guarded("vartheta", t, lambda: HopfPoint(spec.R, t, args.phi1, 0.0))
            v = _guarded("vartheta", t, lambda: potentials.potential_curve_segment(spec.amplitude, spec.R,
                                                                                   spec.extent, pt))
            rows.append([t, v, "exterior", "closed_form", 8 * EPS * max(1.0, abs(v))])
        elif spec.kind in ("oscillator", "kepler"):
            pair = _pair(spec.kind, spec.d, spec.R, spec.amplitude, t, spec.epsilon)
            rows.append([t, pair.potential, "smooth", "closed_form", 8 * EPS * max(1.0, abs(pair.potential))])
        else:
            raise UsageError("tabulated densities are evaluated through the Python API (convolve_axisymmetric)")
    meta = {"kind": "potential", "density": spec.kind, "amplitude": repr(spec.amplitude),
            "extent": repr(spec.extent), "d": spec.d, "R": repr(spec.R)}
    return Table(("theta", "value", "branch", "method", "est_error"), rows, meta)


def _pair(kind, d, R, alpha, t, eps):
    if kind == "oscillator":
        return _guarded("theta", t, lambda: potentials.oscillator_pair(d, R, alpha, t))
    return _guarded("theta", t, lambda: potentials.kepler_pair(d, R, alpha, t, eps))


def eval_binding(args) -> Table:
    spec = _density_spec(args)
    if spec.kind == "disc2":
        v = potentials.binding_2disc(spec.amplitude, spec.R, spec.extent, variant=args.variant)
    elif spec.kind == "ball3":
        v = potentials.binding_3ball(spec.amplitude, spec.R, spec.extent)
    else:
        raise DomainError(f"--density={spec.kind}: binding energies are available for disc2 and ball3")
    row = [spec.extent, v, "closed_form", 16 * EPS * max(1.0, abs(v))]
    meta = {"kind": "binding", "density": spec.kind, "R": repr(spec.R), "variant": args.variant}
    return Table(("theta0", "value", "method", "est_error"), [row], meta)


def eval_superintegrable(args) -> Table:
    kind = args.pair
    d = _check_d(args)
    R = _check_positive("R", args.R)
    alpha = args.alpha if args.alpha is not None else 1.0
    rows = []
    for t in _grid(args):
        pr = _pair(kind, d, R, alpha, t, args.epsilon)
        rows.append([t, pr.potential, pr.density, "closed_form",
                     8 * EPS * max(1.0, abs(pr.potential), abs(pr.density))])
    meta = {"kind": "superintegrable", "pair": kind, "d": d, "R": repr(R), "alpha": repr(alpha)}
    if kind == "kepler" and d == 2:
        meta["point_source_strength"] = repr(potentials.kepler_delta_coefficient(2, alpha, args.epsilon))
    return Table(("theta", "potential", "density", "method", "est_error"), rows, meta)


EVALUATORS = {
    "greens": eval_greens, "fourier-s2": eval_fourier_s2, "fourier-s3": eval_fourier_s3,
    "fourier-quad": eval_fourier_quad, "gegenbauer": eval_gegenbauer, "potential": eval_potential,
    "binding": eval_binding, "superintegrable": eval_superintegrable,
}


# --- parser --------------------------------------------------------------

def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    p.add_argument("--output", "-o", help=f"output file (relative paths resolve against ${OUTPUT_DIR_ENV})")
    p.add_argument("--no-timestamp", action="store_true", help="omit the generation timestamp line")
    p.add_argument("--config", help="JSON file whose keys override command-line flags")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spheregreen",
                                     description="Fundamental solution of the Laplacian on hyperspheres.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a quantity and write a table")
    ev.add_argument("kind", choices=EVAL_KINDS)
    ev.add_argument("--d", type=int, help="dimension of the hypersphere")
    ev.add_argument("--R", type=float, default=1.0, help="radius (default 1)")
    ev.add_argument("--theta-sep", type=float, help="geodesic angle between the two points")
    ev.add_argument("--theta", type=float, help="radial angle of the field point")
    ev.add_argument("--theta-p", type=float, help="radial angle of the source point")
    ev.add_argument("--theta2", type=float, help="intermediate angle of the field point (S^3)")
    ev.add_argument("--theta2-p", type=float, help="intermediate angle of the source point (S^3)")
    ev.add_argument("--mids", help="comma-separated intermediate angles of the field point")
    ev.add_argument("--mids-p", help="comma-separated intermediate angles of the source point")
    ev.add_argument("--phi", type=float, default=0.0, help="azimuth of the field point")
    ev.add_argument("--phi-p", type=float, default=0.0, help="azimuth of the source point")
    ev.add_argument("--m", type=int, help="single Fourier order")
    ev.add_argument("--M", type=int, help="emit Fourier orders 0..M")
    ev.add_argument("--L", type=int, help="Gegenbauer truncation degree (adaptive if omitted)")
    ev.add_argument("--tol", type=float, help="tolerance in (0, 1e-2]")
    ev.add_argument("--precision", choices=("auto", "double", "extended"), default="auto")
    ev.add_argument("--theta-grid", help="inclusive grid start:stop:step or comma list")
    ev.add_argument("--density", choices=potentials.KINDS)
    ev.add_argument("--density-json", help="density specification as a JSON object")
    ev.add_argument("--rho0", type=float)
    ev.add_argument("--alpha", type=float)
    ev.add_argument("--theta0", type=float, help="source radius angle (disc2, ball3)")
    ev.add_argument("--varphi", type=float, help="curve-segment half-angle")
    ev.add_argument("--phi1", type=float, default=0.0, help="Hopf angle phi1 of the field point")
    ev.add_argument("--epsilon", type=float, help="regularization angle of the d = 2 Kepler pair")
    ev.add_argument("--pair", choices=("oscillator", "kepler"), default="oscillator")
    ev.add_argument("--variant", choices=("corrected", "printed"), default="corrected",
                    help="normalization of the disc binding energy")
    _add_output(ev)

    ve = sub.add_parser("verify", help="run verification suites")
    ve.add_argument("--suite", action="append", choices=tuple(verify.SUITES) + ("all",),
                    help="suite to run (repeatable; default all)")
    ve.add_argument("--d", help="comma-separated dimensions for the wronskian, jump and gegenbauer suites")
    ve.add_argument("--R", help="comma-separated radii for the flat-limit suite")
    ve.add_argument("--list", action="store_true", help="list the suites and exit")
    _add_output(ve)
    return parser


def _apply_config(args, parser) -> None:
    if not args.config:
        return
    try:
        data = json.loads(Path(args.config).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read --config {args.config}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("--config must hold a JSON object")
    for key, val in data.items():
        dest = key.replace("-", "_")
        if not hasattr(args, dest) or dest in ("command", "config"):
            raise UsageError(f"unknown config key {key!r}")
        setattr(args, dest, val)


def _open_output(args):
    if not args.output:
        return None
    path = Path(args.output)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _emit(table: Table, args, out) -> None:
    buf = io.StringIO()
    (write_json if args.format == "json" else write_csv)(table, buf, timestamp=not args.no_timestamp)
    path = _open_output(args)
    if path is None:
        out.write(buf.getvalue())
    else:
        path.write_text(buf.getvalue())


def cmd_eval(args, out) -> int:
    if args.tol is not None and not (0.0 < args.tol <= 1e-2):
        raise DomainError(f"--tol={args.tol} must lie in (0, 1e-2]")
    table = EVALUATORS[args.kind](args)
    table.metadata = {"command": f"eval {args.kind}", **table.metadata}
    _emit(table, args, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.list:
        for name, desc in verify.SUITES.items():
            out.write(f"{name}: {desc}\n")
        return EXIT_OK
    names = args.suite or ["all"]
    if "all" in names:
        names = list(verify.SUITES)
    try:
        dims = tuple(int(x) for x in args.d.split(",")) if args.d else None
        radii = tuple(float(x) for x in args.R.split(",")) if args.R else None
    except ValueError as exc:
        raise UsageError(f"bad --d/--R list: {exc}") from None
    if radii is not None and (len(radii) < 2 or any(not r > 0 for r in radii)):
        raise UsageError("--R needs at least two positive radii")
    results = []
    for name in names:
        results.extend(verify.run_suite(name, dims=dims, radii=radii))
    table = Table(("check", "status", "max_error", "tolerance", "cases", "failing"),
                  [[r.name, "pass" if r.passed else "fail", float(r.max_error), float(r.tolerance),
                    r.n_cases, len(r.failures)] for r in results],
                  {"command": "verify", "suites": ",".join(names)})
    if args.output or args.format == "json":
        _emit(table, args, out)
    else:
        for r in results:
            out.write(r.summary() + "\n")
            for key, val in r.extra.items():
                out.write(f"    {key}: {val!r}\n" if not isinstance(val, float) else f"    {key}: {val:.6g}\n")
            for line in r.failures[:verify.MAX_LISTED]:
                out.write(f"    {line}\n")
            if len(r.failures) > verify.MAX_LISTED:
                out.write(f"    ... {len(r.failures) - verify.MAX_LISTED} more\n")
    failed = [r.name for r in results if not r.passed]
    if failed:
        sys.stderr.write(f"verification failed: {', '.join(failed)}\n")
        return EXIT_VERIFY
    return EXIT_OK


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        _apply_config(args, parser)
        if args.command == "eval":
            return cmd_eval(args, out)
        return cmd_verify(args, out)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (DomainError, RepresentationError) as exc:
        sys.stderr.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except (ConvergenceError, SphereGreenError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
