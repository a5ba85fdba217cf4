"""Command-line interface: ``starlike <command> ...``.

Exit codes: 0 success, 2 invalid configuration, 3 a hypothesis of the result in use is
violated by the requested parameters, 4 a verification suite found a
counterexample, 1 a numerical routine failed to converge.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import generators as gen
from . import growth, membership, radii
from .errors import ConvergenceError, HypothesisError, ParameterError
from .generators import Family, GeneratorSpec
from .output import to_csv, to_json, to_svg
from .schwarz import SchwarzSpec, random_schwarz

EXIT_OK = 0
EXIT_NUMERIC = 1
EXIT_CONFIG = 2
EXIT_HYPOTHESIS = 3
EXIT_VERIFY = 4

SEED_ENV = "STARLIKE_SEED"
DEFAULT_RADII = tuple(round(0.1 * k, 1) for k in range(1, 10))
VERIFY_RADII = (0.2, 0.5, 0.8)


@dataclass(frozen=True)
class RunConfig:
    command: str
    generator: Optional[GeneratorSpec] = None
    radii: tuple = ()
    grid: int = gen.DEFAULT_GRID
    order: int = 64
    seed: int = membership.DEFAULT_SEED
    output_format: str = "csv"
    output_path: Optional[str] = None

    def __post_init__(self):
        for r in self.radii:
            if not 0 < r < 1:
                raise ParameterError(f"radii must lie in (0,1), got {r}")
        if self.grid < 64:
            raise ParameterError(f"grid must be at least 64, got {self.grid}")
        if self.order < 16:
            raise ParameterError(f"order must be at least 16, got {self.order}")


class VerificationFailure(Exception):
    """A suite ran to completion and found counterexamples; carries the report text."""

    def __init__(self, message: str, text: str):
        super().__init__(message)
        self.text = text


# ---------------------------------------------------------------------------
# helpers


def _spec_from_args(args) -> GeneratorSpec:
    if args.family is None:
        raise ParameterError("--family is required")
    return gen.from_params(args.family, alpha=args.alpha, beta=args.beta, gamma=args.gamma, eta=args.eta)


def _seed(args) -> int:
    env = os.environ.get(SEED_ENV)
    if env is not None and env.strip():
        try:
            return int(env)
        except ValueError:
            raise ParameterError(f"{SEED_ENV} must be an integer, got {env!r}") from None
    return args.seed


def _config(args, command: str, generator=None, radii_=(), **kw) -> RunConfig:
    return RunConfig(
        command=command,
        generator=generator,
        radii=tuple(radii_),
        output_format=args.format,
        output_path=args.output,
        **kw,
    )


def _render_table(rows, columns, fmt: str, meta: Optional[dict] = None) -> str:
    if fmt == "csv":
        return to_csv(rows, columns)
    if fmt == "json":
        return to_json({**(meta or {}), "rows": [{c: row.get(c) for c in columns} for row in rows]})
    raise ParameterError(f"format {fmt} is not available for this command (use csv or json)")


def _grid_values(args) -> list[float]:
    if args.values:
        return [float(v) for v in args.values]
    if not args.step > 0:
        raise ParameterError(f"step must be positive, got {args.step}")
    if args.stop < args.start:
        raise ParameterError(f"stop {args.stop} lies below start {args.start}")
    count = int(math.floor((args.stop - args.start) / args.step + 1e-9))
    values = [round(args.start + k * args.step, 12) for k in range(count + 1)]
    if values[-1] < args.stop - 1e-9:
        values.append(args.stop)
    return values


def _monotone_flags(values: list[float], decreasing: bool) -> list[Optional[bool]]:
    flags: list[Optional[bool]] = [None]
    for prev, cur in zip(values, values[1:]):
        if math.isnan(prev) or math.isnan(cur):
            flags.append(None)
        else:
            flags.append(cur < prev if decreasing else cur > prev)
    return flags


RADIUS_COLUMNS = ["value", "bracket_lo", "bracket_hi", "residual", "iterations", "note"]


def _radius_row(res: radii.RadiusResult) -> dict:
    return {**res.as_row(), "note": res.note}


# ---------------------------------------------------------------------------
# commands


def cmd_growth(args) -> str:
    spec = _spec_from_args(args)
    cfg = _config(args, "growth", spec, args.r, grid=args.grid)
    rows = [growth.auxiliary_bounds(spec, r, cfg.grid).as_row() for r in cfg.radii]
    for row in rows:
        row["tolerance"] = growth.CROSS_CHECK_RTOL
    columns = ["r", "lower", "upper", "re_bound", "deriv_bound", "length_bound", "sharp", "discrepancy", "tolerance"]
    return _render_table(rows, columns, cfg.output_format, {"spec": spec.label()})


def cmd_radius(args) -> str:
    kind = args.kind
    if kind == "koebe":
        spec = _spec_from_args(args)
        k = growth.koebe_limit(spec)
        lo, hi = sorted((k.value, k.numeric_limit))
        note = "closed form, numeric limit cross-checked" if k.exact else "numeric limit of a grid-scanned envelope (heuristic)"
        row = {"value": k.value, "bracket_lo": lo, "bracket_hi": hi, "residual": k.limit_gap, "iterations": k.steps, "note": note}
        meta = {"spec": spec.label()}
    elif kind == "bohr":
        row = _radius_row(radii.bohr_radius_booth(_required(args.alpha, "--alpha"), tol=args.tol, xtol=args.xtol))
        meta = {"alpha": args.alpha}
    elif kind == "starlike":
        res = radii.starlikeness_radius(_required(args.gamma, "--gamma"), _required(args.eta, "--eta"), args.order)
        row = _radius_row(res)
        meta = {"gamma": args.gamma, "eta": args.eta, "order": args.order}
    elif kind == "eta0":
        row = _radius_row(radii.eta0(_required(args.gamma, "--gamma"), tol=args.tol, xtol=args.xtol))
        meta = {"gamma": args.gamma}
    else:
        row = _radius_row(radii.convexity_threshold_modkoebe(tol=args.tol, xtol=args.xtol))
        meta = {"closed_form": 2 - math.sqrt(3)}
    return _render_table([row], RADIUS_COLUMNS, args.format, {"radius": kind, **meta})


def _required(value, flag: str):
    if value is None:
        raise ParameterError(f"{flag} is required")
    return value


def cmd_plot(args) -> str:
    spec = _spec_from_args(args)
    if args.samples < 64:
        raise ParameterError(f"samples must be at least 64, got {args.samples}")
    rho = gen.default_boundary_rho(spec) if args.rho is None else args.rho
    try:
        curve = gen.boundary_curve(spec, rho, args.samples)
    except ValueError as exc:
        raise ParameterError(str(exc)) from None
    if args.format == "svg":
        return to_svg(curve)
    theta = 2 * np.pi * np.arange(args.samples) / args.samples
    rows = [{"theta": float(t), "re_psi": float(w.real), "im_psi": float(w.imag)} for t, w in zip(theta, curve)]
    return _render_table(rows, ["theta", "re_psi", "im_psi"], args.format, {"spec": spec.label(), "rho": rho})


def _verify_growth(args, seed: int) -> tuple[str, list]:
    spec = _spec_from_args(args)
    for r in args.r:
        if not 0 < r <= membership.MAX_VERIFY_RADIUS:
            raise ParameterError(f"r={r} exceeds the series validity margin (0, {membership.MAX_VERIFY_RADIUS}]")
    cfg = _config(args, "verify-growth", spec, args.r, grid=args.grid, order=args.order, seed=seed)
    rng = np.random.default_rng(seed)
    rows, failures = [], []
    for i in range(args.samples):
        sample = membership.sample_member(spec, random_schwarz(rng), cfg.order, check=False)
        report = membership.verify_growth(sample, cfg.radii, cfg.grid)
        rows.append(
            {
                "sample": i,
                "witness": report.witness,
                "passed": report.passed,
                "violations": len(report.violations),
                "max_truncation": max(row["truncation"] for row in report.rows),
                "tolerance": membership.GROWTH_EPS,
            }
        )
        failures += [{"sample": i, "witness": report.witness, **v.__dict__} for v in report.violations]
    columns = ["sample", "witness", "passed", "violations", "max_truncation", "tolerance"]
    meta = {"property": "growth", "spec": spec.label(), "seed": seed, "radii": list(cfg.radii), "passed": not failures}
    if args.format == "json":
        return to_json({**meta, "samples": rows, "failures": failures}), failures
    return _render_table(rows, columns, args.format), failures


def _verify_bohr(args, seed: int) -> tuple[str, list]:
    alpha = _required(args.alpha, "--alpha")
    spec = gen.booth(alpha)
    r = radii.bohr_radius_booth(alpha).value if args.r is None else args.r
    cfg = _config(args, "verify-bohr", spec, [r], order=args.order, seed=seed)
    extremal = membership.sample_member(spec, SchwarzSpec.identity(), cfg.order)
    rng = np.random.default_rng(seed)
    rows, failures = [], []
    for i in range(args.samples):
        report = membership.verify_bohr_pair(extremal, random_schwarz(rng), r)
        row = {
            "sample": i,
            "r": r,
            "majorant_g": report.majorant_g,
            "majorant_f": report.majorant_f,
            "extremal_at_r": report.extremal_at_r,
            "covering_radius": report.covering_radius,
            **{f"slack_{k}": v for k, v in report.slacks.items()},
            "passed": report.passed,
            "tolerance": -membership.BOHR_SLACK,
        }
        rows.append(row)
        if not report.passed:
            failures.append({"sample": i, "r": r, "slacks": report.slacks})
    columns = list(rows[0]) if rows else ["sample"]
    meta = {"property": "bohr", "alpha": alpha, "seed": seed, "r": r, "passed": not failures}
    if args.format == "json":
        return to_json({**meta, "samples": rows, "failures": failures}), failures
    return _render_table(rows, columns, args.format), failures


def _verify_subordination(args, seed: int) -> tuple[str, list]:
    spec = _spec_from_args(args)
    cfg = _config(args, "verify-subordination", spec, grid=args.grid, order=args.order, seed=seed)
    rng = np.random.default_rng(seed)
    rows, failures = [], []
    experimental = False
    for i in range(args.samples):
        sample = membership.sample_member(spec, random_schwarz(rng), cfg.order, check=False)
        report = membership.verify_fz_subordination(sample, cfg.grid)
        experimental = report.experimental
        rows.append(
            {
                "sample": i,
                "witness": report.witness,
                "checked": report.checked,
                "exterior": len(report.exterior),
                "ambiguous": len(report.ambiguous),
                "passed": report.passed,
                "experimental": report.experimental,
            }
        )
        for rho, theta, value in report.exterior + report.ambiguous:
            failures.append({"sample": i, "witness": report.witness, "rho": rho, "theta": theta, "value": value})
    columns = ["sample", "witness", "checked", "exterior", "ambiguous", "passed", "experimental"]
    meta = {"property": "subordination", "spec": spec.label(), "seed": seed, "experimental": experimental, "passed": not failures}
    if args.format == "json":
        return to_json({**meta, "samples": rows, "failures": failures}), failures
    return _render_table(rows, columns, args.format), failures


def cmd_verify(args) -> str:
    seed = _seed(args)
    suite = {"growth": _verify_growth, "bohr": _verify_bohr, "subordination": _verify_subordination}[args.suite]
    text, failures = suite(args, seed)
    if failures:
        where = ", ".join(
            f"sample {f['sample']}" + (f" (r={f['r']:.6g}, theta={f['theta']:.6g})" if "theta" in f and "r" in f else "")
            for f in failures[:10]
        )
        raise VerificationFailure(f"{args.suite} failed for {len(failures)} point(s) at seed {seed}: {where}", text)
    return text


def cmd_sweep(args) -> str:
    values = _grid_values(args)
    rows = []
    if args.kind == "bohr":
        for a in values:
            row = {"alpha": a}
            try:
                res = radii.bohr_radius_booth(a, tol=args.tol, xtol=args.xtol)
                row.update(_radius_row(res), in_range=0 < res.value < 1 / 3, status="ok")
            except (HypothesisError, ParameterError) as exc:
                row.update(value=math.nan, in_range=None, status="hypothesis_violated", note=str(exc))
            rows.append(row)
        for row, flag in zip(rows, _monotone_flags([r["value"] for r in rows], decreasing=True)):
            row["decreasing"] = flag
        columns = ["alpha", *RADIUS_COLUMNS[:5], "in_range", "decreasing", "status", "note"]
    elif args.kind == "eta0":
        for g in values:
            row = {"gamma": g}
            try:
                res = radii.eta0(g, tol=args.tol, xtol=args.xtol)
                row.update(_radius_row(res), in_unit_interval=0 < res.value < 1, status="ok")
            except HypothesisError as exc:
                row.update(value=math.nan, in_unit_interval=None, status="hypothesis_violated", note=str(exc))
            rows.append(row)
        for row, flag in zip(rows, _monotone_flags([r["value"] for r in rows], decreasing=True)):
            row["decreasing"] = flag
        columns = ["gamma", *RADIUS_COLUMNS[:5], "in_unit_interval", "decreasing", "status", "note"]
    else:
        if args.family is None:
            raise ParameterError("--family is required")
        fixed = {"alpha": args.alpha, "beta": args.beta, "gamma": args.gamma, "eta": args.eta}
        for v in values:
            row = {args.param: v}
            try:
                spec = gen.from_params(args.family, **{**fixed, args.param: v})
            except ParameterError as exc:
                row.update(value=math.nan, status="invalid", note=str(exc))
                rows.append(row)
                continue
            k = growth.koebe_limit(spec)
            row.update(k.as_row(), status="ok", note="")
            rows.append(row)
        for row, flag in zip(rows, _monotone_flags([r["value"] for r in rows], decreasing=True)):
            row["decreasing"] = flag
        columns = [args.param, "value", "numeric_limit", "limit_gap", "steps", "exact", "decreasing", "status", "note"]
    return _render_table(rows, columns, args.format, {"sweep": args.kind})


def cmd_fixtures(args) -> str:
    from .fixtures import regenerate_fixtures

    report = regenerate_fixtures(args.root, tol=args.tol, update=args.update)
    text = to_csv(report.rows, ["name", "status", "sha256"])
    if report.mismatches:
        raise VerificationFailure(f"fixture drift in: {', '.join(report.mismatches)}", text)
    return text


# ---------------------------------------------------------------------------
# parser


def _add_generator(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", choices=[f.value for f in Family], required=required)
    for name in ("alpha", "beta", "gamma", "eta"):
        p.add_argument(f"--{name}", type=float)


def _add_output(p: argparse.ArgumentParser, formats=("csv", "json"), default="csv") -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--output", help="write to this path instead of stdout")


def _add_tol(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=radii.DEFAULT_TOL, help="residual tolerance")
    p.add_argument("--xtol", type=float, default=radii.DEFAULT_XTOL, help="bracket width tolerance")


def _add_range(p: argparse.ArgumentParser) -> None:
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--step", type=float)
    p.add_argument("--values", type=float, nargs="+", help="explicit parameter values (overrides the range)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starlike", description="Bounds and radii for starlike classes defined by subordination.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("growth", help="growth, real-part, derivative and length bounds")
    _add_generator(p)
    p.add_argument("--r", type=float, nargs="+", default=list(DEFAULT_RADII))
    p.add_argument("--grid", type=int, default=gen.DEFAULT_GRID)
    _add_output(p)
    p.set_defaults(handler=cmd_growth)

    p = sub.add_parser("radius", help="covering, Bohr, starlikeness and threshold radii")
    p.add_argument("kind", choices=["koebe", "bohr", "starlike", "eta0", "convexity-threshold"])
    _add_generator(p, required=False)
    p.add_argument("--order", type=float, default=0.0, help="order of starlikeness")
    _add_tol(p)
    _add_output(p)
    p.set_defaults(handler=cmd_radius)

    p = sub.add_parser("plot", help="boundary curve psi(rho e^{i theta})")
    _add_generator(p)
    p.add_argument("--rho", type=float)
    p.add_argument("--samples", type=int, default=1024)
    _add_output(p, ("csv", "json", "svg"))
    p.set_defaults(handler=cmd_plot)

    p = sub.add_parser("verify", help="randomized checks on genuine class members")
    p.add_argument("suite", choices=["growth", "bohr", "subordination"])
    _add_generator(p, required=False)
    p.add_argument("--r", type=float, nargs="+")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=membership.DEFAULT_SEED)
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--order", type=int, default=64)
    _add_output(p, default="json")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("sweep", help="tabulate a radius over a parameter grid")
    p.add_argument("kind", choices=["bohr", "eta0", "koebe"])
    _add_generator(p, required=False)
    p.add_argument("--param", choices=["alpha", "beta", "gamma", "eta"], default="alpha")
    _add_range(p)
    _add_tol(p)
    _add_output(p)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("fixtures", help="regenerate golden tables and report checksum drift")
    p.add_argument("--root", default="fixtures")
    p.add_argument("--tol", type=float, help="override the solver residual tolerance")
    p.add_argument("--update", action="store_true", help="overwrite tables whose checksum changed")
    p.set_defaults(handler=cmd_fixtures, format="csv", output=None)
    return parser


_SUITE_DEFAULTS = {"growth": (100, list(VERIFY_RADII)), "bohr": (25, None), "subordination": (20, None)}
_SWEEP_DEFAULTS = {"bohr": (0.01, radii.BOHR_ALPHA_MAX, 0.01), "eta0": (0.1, 0.9, 0.1), "koebe": (0.1, 0.9, 0.1)}


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        samples, r = _SUITE_DEFAULTS[args.suite]
        args.samples = samples if args.samples is None else args.samples
        if args.r is None:
            args.r = r
        elif args.suite == "bohr":
            args.r = args.r[0]
    if args.command == "sweep":
        for name, default in zip(("start", "stop", "step"), _SWEEP_DEFAULTS[args.kind]):
            if getattr(args, name) is None:
                setattr(args, name, default)
    return args


def execute(argv: Optional[Sequence[str]] = None) -> tuple[int, str, str, Optional[str]]:
    """Run a command; returns ``(exit code, output text, error message, output path)``."""
    args = parse_args(argv)
    try:
        return EXIT_OK, args.handler(args), "", args.output
    except VerificationFailure as exc:
        return EXIT_VERIFY, exc.text, str(exc), args.output
    except HypothesisError as exc:
        return EXIT_HYPOTHESIS, "", f"hypothesis violated: {exc}", None
    except ValueError as exc:
        return EXIT_CONFIG, "", f"invalid configuration: {exc}", None
    except (ConvergenceError, ArithmeticError) as exc:
        return EXIT_NUMERIC, "", f"numerical failure: {exc}", None


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text, err, path = execute(argv)
    if text and path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    elif text:
        sys.stdout.write(text)
    if err:
        print(f"starlike: {err}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
