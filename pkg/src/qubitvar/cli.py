"""Command-line front end.

Subcommands: verify (invariant suites), report (all relations for one
state/observable triple), simulate (feedback trajectories), sweep
(tightness grids with a JSON sidecar), estimate (shot-based mixedness).
Every command is reproducible by default: the seed defaults to 0 and a
fixed seed plus fixed flags yields byte-identical output.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import feedback, relations, serialize, tightness, verify
from .core import BlochVector, PauliObservable, QubitState, mixedness
from .errors import CollinearObservables, DegenerateSpectrum, QubitVarError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2


class ConfigError(Exception):
    """Invalid flag combination or malformed value; maps to exit code 2."""


def _parse_floats(text: str, count: int, flag: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != count:
        raise ConfigError(f"{flag} needs {count} comma-separated numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise ConfigError(f"{flag}: {exc}") from exc


def _parse_state(text: str) -> QubitState:
    px, py, pz = _parse_floats(text, 3, "--bloch")
    try:
        return QubitState(BlochVector(px, py, pz))
    except QubitVarError as exc:
        raise ConfigError(f"--bloch: {exc}") from exc


def _parse_obs(text: str, flag: str) -> PauliObservable:
    return PauliObservable(*_parse_floats(text, 4, flag))


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _add_common(parser: argparse.ArgumentParser, fmt: str | None = None) -> None:
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    parser.add_argument("--output", default=None, help="output file (default stdout)")
    if fmt is not None:
        parser.add_argument(
            "--format", dest="fmt", choices=("csv", "json"), default=fmt,
            help=f"output format (this command emits {fmt})",
        )


def _require_format(args, expected: str) -> None:
    if args.fmt != expected:
        raise ConfigError(
            f"this command emits {expected} (grids and trajectories are CSV, "
            "scalar reports are JSON)"
        )


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    results = verify.run_all(samples=args.samples, seed=args.seed)
    lines = [f"invariant checks: {len(results)}"]
    lines += [r.line() for r in results]
    failed = [r for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if not failed else EXIT_FAILURE


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

def cmd_report(args) -> int:
    _require_format(args, "json")
    state = _parse_state(args.bloch)
    obs_a = _parse_obs(args.obs_a, "--obs-a")
    obs_b = _parse_obs(args.obs_b, "--obs-b")
    try:
        report = relations.compute_report(state, obs_a, obs_b)
    except DegenerateSpectrum as exc:
        raise ConfigError(f"degenerate observable spectrum: {exc}") from exc
    fields = {
        "varA": report.varA,
        "varB": report.varB,
        "product": report.product,
        "rur_bound": report.rur_bound,
        "sur_bound": report.sur_bound,
        "eq19_bound": report.eq19_bound,
        "remainder": report.remainder,
        "equality_residual": report.equality_residual,
        "sum_lhs": report.sum_lhs,
        "sum_bound": report.sum_bound,
        "entropy_sum": report.entropy_sum,
        "entropy_bound": report.entropy_bound,
        "mixedness": mixedness(state),
    }
    try:
        fields["mixedness_estimate"] = relations.estimate_mixedness(state, obs_a, obs_b)
    except CollinearObservables:
        fields["mixedness_estimate"] = None
        fields["reason"] = "collinear"
    _emit(serialize.report_json(fields), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# simulate
# ---------------------------------------------------------------------------

def _row_from_state(t: float, state: QubitState) -> tuple:
    b = state.bloch
    return (t, 0.5 * (1.0 - b.pz), 0.5 * b.px, 0.5 * b.py, 0.5 * (1.0 - b.norm_sq()))


def cmd_simulate(args) -> int:
    _require_format(args, "csv")
    params = feedback.FeedbackParams(alpha=args.alpha, lam=args.lam, omega=args.omega)
    if args.source in ("analytic", "both") and args.omega != 0.0:
        raise ConfigError("the analytic source requires omega = 0")
    try:
        times = feedback.step_times(args.t_end, args.step)
    except QubitVarError as exc:
        raise ConfigError(str(exc)) from exc

    if args.source == "numeric":
        traj = feedback.integrate(params, args.t_end, args.step)
        rows = [_row_from_state(float(t), s) for t, s in zip(traj.times, traj.states)]
        _emit(serialize.simulate_csv(rows, include_numeric=False), args.output)
        return EXIT_OK

    exact = [feedback.analytic_state(params, float(t)) for t in times]
    if args.source == "analytic":
        rows = [_row_from_state(float(t), s) for t, s in zip(times, exact)]
        _emit(serialize.simulate_csv(rows, include_numeric=False), args.output)
        return EXIT_OK

    traj = feedback.integrate(params, args.t_end, args.step)
    rows = []
    for t, exact_state, numeric_state in zip(times, exact, traj.states):
        base = _row_from_state(float(t), exact_state)
        deviation = float(np.abs(exact_state.matrix - numeric_state.matrix).max())
        rows.append(base + (0.5 * (1.0 - numeric_state.bloch.pz), deviation))
    _emit(serialize.simulate_csv(rows, include_numeric=True), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def cmd_sweep(args) -> int:
    _require_format(args, "csv")
    if args.fig2 == args.fig3:
        raise ConfigError("choose exactly one of --fig2 / --fig3")
    if args.steps < 2:
        raise ConfigError("--steps must be >= 2")
    if args.t_end <= 0:
        raise ConfigError("--t-end must be > 0")
    if args.output is None:
        raise ConfigError("sweep writes a CSV plus a JSON sidecar; --output is required")
    try:
        if args.fig2:
            grid = tightness.fig2_grid(steps=args.steps, lam=args.lam, t_max=args.t_end)
        else:
            grid = tightness.fig3_grid(steps=args.steps, alpha=args.alpha, t_max=args.t_end)
        grid = tightness.SweepGrid(
            alpha_axis=grid.alpha_axis,
            lambda_axis=grid.lambda_axis,
            t_axis=grid.t_axis,
            obs_a=_parse_obs(args.obs_a, "--obs-a"),
            obs_b=_parse_obs(args.obs_b, "--obs-b"),
        )
        points = tightness.sweep(grid, source=args.source, h=args.step)
    except (ValueError, QubitVarError) as exc:
        raise ConfigError(str(exc)) from exc
    violations = tightness.count_ordering_violations(points)
    _emit(serialize.sweep_csv(points), args.output)
    sidecar = Path(args.output).with_suffix(".meta.json")
    sidecar.write_text(serialize.sweep_sidecar_json(grid, args.source, args.seed, violations))
    return EXIT_OK


# ---------------------------------------------------------------------------
# estimate
# ---------------------------------------------------------------------------

def cmd_estimate(args) -> int:
    _require_format(args, "json")
    state = _parse_state(args.bloch)
    obs_a = _parse_obs(args.obs_a, "--obs-a")
    obs_b = _parse_obs(args.obs_b, "--obs-b")
    if args.shots < 1:
        raise ConfigError("--shots must be >= 1")
    try:
        # derived seeds: one measurement task index per observable
        counts_a = relations.simulate_shots(state, obs_a, args.shots, [args.seed, 0])
        counts_b = relations.simulate_shots(state, obs_b, args.shots, [args.seed, 1])
        obs_c = relations.symmetrized_product(obs_a, obs_b)
        if 2.0 * float(np.linalg.norm(obs_c.vec())) > relations.SPECTRUM_GAP_TOL:
            counts_c = relations.simulate_shots(state, obs_c, args.shots, [args.seed, 2])
        else:
            counts_c = None
        estimate, std_error = relations.estimate_mixedness_from_counts(
            counts_a, counts_b, counts_c, obs_a, obs_b
        )
    except CollinearObservables as exc:
        sys.stderr.write(f"collinear observables: {exc}\n")
        return EXIT_FAILURE
    except DegenerateSpectrum as exc:
        raise ConfigError(f"degenerate observable spectrum: {exc}") from exc
    true_mixedness = mixedness(state)
    difference = estimate - true_mixedness
    if std_error > 0.0:
        z_score = difference / std_error
    else:
        z_score = 0.0 if difference == 0.0 else None
    fields = {
        "shots": args.shots,
        "estimate": estimate,
        "std_error": std_error,
        "true_mixedness": true_mixedness,
        "z_score": z_score,
    }
    _emit(serialize.report_json(fields), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qubitvar",
        description="Variance-based uncertainty relations, mixedness metering "
        "and feedback-qubit simulation (angles in radians, time in 1/gamma).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run every library invariant check")
    p.add_argument("--samples", type=int, default=None,
                   help="override per-check sample counts (smoke mode)")
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="all uncertainty relations for one triple")
    p.add_argument("--bloch", required=True, help="state Bloch vector px,py,pz")
    p.add_argument("--obs-a", default="1,0,0,0", help="A coefficients a1,a2,a3,a4")
    p.add_argument("--obs-b", default="0,0,1,0", help="B coefficients b1,b2,b3,b4")
    _add_common(p, fmt="json")
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("simulate", help="feedback-model trajectory CSV")
    p.add_argument("--alpha", type=float, default=math.pi / 4,
                   help="initial superposition angle (radians)")
    p.add_argument("--lambda", dest="lam", type=float, default=0.0,
                   help="feedback strength")
    p.add_argument("--omega", type=float, default=0.0, help="Rabi drive (numeric only)")
    p.add_argument("--t-end", type=float, default=5.0, help="final time")
    p.add_argument("--step", type=float, default=1e-3, help="integrator step")
    p.add_argument("--source", choices=("analytic", "numeric", "both"),
                   default="analytic")
    _add_common(p, fmt="csv")
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("sweep", help="tightness grid CSV plus JSON sidecar")
    p.add_argument("--fig2", action="store_true",
                   help="(alpha, t) grid at fixed lambda")
    p.add_argument("--fig3", action="store_true",
                   help="(lambda, t) grid at fixed alpha")
    p.add_argument("--steps", type=int, default=50, help="points per swept axis")
    p.add_argument("--t-end", type=float, default=3.0, help="upper end of the t axis")
    p.add_argument("--lambda", dest="lam", type=float, default=1.0,
                   help="pinned lambda for --fig2")
    p.add_argument("--alpha", type=float, default=math.pi / 4,
                   help="pinned alpha for --fig3")
    p.add_argument("--source", choices=("analytic", "numeric"), default="analytic")
    p.add_argument("--step", type=float, default=1e-3,
                   help="integrator step for --source numeric")
    p.add_argument("--obs-a", default="1,0,0,0", help="A coefficients")
    p.add_argument("--obs-b", default="0,0,1,0", help="B coefficients")
    _add_common(p, fmt="csv")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("estimate", help="shot-based mixedness estimate JSON")
    p.add_argument("--bloch", required=True, help="state Bloch vector px,py,pz")
    p.add_argument("--obs-a", default="1,0,0,0", help="A coefficients")
    p.add_argument("--obs-b", default="0,0,1,0", help="B coefficients")
    p.add_argument("--shots", type=int, default=1_000_000,
                   help="shots per measured observable")
    _add_common(p, fmt="json")
    p.set_defaults(fn=cmd_estimate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ConfigError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG
    except QubitVarError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
