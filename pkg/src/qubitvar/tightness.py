"""Tightness ratios of the three uncertainty relations and parameter sweeps.

Each ratio divides a relation's left side by its own lower bound, so 1
means saturation.  ti1 uses the mixedness-weighted variance bound, ti2
the entropic bound, ti3 the variance-sum bound.  Points where a bound
vanishes are undefined and carried as None, never raised.  Sweeps walk
an (alpha, lambda, t) product grid in row-major order over states of the
feedback model, either from the closed-form solution or the integrator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import OBS_X, OBS_Z, PauliObservable, QubitState
from .errors import NonPositiveLambda, NonPositiveTime
from .feedback import FeedbackParams, analytic_state, evolve_to_times
from .relations import (
    complementarity_c,
    eur_check,
    mixedness_weighted_bound,
    sum_relation,
    variance,
)

# A bound at or below this is treated as vanished and the ratio undefined.
BOUND_FLOOR = 1e-12
# ti2 is undefined when the eigenbases coincide (c -> 1, bound -> 0).
C_ONE_TOL = 1e-12
# Ordering-violation tolerance used by sweep sidecars.
ORDERING_TOL = 1e-9


@dataclass(frozen=True)
class TightnessPoint:
    """Tightness values at one (alpha, t, lambda) grid point; None = undefined."""

    alpha: float
    t: float
    lam: float
    ti1: float | None
    ti2: float | None
    ti3: float | None


@dataclass(frozen=True)
class GridAxis:
    """One axis of a sweep grid.

    steps == 1 pins the axis to the single value lo (== hi).  Open
    endpoints are sampled by distributing the requested number of points
    strictly inside the interval.
    """

    lo: float
    hi: float
    steps: int
    include_lo: bool = True
    include_hi: bool = True

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError("steps must be >= 1")
        if self.steps == 1:
            if self.lo != self.hi:
                raise ValueError("a pinned axis (steps == 1) needs lo == hi")
        elif not self.lo < self.hi:
            raise ValueError("swept axes need lo < hi")

    def values(self) -> np.ndarray:
        if self.steps == 1:
            return np.array([self.lo])
        extra = (not self.include_lo) + (not self.include_hi)
        pts = np.linspace(self.lo, self.hi, self.steps + extra)
        if not self.include_lo:
            pts = pts[1:]
        if not self.include_hi:
            pts = pts[:-1]
        return pts


@dataclass(frozen=True)
class SweepGrid:
    """Product grid over (alpha, lambda, t) plus the observable pair."""

    alpha_axis: GridAxis
    lambda_axis: GridAxis
    t_axis: GridAxis
    obs_a: PauliObservable = OBS_X
    obs_b: PauliObservable = OBS_Z

    def __post_init__(self):
        if self.t_axis.lo < 0:
            raise ValueError("t axis must start at >= 0")
        if self.lambda_axis.values().min() < 0:
            raise ValueError("lambda axis must be non-negative")


def fig2_grid(steps: int = 50, lam: float = 1.0, t_max: float = 3.0) -> SweepGrid:
    """(alpha, t) grid at fixed lambda: alpha in (0, pi), t in (0, t_max]."""
    return SweepGrid(
        alpha_axis=GridAxis(0.0, math.pi, steps, include_lo=False, include_hi=False),
        lambda_axis=GridAxis(lam, lam, 1),
        t_axis=GridAxis(0.0, t_max, steps, include_lo=False),
    )


def fig3_grid(steps: int = 50, alpha: float = math.pi / 4, t_max: float = 3.0) -> SweepGrid:
    """(lambda, t) grid at fixed alpha: lambda in (0, 1], t in (0, t_max]."""
    return SweepGrid(
        alpha_axis=GridAxis(alpha, alpha, 1),
        lambda_axis=GridAxis(0.0, 1.0, steps, include_lo=False),
        t_axis=GridAxis(0.0, t_max, steps, include_lo=False),
    )


# ---------------------------------------------------------------------------
# ratios
# ---------------------------------------------------------------------------

def ti1(state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable) -> float | None:
    """Variance product over the mixedness-weighted bound; None if the bound vanishes."""
    bound = mixedness_weighted_bound(state, obs_a, obs_b)
    if bound <= BOUND_FLOOR:
        return None
    return variance(state, obs_a) * variance(state, obs_b) / bound


def ti2(state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable) -> float | None:
    """Entropy sum over log2(1/c); None when the eigenbases coincide (c = 1)."""
    if complementarity_c(obs_a, obs_b) >= 1.0 - C_ONE_TOL:
        return None
    entropy_sum, bound = eur_check(state, obs_a, obs_b)
    return entropy_sum / bound


def ti3(state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable) -> float | None:
    """Variance sum over var(A+B)/2; None if that bound vanishes."""
    lhs, bound = sum_relation(state, obs_a, obs_b)
    if bound <= BOUND_FLOOR:
        return None
    return lhs / bound


# ---------------------------------------------------------------------------
# closed-form ti1 along the feedback model (A = sx, B = sz)
# ---------------------------------------------------------------------------

def ti1_analytic_lambda1(alpha: float, t: float) -> float:
    """ti1 at feedback strength 1 as a function of the initial angle and time."""
    if t <= 0:
        raise NonPositiveTime(f"t = {t}")
    cos2a = math.cos(2 * alpha)
    sin2a_sq = math.sin(2 * alpha) ** 2
    num = (-1.0 + math.exp(3 * t) + 3.0 * cos2a) ** 2 * sin2a_sq
    den = (
        8.0 * math.exp(7 * t)
        - math.exp(t) * (1.0 - 3.0 * cos2a) ** 2
        - 2.0 * math.exp(4 * t) * (3.0 * cos2a - 1.0)
        - 9.0 * math.exp(6 * t) * sin2a_sq
    )
    return 1.0 + num / den


def ti1_analytic_alpha_pi4(lam: float, t: float) -> float:
    """ti1 for the equal-superposition initial state as a function of (lambda, t)."""
    if t <= 0:
        raise NonPositiveTime(f"t = {t}")
    if lam <= 0:
        raise NonPositiveLambda(f"lam = {lam}")
    lam_sq = lam**2
    big = math.exp(t + 2 * t * lam_sq)
    num = (
        (1.0 - math.exp(-t))
        * (1.0 + 2.0 * big * lam_sq)
        * (2.0 * big * (1.0 + lam_sq) - 1.0)
    )
    den = (
        big
        * (
            2.0
            + math.exp(2 * t * lam_sq)
            * (4.0 * lam_sq * (math.exp(t) - 1.0) * (lam_sq + 1.0) - 1.0)
        )
        - 1.0
    )
    return num / den


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

def sweep(grid: SweepGrid, source: str = "analytic", h: float = 1e-3) -> list[TightnessPoint]:
    """Evaluate the three ratios at every grid point, row-major.

    Iteration order is alpha (outer), lambda, t (inner), so output order
    is deterministic regardless of how points are evaluated.  source
    selects the closed-form feedback solution or the RK4 integrator with
    step h; both run at omega = 0.  Undefined ratios become None.
    """
    if source not in ("analytic", "numeric"):
        raise ValueError(f"source must be 'analytic' or 'numeric', got {source!r}")
    alphas = grid.alpha_axis.values()
    lams = grid.lambda_axis.values()
    ts = grid.t_axis.values()
    points: list[TightnessPoint] = []
    for alpha in alphas:
        for lam in lams:
            params = FeedbackParams(alpha=float(alpha), lam=float(lam))
            if source == "analytic":
                states = [analytic_state(params, float(t)) for t in ts]
            else:
                states = evolve_to_times(params, ts, h=h).states
            for t, state in zip(ts, states):
                points.append(
                    TightnessPoint(
                        alpha=float(alpha),
                        t=float(t),
                        lam=float(lam),
                        ti1=ti1(state, grid.obs_a, grid.obs_b),
                        ti2=ti2(state, grid.obs_a, grid.obs_b),
                        ti3=ti3(state, grid.obs_a, grid.obs_b),
                    )
                )
    return points


def count_ordering_violations(
    points: list[TightnessPoint], tol: float = ORDERING_TOL
) -> dict[str, int]:
    """Count grid points where ti1 exceeds ti2 or ti3 beyond tol.

    Only points with all three ratios defined participate, matching the
    comparison the sweep sidecar reports.
    """
    ti1_gt_ti2 = 0
    ti1_gt_ti3 = 0
    defined = 0
    for p in points:
        if p.ti1 is None or p.ti2 is None or p.ti3 is None:
            continue
        defined += 1
        if p.ti1 > p.ti2 + tol:
            ti1_gt_ti2 += 1
        if p.ti1 > p.ti3 + tol:
            ti1_gt_ti3 += 1
    return {
        "points_all_defined": defined,
        "ti1_gt_ti2": ti1_gt_ti2,
        "ti1_gt_ti3": ti1_gt_ti3,
    }
