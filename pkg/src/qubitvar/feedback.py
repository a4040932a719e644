"""Driven-damped qubit with homodyne-mediated feedback.

The model: a two-level atom (levels |0> ground, |1> excited) coupled to a
heavily damped cavity, reduced to an effective decay channel at unit rate,
plus a feedback Hamiltonian F = lam*sx conditioned on the homodyne current.
The master equation is

    drho/dt = -i [Omega*sx + (s+ F + F s-)/2, rho] + D(s- - iF) rho,

with D(O)rho = O rho O^dag - (O^dag O rho + rho O^dag O)/2 and
s- = |0><1|.  For Omega = 0 and a pure initial state
cos(alpha)|0> + sin(alpha)|1> the solution is closed-form; the excited
population rho11 relaxes to lam^2/(1 + 2 lam^2).  A fixed-step RK4
integrator covers the general case and cross-checks the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import BlochVector, PAULI_X, QubitState
from .errors import BlochNormExceeded, NegativeTime, PositivityLost, StepTooLarge

SIGMA_MINUS = np.array([[0, 1], [0, 0]], dtype=complex)
SIGMA_PLUS = SIGMA_MINUS.conj().T

MAX_STEP = 1e-2

# Below this the closed-form coherence switches to its lam -> 0 limit
# (the general expression divides by lam).
LAMBDA_LIMIT = 1e-6


@dataclass(frozen=True)
class FeedbackParams:
    """Model parameters, all rates in units of the effective damping rate.

    alpha is the initial superposition angle, lam the feedback strength
    (the model of interest uses lam in [0, 1]), omega the Rabi frequency
    of an optional drive.  gamma_eff is fixed to 1 by the normalization.
    """

    alpha: float
    lam: float = 0.0
    omega: float = 0.0
    gamma_eff: float = 1.0

    def __post_init__(self):
        if self.lam < 0:
            raise ValueError("lam must be >= 0")
        if self.omega < 0:
            raise ValueError("omega must be >= 0")
        if self.gamma_eff != 1.0:
            raise ValueError("gamma_eff is fixed to 1 (time is measured in 1/gamma)")


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Time-indexed sequence of states from one integration run."""

    times: np.ndarray
    states: list[QubitState]

    def __post_init__(self):
        if len(self.times) != len(self.states):
            raise ValueError("times and states must have equal length")
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("times must be strictly increasing")

    def excited_populations(self) -> np.ndarray:
        """rho11(t) = (1 - pz)/2 along the trajectory."""
        return np.array([0.5 * (1.0 - s.bloch.pz) for s in self.states])

    def coherences(self) -> np.ndarray:
        """rho12(t) = <1|rho|0> = (px + i py)/2 along the trajectory."""
        return np.array(
            [0.5 * (s.bloch.px + 1j * s.bloch.py) for s in self.states]
        )

    def mixedness_values(self) -> np.ndarray:
        return np.array([0.5 * (1.0 - s.bloch.norm_sq()) for s in self.states])

    def matrices(self) -> np.ndarray:
        return np.array([s.matrix for s in self.states])


def initial_state(alpha: float) -> QubitState:
    """Projector onto cos(alpha)|0> + sin(alpha)|1>."""
    return QubitState(BlochVector(math.sin(2 * alpha), 0.0, math.cos(2 * alpha)))


# ---------------------------------------------------------------------------
# generator
# ---------------------------------------------------------------------------

def dissipator(op: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """Lindblad dissipator D(O)rho = O rho O^dag - (O^dag O rho + rho O^dag O)/2."""
    op_dag = op.conj().T
    op_sq = op_dag @ op
    return op @ rho @ op_dag - 0.5 * (op_sq @ rho + rho @ op_sq)


def _operators(params: FeedbackParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Hamiltonian, jump operator and jump^dag jump for the feedback model."""
    fb = params.lam * PAULI_X
    hamiltonian = params.omega * PAULI_X + 0.5 * (SIGMA_PLUS @ fb + fb @ SIGMA_MINUS)
    jump = SIGMA_MINUS - 1j * fb
    return hamiltonian, jump, jump.conj().T @ jump


def master_rhs(rho: np.ndarray, params: FeedbackParams) -> np.ndarray:
    """Right-hand side of the feedback master equation; traceless by construction.

    With lam = 0 this is exactly the undriven-damping generator
    -i[Omega sx, rho] + D(s-) rho.
    """
    hamiltonian, jump, jump_sq = _operators(params)
    return (
        -1j * (hamiltonian @ rho - rho @ hamiltonian)
        + jump @ rho @ jump.conj().T
        - 0.5 * (jump_sq @ rho + rho @ jump_sq)
    )


# ---------------------------------------------------------------------------
# closed-form solution (omega = 0)
# ---------------------------------------------------------------------------

def _require_analytic(params: FeedbackParams) -> None:
    if params.omega != 0.0:
        raise ValueError("the closed-form solution requires omega = 0")


def analytic_excited_population(params: FeedbackParams, t) -> np.ndarray | float:
    """rho11(t) for omega = 0; vectorized over t."""
    decay = 1.0 + 2.0 * params.lam**2
    expfac = np.exp(-np.asarray(t, dtype=float) * decay)
    return (expfac * (1.0 - decay * math.cos(2 * params.alpha)) + 2.0 * params.lam**2) / (
        2.0 * decay
    )


def analytic_coherence(params: FeedbackParams, t) -> np.ndarray | complex:
    """rho12(t) = <1|rho|0> for omega = 0; vectorized over t.

    The general expression divides by lam; for lam <= 1e-6 the removable
    limit exp(-t/2) sin(2 alpha)/2 is used instead.
    """
    t = np.asarray(t, dtype=float)
    envelope = np.exp(-t / 2.0) * math.sin(2 * params.alpha)
    if params.lam <= LAMBDA_LIMIT:
        return envelope / 2.0
    phase = -1j + 1j * np.exp(-2.0 * t * params.lam**2) + params.lam
    return envelope * phase / (2.0 * params.lam)


def analytic_state(params: FeedbackParams, t: float) -> QubitState:
    """Exact state at time t for omega = 0."""
    _require_analytic(params)
    if t < 0:
        raise NegativeTime(f"t = {t}")
    pop = float(analytic_excited_population(params, t))
    coh = complex(analytic_coherence(params, t))
    return QubitState(
        BlochVector(2.0 * coh.real, 2.0 * coh.imag, 1.0 - 2.0 * pop)
    )


def steady_state(params: FeedbackParams) -> QubitState:
    """Diagonal fixed point with excited population lam^2/(1 + 2 lam^2).

    For lam = 0 the dynamics is pure decay and the ground state |0><0|
    is returned (the lam -> 0 limit of the formula).
    """
    _require_analytic(params)
    population = params.lam**2 / (1.0 + 2.0 * params.lam**2)
    return QubitState(BlochVector(0.0, 0.0, 1.0 - 2.0 * population))


# ---------------------------------------------------------------------------
# fixed-step RK4 integration
# ---------------------------------------------------------------------------

def _bloch_of(rho: np.ndarray) -> tuple[float, float, float]:
    return (
        2.0 * rho[1, 0].real,
        2.0 * rho[1, 0].imag,
        (rho[0, 0] - rho[1, 1]).real,
    )


def _check_step(h: float) -> None:
    if not (0.0 < h <= MAX_STEP):
        raise StepTooLarge(f"step must satisfy 0 < h <= {MAX_STEP:g}, got {h}")


def _rk4_advance(rho: np.ndarray, rhs, h: float) -> np.ndarray:
    k1 = rhs(rho)
    k2 = rhs(rho + 0.5 * h * k1)
    k3 = rhs(rho + 0.5 * h * k2)
    k4 = rhs(rho + h * k3)
    rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    # hygiene: re-hermitize and renormalize the trace after every step
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def _state_of(rho: np.ndarray, t: float) -> QubitState:
    px, py, pz = _bloch_of(rho)
    norm = math.sqrt(px * px + py * py + pz * pz)
    try:
        return QubitState(BlochVector(px, py, pz))
    except BlochNormExceeded as exc:
        # any exit from the Bloch ball beyond representation tolerance is
        # an integration failure; resolved dissipative dynamics never get here
        raise PositivityLost(
            f"min eigenvalue {(1.0 - norm) / 2.0:.3e} at t = {t:g}"
        ) from exc


def _make_rhs(params: FeedbackParams):
    hamiltonian, jump, jump_sq = _operators(params)
    jump_dag = jump.conj().T

    def rhs(rho):
        return (
            -1j * (hamiltonian @ rho - rho @ hamiltonian)
            + jump @ rho @ jump_dag
            - 0.5 * (jump_sq @ rho + rho @ jump_sq)
        )

    return rhs


def step_times(t_end: float, h: float) -> np.ndarray:
    """Uniform step grid 0, h, 2h, ... ending exactly at t_end.

    When t_end is not a multiple of h a shorter final interval is added;
    when it is (up to float noise) the last label is snapped to t_end.
    """
    _check_step(h)
    if t_end <= 0:
        raise NegativeTime(f"t_end must be > 0, got {t_end}")
    n_full = int(math.floor(t_end / h + 1e-9))
    times = [i * h for i in range(n_full + 1)]
    if t_end - n_full * h > 1e-9:
        times.append(t_end)
    else:
        times[-1] = t_end
    return np.array(times)


def integrate(params: FeedbackParams, t_end: float, h: float = 1e-3) -> Trajectory:
    """RK4 trajectory from the pure initial state of angle alpha.

    Stores the state after every step (plus a shorter final step when
    t_end is not a multiple of h).  Raises PositivityLost as soon as a
    step pushes the state out of the Bloch ball beyond representation
    tolerance (an eigenvalue below -1e-6 always does), which signals an
    unresolved step.
    """
    times = step_times(t_end, h)
    rhs = _make_rhs(params)
    rho = initial_state(params.alpha).matrix.copy()
    states = [_state_of(rho, 0.0)]
    for i in range(1, len(times)):
        step = h if i < len(times) - 1 else float(times[i] - times[i - 1])
        rho = _rk4_advance(rho, rhs, step)
        states.append(_state_of(rho, float(times[i])))
    return Trajectory(times=times, states=states)


def evolve_to_times(params: FeedbackParams, sample_times, h: float = 1e-3) -> Trajectory:
    """Integrate from t = 0 landing exactly on each requested time.

    Between consecutive sample times the integrator takes full steps of h
    plus one shorter remainder step, so arbitrary grids are hit without
    interpolation.  sample_times must be strictly increasing and >= 0.
    """
    _check_step(h)
    sample_times = np.asarray(sample_times, dtype=float)
    if sample_times.size == 0:
        raise ValueError("sample_times must be non-empty")
    if sample_times[0] < 0:
        raise NegativeTime(f"t = {sample_times[0]}")
    if np.any(np.diff(sample_times) <= 0):
        raise ValueError("sample_times must be strictly increasing")
    rhs = _make_rhs(params)
    rho = initial_state(params.alpha).matrix.copy()
    t = 0.0
    states = []
    for target in sample_times:
        remaining = target - t
        while remaining > 1e-12:
            step = h if remaining >= h else remaining
            rho = _rk4_advance(rho, rhs, step)
            t += step
            remaining = target - t
        t = target
        states.append(_state_of(rho, target))
    return Trajectory(times=sample_times.copy(), states=states)
