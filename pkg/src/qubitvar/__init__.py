"""Variance-based uncertainty relations and mixedness metering for a single qubit.

The variance product of two qubit observables equals the Schrodinger
bound plus a remainder proportional to the state's mixedness
1 - tr(rho^2); inverting that equality turns variance measurements into
a mixedness meter.  The package implements the relation algebra in the
Bloch representation, a feedback-controlled qubit model with closed-form
and RK4 dynamics, tightness sweeps comparing the mixedness-weighted
bound against entropic and variance-sum baselines, and a CLI for
reproducible reports, trajectories and grids.
"""

from .core import (
    BlochVector,
    GeneralState,
    OBS_I,
    OBS_X,
    OBS_Y,
    OBS_Z,
    PauliObservable,
    QubitState,
    bloch_to_matrix,
    decompose_observable,
    expectation,
    matrix_to_bloch,
    mixedness,
    mixedness_general,
    random_density_matrix,
    random_qubit_state,
    variance,
)
from .feedback import FeedbackParams, Trajectory, analytic_state, integrate, steady_state
from .relations import (
    MeasurementCounts,
    RelationReport,
    check_equality,
    compute_report,
    estimate_mixedness,
    estimate_mixedness_from_counts,
    simulate_shots,
)
from .tightness import SweepGrid, TightnessPoint, sweep, ti1, ti2, ti3

__all__ = [
    "BlochVector",
    "FeedbackParams",
    "GeneralState",
    "MeasurementCounts",
    "OBS_I",
    "OBS_X",
    "OBS_Y",
    "OBS_Z",
    "PauliObservable",
    "QubitState",
    "RelationReport",
    "SweepGrid",
    "TightnessPoint",
    "Trajectory",
    "analytic_state",
    "bloch_to_matrix",
    "check_equality",
    "compute_report",
    "decompose_observable",
    "estimate_mixedness",
    "estimate_mixedness_from_counts",
    "expectation",
    "integrate",
    "matrix_to_bloch",
    "mixedness",
    "mixedness_general",
    "random_density_matrix",
    "random_qubit_state",
    "simulate_shots",
    "steady_state",
    "sweep",
    "ti1",
    "ti2",
    "ti3",
    "variance",
]

__version__ = "0.1.0"
