"""Uncertainty relations for a single qubit and the mixedness estimator.

Covers the variance product bounds (Robertson, Schrodinger, and the
mixedness-weighted bound), the variance-product equality whose remainder
is (1/8) M [xi(A,A) xi(B,B) - xi(A,B)^2], the entropic and sum relations
used as comparison baselines, and a finite-shot pathway that feeds
empirical moments into the mixedness formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    PauliObservable,
    QubitState,
    anticommutator_term,
    commutator_term,
    decompose_observable,
    mixedness,
    variance,
    xi,
)
from .errors import CollinearObservables, DegenerateSpectrum

# An observable's two outcomes are distinguishable only if the eigenvalue
# gap 2|a| clears this; below it the spectrum counts as degenerate.
SPECTRUM_GAP_TOL = 1e-9

# Threshold on xi(A,A) xi(B,B) - xi(A,B)^2 separating genuine collinearity
# of the Pauli parts from rounding.
COLLINEAR_TOL = 1e-9


@dataclass(frozen=True)
class RelationReport:
    """All bounds, the remainder and the residual for one (state, A, B) triple."""

    varA: float
    varB: float
    product: float
    rur_bound: float
    sur_bound: float
    eq19_bound: float
    remainder: float
    equality_residual: float
    sum_lhs: float
    sum_bound: float
    entropy_sum: float
    entropy_bound: float


@dataclass(frozen=True)
class MeasurementCounts:
    """Two-outcome counts from projective measurements of one observable."""

    observable: PauliObservable
    eigenvalues: tuple[float, float]
    counts: tuple[int, int]
    shots: int

    def __post_init__(self):
        if self.shots < 1:
            raise ValueError("shots must be >= 1")
        if self.counts[0] + self.counts[1] != self.shots:
            raise ValueError("counts must sum to shots")

    def frequency(self) -> float:
        """Empirical frequency of the first (larger-eigenvalue) outcome."""
        return self.counts[0] / self.shots

    def mean(self) -> float:
        hi, lo = self.eigenvalues
        f = self.frequency()
        return hi * f + lo * (1.0 - f)

    def second_moment(self) -> float:
        # Exact given the frequencies: a two-outcome observable's square is
        # determined by its spectrum.
        hi, lo = self.eigenvalues
        f = self.frequency()
        return hi**2 * f + lo**2 * (1.0 - f)

    def variance(self) -> float:
        return self.second_moment() - self.mean() ** 2


# ---------------------------------------------------------------------------
# variance-product bounds and the equality
# ---------------------------------------------------------------------------

def rur_bound(state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable) -> float:
    """Robertson bound |<[A,B]>/(2i)|^2."""
    return commutator_term(state, obs_a, obs_b)


def sur_bound(state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable) -> float:
    """Schrodinger bound: commutator term plus squared symmetrized covariance."""
    return commutator_term(state, obs_a, obs_b) + anticommutator_term(state, obs_a, obs_b)


def gram_determinant(obs_a: PauliObservable, obs_b: PauliObservable) -> float:
    """xi(A,A) xi(B,B) - xi(A,B)^2 = 16 |a x b|^2, zero iff Pauli parts collinear."""
    return xi(obs_a, obs_a) * xi(obs_b, obs_b) - xi(obs_a, obs_b) ** 2


def equality_remainder(state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable) -> float:
    """Mixedness-weighted remainder (1/8) M [xi(A,A) xi(B,B) - xi(A,B)^2]."""
    return mixedness(state) * gram_determinant(obs_a, obs_b) / 8.0


def check_equality(state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable) -> float:
    """Residual of the variance-product equality.

    Returns varA*varB - sur_bound - remainder, which is zero (to rounding)
    for every valid qubit state and observable pair.
    """
    product = variance(state, obs_a) * variance(state, obs_b)
    return product - sur_bound(state, obs_a, obs_b) - equality_remainder(state, obs_a, obs_b)


def mixedness_weighted_bound(
    state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable
) -> float:
    """Mixedness-weighted lower bound: commutator term plus the remainder."""
    return rur_bound(state, obs_a, obs_b) + equality_remainder(state, obs_a, obs_b)


def sum_relation(
    state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable
) -> tuple[float, float]:
    """Variance-sum relation: (varA + varB, var(A+B)/2)."""
    lhs = variance(state, obs_a) + variance(state, obs_b)
    bound = 0.5 * variance(state, obs_a + obs_b)
    return lhs, bound


# ---------------------------------------------------------------------------
# entropic relation
# ---------------------------------------------------------------------------

def _bloch_axis(obs: PauliObservable) -> tuple[np.ndarray, float]:
    """Unit Bloch axis and |a| of the Pauli part; rejects degenerate spectra."""
    vec = obs.vec()
    norm = float(np.linalg.norm(vec))
    if 2.0 * norm <= SPECTRUM_GAP_TOL:
        raise DegenerateSpectrum(f"eigenvalue gap 2|a| = {2 * norm:.3e}")
    return vec / norm, norm


def outcome_probabilities(state: QubitState, obs: PauliObservable) -> tuple[float, float]:
    """Probabilities of the (a4 + |a|, a4 - |a|) outcomes when obs is measured."""
    axis, _ = _bloch_axis(obs)
    overlap = float(axis @ state.bloch.as_array())
    p_hi = min(max(0.5 * (1.0 + overlap), 0.0), 1.0)
    return p_hi, 1.0 - p_hi


def entropy_of_measurement(state: QubitState, obs: PauliObservable) -> float:
    """Shannon entropy (bits) of the two-outcome distribution, with 0 log 0 = 0."""
    total = 0.0
    for p in outcome_probabilities(state, obs):
        if p > 0.0:
            total -= p * math.log2(p)
    return total


def complementarity_c(obs_a: PauliObservable, obs_b: PauliObservable) -> float:
    """Largest squared eigenvector overlap, (1 + |a_hat . b_hat|)/2 for a qubit."""
    axis_a, _ = _bloch_axis(obs_a)
    axis_b, _ = _bloch_axis(obs_b)
    return 0.5 * (1.0 + abs(float(axis_a @ axis_b)))


def eur_check(
    state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable
) -> tuple[float, float]:
    """Entropic relation: (H(A) + H(B), log2(1/c)).

    When the observables share an eigenbasis c = 1 and the bound is zero;
    downstream ratios must treat that point as undefined rather than divide.
    """
    entropy_sum = entropy_of_measurement(state, obs_a) + entropy_of_measurement(state, obs_b)
    c = complementarity_c(obs_a, obs_b)
    return entropy_sum, math.log2(1.0 / c)


# ---------------------------------------------------------------------------
# mixedness estimator
# ---------------------------------------------------------------------------

def estimate_mixedness(state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable) -> float:
    """Mixedness from exact moments of two non-collinear observables.

    8 [varA varB - commutator term - covariance term] divided by the xi
    Gram determinant; equal to mixedness(state) for every valid input.
    """
    det = gram_determinant(obs_a, obs_b)
    if det <= COLLINEAR_TOL:
        raise CollinearObservables(f"gram determinant = {det:.3e}")
    numerator = (
        variance(state, obs_a) * variance(state, obs_b)
        - commutator_term(state, obs_a, obs_b)
        - anticommutator_term(state, obs_a, obs_b)
    )
    return 8.0 * numerator / det


def symmetrized_product(obs_a: PauliObservable, obs_b: PauliObservable) -> PauliObservable:
    """Observable (AB + BA)/2, Hermitian by construction."""
    a, b = obs_a.matrix, obs_b.matrix
    return decompose_observable(0.5 * (a @ b + b @ a))


def simulate_shots(state: QubitState, obs: PauliObservable, shots: int, seed) -> MeasurementCounts:
    """Draw i.i.d. projective outcomes; deterministic for a fixed seed."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    axis, norm = _bloch_axis(obs)
    p_hi, _ = outcome_probabilities(state, obs)
    rng = np.random.default_rng(seed)
    n_hi = int(rng.binomial(shots, p_hi))
    return MeasurementCounts(
        observable=obs,
        eigenvalues=(obs.a4 + norm, obs.a4 - norm),
        counts=(n_hi, shots - n_hi),
        shots=shots,
    )


def estimate_mixedness_from_counts(
    counts_a: MeasurementCounts,
    counts_b: MeasurementCounts,
    counts_c: MeasurementCounts | None,
    obs_a: PauliObservable,
    obs_b: PauliObservable,
) -> tuple[float, float]:
    """Mixedness estimate and delta-method standard error from counts.

    counts_a and counts_b come from measuring A and B; counts_c from
    C = (AB + BA)/2, whose mean gives the anticommutator moment.  When C
    is proportional to the identity (e.g. A = sx, B = sz) its moment is
    the exact scalar c4 and no shots are needed: pass counts_c = None.

    The commutator moment |<[A,B]>/(2i)|^2 lives on the Bloch axis
    a x b, which none of the three measurements touches, so this pathway
    cannot estimate it; it enters at its minimum-norm value, zero.  The
    estimate is therefore exact (up to shot noise) for states with no
    Bloch component along a x b and an upper bound on the mixedness
    otherwise.  Standard errors come from first-order propagation of the
    binomial outcome-frequency variances.
    """
    det = gram_determinant(obs_a, obs_b)
    if det <= COLLINEAR_TOL:
        raise CollinearObservables(f"gram determinant = {det:.3e}")

    obs_c = symmetrized_product(obs_a, obs_b)
    c_norm = float(np.linalg.norm(obs_c.vec()))
    if counts_c is None:
        if 2.0 * c_norm > SPECTRUM_GAP_TOL:
            raise ValueError(
                "counts_c may be omitted only when (AB+BA)/2 is proportional to I"
            )
        mean_c = obs_c.a4
    else:
        mean_c = counts_c.mean()

    mean_a, var_a = counts_a.mean(), counts_a.variance()
    mean_b, var_b = counts_b.mean(), counts_b.variance()
    covariance = mean_c - mean_a * mean_b
    estimate = 8.0 * (var_a * var_b - covariance**2) / det

    def _freq_sensitivity(counts: MeasurementCounts) -> tuple[float, float, float]:
        # d mean / d f, d var / d f, and Var(f) for the plug-in frequency.
        hi, lo = counts.eigenvalues
        gap = hi - lo
        f = counts.frequency()
        dmean = gap
        dvar = (hi**2 - lo**2) - 2.0 * counts.mean() * gap
        var_f = f * (1.0 - f) / counts.shots
        return dmean, dvar, var_f

    dmean_a, dvar_a, varf_a = _freq_sensitivity(counts_a)
    dmean_b, dvar_b, varf_b = _freq_sensitivity(counts_b)
    d_est_a = 8.0 * (dvar_a * var_b + 2.0 * covariance * dmean_a * mean_b) / det
    d_est_b = 8.0 * (dvar_b * var_a + 2.0 * covariance * dmean_b * mean_a) / det
    se_sq = d_est_a**2 * varf_a + d_est_b**2 * varf_b
    if counts_c is not None:
        dmean_c, _, varf_c = _freq_sensitivity(counts_c)
        d_est_c = -16.0 * covariance * dmean_c / det
        se_sq += d_est_c**2 * varf_c
    return estimate, math.sqrt(se_sq)


# ---------------------------------------------------------------------------
# report assembly
# ---------------------------------------------------------------------------

def compute_report(
    state: QubitState, obs_a: PauliObservable, obs_b: PauliObservable
) -> RelationReport:
    """Evaluate every relation for one (state, A, B) triple.

    Requires nondegenerate spectra for the entropic fields; the mixedness
    estimate is not part of the report because it can fail (collinear
    observables) while every bound here is always defined.
    """
    var_a = variance(state, obs_a)
    var_b = variance(state, obs_b)
    product = var_a * var_b
    rur = rur_bound(state, obs_a, obs_b)
    sur = sur_bound(state, obs_a, obs_b)
    remainder = equality_remainder(state, obs_a, obs_b)
    sum_lhs, sum_bnd = sum_relation(state, obs_a, obs_b)
    entropy_sum, entropy_bnd = eur_check(state, obs_a, obs_b)
    return RelationReport(
        varA=var_a,
        varB=var_b,
        product=product,
        rur_bound=rur,
        sur_bound=sur,
        eq19_bound=rur + remainder,
        remainder=remainder,
        equality_residual=product - sur - remainder,
        sum_lhs=sum_lhs,
        sum_bound=sum_bnd,
        entropy_sum=entropy_sum,
        entropy_bound=entropy_bnd,
    )
