"""Shared fixtures, strategies and independent oracle helpers.

Oracle matrices are built here from literal Pauli entries so the tests
do not lean on the package's own constants.
"""

import math

import numpy as np
import pytest
from hypothesis import strategies as st

from qubitvar.core import BlochVector, PauliObservable, QubitState

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
ID = np.eye(2, dtype=complex)


def oracle_state(px, py, pz):
    """Density matrix from literal 2x2 arithmetic."""
    return 0.5 * (ID + px * SX + py * SY + pz * SZ)


def oracle_obs(a1, a2, a3, a4):
    return a1 * SX + a2 * SY + a3 * SZ + a4 * ID


def oracle_expect(rho, obs):
    return np.trace(rho @ obs).real


def oracle_variance(rho, obs):
    return oracle_expect(rho, obs @ obs) - oracle_expect(rho, obs) ** 2


finite = dict(allow_nan=False, allow_infinity=False)


@st.composite
def bloch_vectors(draw, pure=False):
    if pure:
        costheta = draw(st.floats(-1.0, 1.0, **finite))
        phi = draw(st.floats(0.0, 2 * math.pi, **finite))
        sintheta = math.sqrt(max(0.0, 1.0 - costheta**2))
        return BlochVector(sintheta * math.cos(phi), sintheta * math.sin(phi), costheta)
    px = draw(st.floats(-1.0, 1.0, **finite))
    py = draw(st.floats(-1.0, 1.0, **finite))
    pz = draw(st.floats(-1.0, 1.0, **finite))
    if px**2 + py**2 + pz**2 > 1.0:
        norm = math.sqrt(px**2 + py**2 + pz**2)
        scale = draw(st.floats(0.0, 1.0, **finite)) / norm
        px, py, pz = px * scale, py * scale, pz * scale
    return BlochVector(px, py, pz)


@st.composite
def qubit_states(draw, pure=False):
    return QubitState(draw(bloch_vectors(pure=pure)))


@st.composite
def observables(draw, span=5.0):
    coeffs = [draw(st.floats(-span, span, **finite)) for _ in range(4)]
    return PauliObservable(*coeffs)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
