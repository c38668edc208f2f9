"""The unitary classifier hierarchy Q_2n: dense matrices and gate-path application.

Q_2 = (H (x) H) . CZ . (Z (x) Z) . (H (x) H) = J/2 - I, and Q_2n is its n-fold
tensor power, the leftmost factor acting on the most significant qubit pair.
"""
from __future__ import annotations

import numpy as np

from .simulator import StateVector, apply_cz, apply_z, hadamard_wall

# Dense matrices are for verification only; 4**MAX_DENSE_RANK squared entries.
MAX_DENSE_RANK = 4

# All in-scope classifiers are real orthogonal; entries are dyadic rationals.
DenseUnitary = np.ndarray


def q2_matrix() -> DenseUnitary:
    """4x4 matrix with -1/2 on the diagonal and +1/2 elsewhere."""
    return 0.5 * np.ones((4, 4)) - np.eye(4)


def classifier_matrix(n: int) -> DenseUnitary:
    """Q_2n as a dense 4**n x 4**n matrix."""
    if not 1 <= n <= MAX_DENSE_RANK:
        raise ValueError(f"dense classifier guard: rank must be in [1, {MAX_DENSE_RANK}], got {n}")
    q2 = q2_matrix()
    m = q2
    for _ in range(n - 1):
        m = np.kron(q2, m)
    return m


def apply_q2(state: StateVector, low_qubit: int) -> StateVector:
    """Q_2 on the pair (low_qubit, low_qubit+1) via H,H then Z,Z then CZ then H,H."""
    if not 0 <= low_qubit < state.qubits - 1:
        raise ValueError(f"qubit pair ({low_qubit}, {low_qubit + 1}) out of range")
    pair = (low_qubit, low_qubit + 1)
    s = hadamard_wall(state, pair)
    s = apply_z(s, low_qubit)
    s = apply_z(s, low_qubit + 1)
    s = apply_cz(s, low_qubit, low_qubit + 1)
    return hadamard_wall(s, pair)


def apply_classifier(state: StateVector, n: int) -> StateVector:
    """Q_2 on every qubit pair (2k, 2k+1); the pairs commute."""
    if state.qubits != 2 * n:
        raise ValueError(f"classifier rank {n} needs {2 * n} qubits, got {state.qubits}")
    s = state
    for k in range(n):
        s = apply_q2(s, 2 * k)
    return s
