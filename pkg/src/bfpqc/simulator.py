"""Minimal exact statevector engine: H, Z, CZ, inner products, seeded sampling.

Amplitudes are real float64 (every gate in scope is real). Basis indexing is
little-endian: qubit 0 is the least significant bit of the basis index.

Hadamard walls are computed as unscaled butterflies followed by a single
rescale. For an even number of butterflies the rescale is a power of two,
which float64 multiplies exactly, so states whose amplitudes are dyadic
rationals stay bit-exact through the whole pipeline.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

MAX_QUBITS = 24
TOLERANCE = 1e-12
INV_SQRT2 = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Immutable view of a quantum state: 2**qubits real amplitudes."""

    qubits: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        if len(self.amps) != 1 << self.qubits:
            raise ValueError(f"expected {1 << self.qubits} amplitudes, got {len(self.amps)}")


@dataclass(frozen=True)
class Histogram:
    """Measurement counts per outcome bit string; sum of counts equals shots."""

    counts: dict[str, int]
    shots: int


def zero_state(qubits: int) -> StateVector:
    """|0...0> on the given number of qubits."""
    if not 1 <= qubits <= MAX_QUBITS:
        raise ValueError(f"qubit count must be in [1, {MAX_QUBITS}], got {qubits}")
    amps = np.zeros(1 << qubits, dtype=np.float64)
    amps[0] = 1.0
    return StateVector(qubits, amps)


def _check_qubit(state: StateVector, qubit: int) -> None:
    if not 0 <= qubit < state.qubits:
        raise ValueError(f"qubit {qubit} out of range for {state.qubits}-qubit state")


def _butterfly(amps: np.ndarray, qubit: int) -> None:
    """In-place unscaled Hadamard butterfly: (a, b) -> (a + b, a - b)."""
    view = amps.reshape(-1, 2, 1 << qubit)
    top = view[:, 0, :].copy()
    bot = view[:, 1, :]
    view[:, 0, :] = top + bot
    view[:, 1, :] = top - bot


def apply_h(state: StateVector, qubit: int) -> StateVector:
    """Hadamard on one wire."""
    _check_qubit(state, qubit)
    amps = state.amps.copy()
    _butterfly(amps, qubit)
    amps *= INV_SQRT2
    return StateVector(state.qubits, amps)


def hadamard_wall(state: StateVector, qubits: Optional[Iterable[int]] = None) -> StateVector:
    """Hadamard on every listed qubit (default: all of them).

    Equal to repeated apply_h up to rounding; for an even number of qubits the
    combined 2**(-k/2) rescale is exact.
    """
    qs = list(range(state.qubits)) if qubits is None else list(qubits)
    if len(set(qs)) != len(qs):
        raise ValueError("duplicate qubit in Hadamard wall")
    amps = state.amps.copy()
    for q in qs:
        _check_qubit(state, q)
        _butterfly(amps, q)
    scale = 2.0 ** -(len(qs) // 2)
    if len(qs) % 2:
        scale *= INV_SQRT2
    amps *= scale
    return StateVector(state.qubits, amps)


def apply_z(state: StateVector, qubit: int) -> StateVector:
    """Z on one wire: negate amplitudes where the qubit's bit is 1."""
    _check_qubit(state, qubit)
    amps = state.amps.copy()
    amps.reshape(-1, 2, 1 << qubit)[:, 1, :] *= -1.0
    return StateVector(state.qubits, amps)


def apply_cz(state: StateVector, q1: int, q2: int) -> StateVector:
    """Controlled-Z: negate amplitudes where both bits are 1. Symmetric."""
    _check_qubit(state, q1)
    _check_qubit(state, q2)
    if q1 == q2:
        raise ValueError("cz needs two distinct qubits")
    idx = np.arange(len(state.amps))
    mask = ((idx >> q1) & (idx >> q2) & 1).astype(bool)
    amps = state.amps.copy()
    amps[mask] *= -1.0
    return StateVector(state.qubits, amps)


def inner_product(a: StateVector, b: StateVector) -> float:
    """Real dot product of two states of equal size."""
    if a.qubits != b.qubits:
        raise ValueError(f"qubit count mismatch: {a.qubits} vs {b.qubits}")
    return float(np.dot(a.amps, b.amps))


def argmax_basis(state: StateVector) -> tuple[int, float]:
    """Most probable basis index and its probability; ties go to the lowest index."""
    probs = state.amps * state.amps
    i = int(np.argmax(probs))
    return i, float(probs[i])


def sample(state: StateVector, shots: int, seed: int = 0) -> Histogram:
    """Seeded multinomial draws from |amplitude|^2, keyed by MSB-first bit strings."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    probs = state.amps * state.amps
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    draws = rng.multinomial(shots, probs)
    width = state.qubits
    counts = {format(i, f"0{width}b"): int(c) for i, c in enumerate(draws) if c}
    return Histogram(counts, shots)
