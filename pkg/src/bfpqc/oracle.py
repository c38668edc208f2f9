"""Oracle synthesis from pattern vectors: phase and XOR schemas, classical queries.

The oracle is a black box by definition, so it is realized semantically from
the hidden truth table rather than compiled to gates. Every application or
classical evaluation bumps the query counter.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .patterns import BitVector, PatternVector, negate
from .simulator import INV_SQRT2, StateVector


class Disambiguation(Enum):
    ORIGINAL = "original"
    NEGATION = "negation"


class OutOfPromiseError(ValueError):
    """Raised when an operation requires an in-promise pattern and gets none."""


@dataclass
class Oracle:
    """Black box for a hidden Boolean function given by its pattern vector."""

    pattern: PatternVector
    _count: int = field(default=0, init=False, repr=False, compare=False)
    _lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, repr=False, compare=False
    )

    @property
    def query_count(self) -> int:
        return self._count

    def _record_query(self) -> None:
        with self._lock:
            self._count += 1


def _signs(pattern: PatternVector) -> np.ndarray:
    """(-1)**f(x) for every input x, as a float64 array."""
    bits = pattern.bits
    return np.array([1.0 - 2.0 * ((bits >> i) & 1) for i in range(pattern.length)])


def apply_phase_oracle(o: Oracle, state: StateVector) -> StateVector:
    """Multiply the amplitude at index x by (-1)**f(x). One query."""
    if state.qubits != 2 * o.pattern.rank:
        raise ValueError(
            f"phase oracle for rank {o.pattern.rank} needs {2 * o.pattern.rank} qubits, "
            f"got {state.qubits}"
        )
    amps = state.amps * _signs(o.pattern)
    o._record_query()
    return StateVector(state.qubits, amps)


def apply_xor_oracle(o: Oracle, state: StateVector) -> StateVector:
    """|y>|x> -> |y XOR f(x)>|x>, with the output register on the highest qubit. One query."""
    n = o.pattern.rank
    if state.qubits != 2 * n + 1:
        raise ValueError(
            f"xor oracle for rank {n} needs {2 * n + 1} qubits, got {state.qubits}"
        )
    half = o.pattern.length
    amps = state.amps.copy().reshape(2, half)
    flip = np.array([(o.pattern.bits >> i) & 1 for i in range(half)], dtype=bool)
    amps[:, flip] = amps[::-1, flip]
    o._record_query()
    return StateVector(state.qubits, amps.reshape(-1))


def classical_eval(o: Oracle, x: BitVector) -> int:
    """Evaluate f on one classical input. One query."""
    if x.length != 2 * o.pattern.rank:
        raise ValueError(
            f"input has {x.length} bits, oracle arity is {2 * o.pattern.rank}"
        )
    o._record_query()
    return o.pattern.bit(x.bits)


def disambiguate(o: Oracle, candidate: PatternVector) -> Disambiguation:
    """Tell the candidate from its negation with one classical query at x = 0...0."""
    if o.pattern != candidate and o.pattern != negate(candidate):
        raise OutOfPromiseError("hidden function is neither the candidate nor its negation")
    probe = BitVector(0, 2 * o.pattern.rank)
    observed = classical_eval(o, probe)
    return Disambiguation.ORIGINAL if observed == candidate.bit(0) else Disambiguation.NEGATION


def extract_input_register(state: StateVector) -> StateVector:
    """Project out a |-> output register sitting on the highest qubit."""
    half = len(state.amps) // 2
    amps = (state.amps[:half] - state.amps[half:]) * INV_SQRT2
    return StateVector(state.qubits - 1, amps)
