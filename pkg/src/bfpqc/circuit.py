"""The end-to-end classification pipeline and the Alice/Bob game harness.

Pipeline: |0...0> -> Hadamard wall -> oracle -> Q_2 on every pair -> measure.
A hidden function equal to basis member i (or its negation) lands on basis
ket |i> with probability 1, so a single oracle query identifies it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .classifier import apply_classifier
from .oracle import (
    Disambiguation,
    Oracle,
    apply_phase_oracle,
    apply_xor_oracle,
    disambiguate,
    extract_input_register,
)
from .patterns import BitVector, PatternVector, member_at, negate
from .simulator import (
    StateVector,
    apply_h,
    apply_z,
    argmax_basis,
    hadamard_wall,
    zero_state,
)

# classify_exhaustive and play_game stay within this rank by default.
MAX_EXHAUSTIVE_RANK = 4

PROBABILITY_TOLERANCE = 1e-12


class VerificationError(RuntimeError):
    """An exhaustive sweep found a case violating the classification contract."""


@dataclass(frozen=True)
class HadamardWall:
    pass


@dataclass(frozen=True)
class OracleStep:
    pattern: PatternVector


@dataclass(frozen=True)
class ClassifierStep:
    pass


@dataclass(frozen=True)
class MeasureAll:
    pass


Step = Union[HadamardWall, OracleStep, ClassifierStep, MeasureAll]

_STEP_ORDER = (HadamardWall, OracleStep, ClassifierStep, MeasureAll)


@dataclass(frozen=True)
class CircuitSpec:
    """The canonical four-step circuit: wall, oracle, classifier, measure."""

    rank: int
    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if len(self.steps) != 4 or any(
            not isinstance(s, cls) for s, cls in zip(self.steps, _STEP_ORDER)
        ):
            raise ValueError("steps must be (HadamardWall, OracleStep, ClassifierStep, MeasureAll)")
        pattern = self.steps[1].pattern
        if pattern.length != 4**self.rank:
            raise ValueError(
                f"pattern length {pattern.length} does not match rank {self.rank}"
            )

    @property
    def pattern(self) -> PatternVector:
        return self.steps[1].pattern


@dataclass(frozen=True, eq=False)
class ClassificationResult:
    rank: int
    index: int
    bits: BitVector
    probability: float
    queries_used: int
    out_of_promise: bool
    negation_of_member: bool
    final_state: Optional[StateVector] = None


@dataclass(frozen=True)
class GameTranscript:
    rank: int
    seed: int
    bob_index: int
    bob_negated: bool
    alice_index: int
    alice_claims_negation: Optional[bool]
    disambiguation_used: bool
    queries_used: int
    winner: str


def build_circuit(n: int, hidden: PatternVector) -> CircuitSpec:
    """The canonical circuit for a rank-n hidden function."""
    return CircuitSpec(n, (HadamardWall(), OracleStep(hidden), ClassifierStep(), MeasureAll()))


def _run_with_oracle(
    oracle: Oracle, n: int, *, faithful: bool = False, keep_state: bool = False
) -> ClassificationResult:
    if faithful:
        # materialize the output register as |-> on the highest qubit
        s = zero_state(2 * n + 1)
        s = hadamard_wall(s, range(2 * n))
        s = apply_h(s, 2 * n)
        s = apply_z(s, 2 * n)
        s = apply_xor_oracle(oracle, s)
        s = extract_input_register(s)
    else:
        s = zero_state(2 * n)
        s = hadamard_wall(s)
        s = apply_phase_oracle(oracle, s)
    s = apply_classifier(s, n)
    index, probability = argmax_basis(s)

    candidate = member_at(n, index)
    negation = oracle.pattern == negate(candidate)
    out_of_promise = not (negation or oracle.pattern == candidate)
    return ClassificationResult(
        rank=n,
        index=index,
        bits=BitVector(index, 2 * n),
        probability=probability,
        queries_used=oracle.query_count,
        out_of_promise=out_of_promise,
        negation_of_member=negation,
        final_state=s if keep_state else None,
    )


def run(c: CircuitSpec, *, faithful: bool = False, keep_state: bool = False) -> ClassificationResult:
    """Simulate the circuit and read off the measured index."""
    return _run_with_oracle(Oracle(c.pattern), c.rank, faithful=faithful, keep_state=keep_state)


def classify(
    hidden: PatternVector, *, faithful: bool = False, keep_state: bool = False
) -> ClassificationResult:
    """One-query classification of a pattern whose rank is inferred from its length."""
    n = hidden.rank
    return run(build_circuit(n, hidden), faithful=faithful, keep_state=keep_state)


def classify_exhaustive(
    n: int, *, max_rank: int = MAX_EXHAUSTIVE_RANK
) -> list[ClassificationResult]:
    """Classify every member of the rank-n basis, asserting index i and probability 1."""
    if not 1 <= n <= max_rank:
        raise ValueError(f"rank must be in [1, {max_rank}], got {n}")
    results = []
    for i in range(4**n):
        r = classify(member_at(n, i))
        if r.index != i or abs(r.probability - 1.0) > PROBABILITY_TOLERANCE:
            raise VerificationError(
                f"member {i} of rank {n} classified to {r.index} with p={r.probability}"
            )
        results.append(r)
    return results


def play_game(
    n: int, seed: int = 0, allow_negation: bool = False, *, max_rank: int = MAX_EXHAUSTIVE_RANK
) -> GameTranscript:
    """Bob hides a seeded basis member (optionally negated); Alice classifies it.

    Alice wins iff she names Bob's index, and, when negation is allowed, also
    tells the member from its negation via one extra classical query.
    """
    if not 1 <= n <= max_rank:
        raise ValueError(f"rank must be in [1, {max_rank}], got {n}")
    rng = np.random.default_rng(seed)
    bob_index = int(rng.integers(0, 4**n))
    bob_negated = bool(rng.integers(0, 2)) if allow_negation else False

    hidden = member_at(n, bob_index)
    if bob_negated:
        hidden = negate(hidden)
    oracle = Oracle(hidden)

    result = _run_with_oracle(oracle, n)
    alice_index = result.index
    claims: Optional[bool] = None
    if allow_negation:
        verdict = disambiguate(oracle, member_at(n, alice_index))
        claims = verdict is Disambiguation.NEGATION

    alice_wins = alice_index == bob_index and (not allow_negation or claims == bob_negated)
    return GameTranscript(
        rank=n,
        seed=seed,
        bob_index=bob_index,
        bob_negated=bob_negated,
        alice_index=alice_index,
        alice_claims_negation=claims,
        disambiguation_used=allow_negation,
        queries_used=oracle.query_count,
        winner="alice" if alice_wins else "bob",
    )


def render_circuit(c: CircuitSpec) -> str:
    """Circuit text: one gate per line, '#' comments, oracle as an opaque marker."""
    n = c.rank
    qubits = 2 * n
    lines = [f"# qcpc rank {n}, {qubits} qubits"]
    lines += [f"h q{q}" for q in range(qubits)]
    lines.append(f"oracle {c.pattern}")
    for k in range(n):
        a, b = 2 * k, 2 * k + 1
        lines += [f"h q{a}", f"h q{b}", f"z q{a}", f"z q{b}", f"cz q{a} q{b}", f"h q{a}", f"h q{b}"]
    lines.append("measure")
    return "\n".join(lines) + "\n"
