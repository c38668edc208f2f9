"""Named brute-force check suites over the hierarchy, with per-rank counts."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .circuit import classify
from .classifier import apply_classifier, classifier_matrix
from .oracle import Oracle, apply_phase_oracle
from .patterns import (
    basis,
    imbalance_closed_form,
    imbalance_ratio,
    imbalance_recurrence,
    is_orthogonal,
    negate,
)
from .simulator import StateVector, hadamard_wall, zero_state

MAX_VERIFY_RANK = 4
TOL = 1e-12


@dataclass(frozen=True)
class CheckResult:
    rank: int
    check: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def _post_oracle_state(pattern) -> StateVector:
    s = zero_state(2 * pattern.rank)
    s = hadamard_wall(s)
    return apply_phase_oracle(Oracle(pattern), s)


def _suite_for_rank(n: int) -> list[CheckResult]:
    b = basis(n)
    members = b.members
    size = len(members)
    out = []

    pairs = list(combinations(range(size), 2))
    hits = sum(is_orthogonal(members[i], members[j]) for i, j in pairs)
    out.append(CheckResult(n, "orthogonality_pairs", hits, len(pairs)))

    expected = imbalance_closed_form(n)
    hits = sum(
        imbalance_ratio(m) == expected and 2 * m.popcount() < m.length for m in members
    )
    out.append(CheckResult(n, "imbalance_ratios", hits, size))

    out.append(
        CheckResult(n, "ratio_recurrence", int(imbalance_recurrence(n) == expected), 1)
    )

    q = classifier_matrix(n)
    dim = 4**n
    unitarity_hits = int(np.max(np.abs(q.T @ q - np.eye(dim))) <= TOL)
    involution_hits = int(np.max(np.abs(q @ q - np.eye(dim))) <= TOL)
    out.append(CheckResult(n, "classifier_unitarity", unitarity_hits + involution_hits, 2))

    hits = 0
    for col in range(dim):
        amps = np.zeros(dim)
        amps[col] = 1.0
        gate_col = apply_classifier(StateVector(2 * n, amps), n).amps
        if np.max(np.abs(gate_col - q[:, col])) <= TOL:
            hits += 1
    out.append(CheckResult(n, "gate_matrix_agreement", hits, dim))

    hits = 0
    for i, m in enumerate(members):
        r = classify(m)
        if r.index == i and abs(r.probability - 1.0) <= TOL:
            hits += 1
    out.append(CheckResult(n, "classify_exhaustive", hits, size))

    hits = 0
    for i, m in enumerate(members):
        r_pos = classify(m, keep_state=True)
        r_neg = classify(negate(m), keep_state=True)
        states_negated = (
            np.max(np.abs(r_pos.final_state.amps + r_neg.final_state.amps)) <= TOL
        )
        if r_pos.index == i and r_neg.index == i and states_negated and r_neg.negation_of_member:
            hits += 1
    out.append(CheckResult(n, "negation_symmetry", hits, size))

    hits = 0
    for i, m in enumerate(members):
        r_phase = classify(m, keep_state=True)
        r_xor = classify(m, faithful=True, keep_state=True)
        if (
            r_xor.index == i
            and np.max(np.abs(r_phase.final_state.amps - r_xor.final_state.amps)) <= TOL
        ):
            hits += 1
    out.append(CheckResult(n, "faithful_equivalence", hits, size))

    states = np.stack([_post_oracle_state(m).amps for m in members])
    gram = states @ states.T
    hits = sum(bool(abs(gram[i, j]) <= TOL) for i, j in pairs)
    out.append(CheckResult(n, "state_orthogonality", hits, len(pairs)))

    return out


def run_suite(rank_max: int, *, max_rank: int = MAX_VERIFY_RANK) -> list[CheckResult]:
    """Every named check for every rank up to rank_max."""
    if not 1 <= rank_max <= max_rank:
        raise ValueError(f"rank_max must be in [1, {max_rank}], got {rank_max}")
    results = []
    for n in range(1, rank_max + 1):
        results.extend(_suite_for_rank(n))
    return results
