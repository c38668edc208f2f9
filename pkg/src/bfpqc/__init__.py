"""bfpqc: an exact workbench for the Boolean Function Pattern Quantum Classifier.

Generates the pattern-basis hierarchy, synthesizes oracles, builds the Q_2n
classifiers, simulates the classification circuits on exact statevectors, and
verifies by brute force that every in-promise function is identified with a
single oracle query.
"""
from .circuit import (
    ClassificationResult,
    CircuitSpec,
    GameTranscript,
    build_circuit,
    classify,
    classify_exhaustive,
    play_game,
    render_circuit,
    run,
)
from .classifier import apply_classifier, apply_q2, classifier_matrix, q2_matrix
from .oracle import (
    Disambiguation,
    Oracle,
    OutOfPromiseError,
    apply_phase_oracle,
    apply_xor_oracle,
    classical_eval,
    disambiguate,
)
from .patterns import (
    BitVector,
    PatternBasis,
    PatternVector,
    TruthTable,
    base_basis,
    basis,
    extend_basis,
    function_of_pattern,
    imbalance_closed_form,
    imbalance_ratio,
    index_of,
    is_equivalent,
    is_orthogonal,
    member_at,
    negate,
    pattern_of_function,
)
from .simulator import (
    Histogram,
    StateVector,
    apply_cz,
    apply_h,
    apply_z,
    argmax_basis,
    hadamard_wall,
    inner_product,
    sample,
    zero_state,
)
from .verify import CheckResult, run_suite

__version__ = "0.1.0"
