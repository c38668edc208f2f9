"""Oracle schemas: phase/XOR agreement, classical queries, disambiguation."""
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from bfpqc.oracle import (
    Disambiguation,
    Oracle,
    OutOfPromiseError,
    apply_phase_oracle,
    apply_xor_oracle,
    classical_eval,
    disambiguate,
    extract_input_register,
)
from bfpqc.patterns import BitVector, PatternVector, basis, negate
from bfpqc.simulator import apply_h, apply_z, hadamard_wall, zero_state

PSI2 = {
    "0001": [-0.5, 0.5, 0.5, 0.5],
    "0010": [0.5, -0.5, 0.5, 0.5],
    "0100": [0.5, 0.5, -0.5, 0.5],
    "1000": [0.5, 0.5, 0.5, -0.5],
}


@pytest.mark.parametrize("pattern,expected", sorted(PSI2.items()))
def test_phase_oracle_produces_psi2_exactly(pattern, expected):
    o = Oracle(PatternVector.parse(pattern))
    s = apply_phase_oracle(o, hadamard_wall(zero_state(2)))
    assert s.amps.tolist() == expected
    assert o.query_count == 1


def test_phase_oracle_for_constant_zero_is_identity():
    o = Oracle(PatternVector.parse("0000"))
    s = hadamard_wall(zero_state(2))
    assert apply_phase_oracle(o, s).amps.tolist() == s.amps.tolist()


def test_phase_oracle_is_involution():
    o = Oracle(PatternVector.parse("0110 1001 0001 1000"))
    rng = np.random.default_rng(5)
    amps = rng.normal(size=16)
    amps /= np.linalg.norm(amps)
    from bfpqc.simulator import StateVector

    s = StateVector(4, amps)
    back = apply_phase_oracle(o, apply_phase_oracle(o, s))
    assert back.amps.tolist() == amps.tolist()
    assert o.query_count == 2


def test_phase_oracle_qubit_count_check():
    o = Oracle(PatternVector.parse("0001"))
    with pytest.raises(ValueError):
        apply_phase_oracle(o, zero_state(3))


def test_xor_oracle_basis_action():
    # |y=0>|x=00> -> |y=1>|x=00> when f(00) = 1
    o = Oracle(PatternVector.parse("0001"))
    s = zero_state(3)
    mapped = apply_xor_oracle(o, s)
    assert mapped.amps.tolist() == [0, 0, 0, 0, 1, 0, 0, 0]
    # and back again: y=1 -> y=0
    back = apply_xor_oracle(o, mapped)
    assert back.amps.tolist() == zero_state(3).amps.tolist()
    assert o.query_count == 2


def test_xor_oracle_qubit_count_check():
    o = Oracle(PatternVector.parse("0001"))
    with pytest.raises(ValueError):
        apply_xor_oracle(o, zero_state(2))


def _xor_mode_input_state(pattern: PatternVector):
    n = pattern.rank
    s = zero_state(2 * n + 1)
    s = hadamard_wall(s, range(2 * n))
    s = apply_h(s, 2 * n)
    s = apply_z(s, 2 * n)  # output register now |->
    s = apply_xor_oracle(Oracle(pattern), s)
    return extract_input_register(s)


@pytest.mark.parametrize("rank", [1, 2])
def test_xor_oracle_with_minus_register_equals_phase_oracle(rank):
    for member in basis(rank).members:
        via_phase = apply_phase_oracle(
            Oracle(member), hadamard_wall(zero_state(2 * rank))
        )
        via_xor = _xor_mode_input_state(member)
        np.testing.assert_allclose(via_xor.amps, via_phase.amps, atol=1e-12)


def test_classical_eval():
    o = Oracle(PatternVector.parse("0001"))
    assert classical_eval(o, BitVector.parse("00")) == 1
    assert classical_eval(o, BitVector.parse("11")) == 0
    g0 = Oracle(PatternVector.parse("1110"))
    assert classical_eval(g0, BitVector.parse("00")) == 0
    assert o.query_count == 2 and g0.query_count == 1
    with pytest.raises(ValueError):
        classical_eval(o, BitVector.parse("0000"))


def test_disambiguate():
    candidate = PatternVector.parse("0001")
    assert disambiguate(Oracle(candidate), candidate) is Disambiguation.ORIGINAL
    assert disambiguate(Oracle(PatternVector.parse("1110")), candidate) is Disambiguation.NEGATION

    big = PatternVector.parse("1000 1000 1000 0111")
    hidden = Oracle(negate(big))
    assert disambiguate(hidden, big) is Disambiguation.NEGATION
    assert hidden.query_count == 1


def test_disambiguate_rejects_out_of_promise_hidden_function():
    o = Oracle(PatternVector.parse("1010"))
    with pytest.raises(OutOfPromiseError):
        disambiguate(o, PatternVector.parse("0001"))


def test_negated_oracle_gives_negated_state():
    for member in basis(1).members:
        base = apply_phase_oracle(Oracle(member), hadamard_wall(zero_state(2)))
        flipped = apply_phase_oracle(Oracle(negate(member)), hadamard_wall(zero_state(2)))
        assert (base.amps + flipped.amps).tolist() == [0.0, 0.0, 0.0, 0.0]


def test_query_count_is_thread_safe():
    o = Oracle(PatternVector.parse("0001"))
    s = hadamard_wall(zero_state(2))
    with ThreadPoolExecutor(max_workers=8) as pool:
        list(pool.map(lambda _: apply_phase_oracle(o, s), range(200)))
    assert o.query_count == 200
