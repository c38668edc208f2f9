"""End-to-end pipeline: circuit construction, classification, game, rendering."""
import pytest

from bfpqc.circuit import (
    CircuitSpec,
    ClassifierStep,
    HadamardWall,
    MeasureAll,
    OracleStep,
    build_circuit,
    classify,
    classify_exhaustive,
    play_game,
    render_circuit,
    run,
)
from bfpqc.patterns import PatternVector, member_at, negate

RANK1_RENDERED = """\
# qcpc rank 1, 2 qubits
h q0
h q1
oracle 0100
h q0
h q1
z q0
z q1
cz q0 q1
h q0
h q1
measure
"""


def test_build_circuit_shape():
    c = build_circuit(1, PatternVector.parse("0001"))
    assert c.rank == 1
    assert str(c.pattern) == "0001"
    assert isinstance(c.steps[0], HadamardWall)
    assert isinstance(c.steps[3], MeasureAll)


def test_build_circuit_rejects_length_mismatch():
    with pytest.raises(ValueError):
        build_circuit(1, member_at(2, 0))
    with pytest.raises(ValueError):
        build_circuit(2, PatternVector.parse("0001"))


def test_circuit_spec_enforces_step_order():
    p = PatternVector.parse("0001")
    with pytest.raises(ValueError):
        CircuitSpec(1, (OracleStep(p), HadamardWall(), ClassifierStep(), MeasureAll()))
    with pytest.raises(ValueError):
        CircuitSpec(1, (HadamardWall(), OracleStep(p), ClassifierStep()))
    with pytest.raises(ValueError):
        CircuitSpec(0, (HadamardWall(), OracleStep(p), ClassifierStep(), MeasureAll()))


@pytest.mark.parametrize("index", range(4))
def test_rank_one_members_classify_exactly(index):
    r = classify(member_at(1, index))
    assert r.index == index
    assert r.probability == 1.0
    assert r.queries_used == 1
    assert not r.out_of_promise
    assert not r.negation_of_member
    assert str(r.bits) == format(index, "02b")


def test_rank_two_member_three_lands_on_0011():
    r = classify(member_at(2, 3))
    assert r.index == 3
    assert str(r.bits) == "0011"
    assert r.probability == 1.0


def test_run_keep_state_returns_basis_ket():
    c = build_circuit(1, member_at(1, 2))
    r = run(c, keep_state=True)
    assert r.final_state is not None
    assert r.final_state.amps.tolist() == [0.0, 0.0, 1.0, 0.0]
    assert run(c).final_state is None


def test_negated_member_lands_on_same_index():
    r = classify(negate(member_at(1, 0)))
    assert r.index == 0
    assert r.probability == 1.0
    assert r.negation_of_member
    assert not r.out_of_promise


def test_out_of_promise_pattern_is_flagged():
    r = classify(PatternVector.parse("1010"))
    assert r.out_of_promise
    assert not r.negation_of_member
    assert r.probability < 1.0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_classify_exhaustive_small_ranks(n):
    results = classify_exhaustive(n)
    assert len(results) == 4**n
    assert all(r.queries_used == 1 for r in results)
    assert [r.index for r in results] == list(range(4**n))


@pytest.mark.slow
def test_classify_exhaustive_rank_four():
    results = classify_exhaustive(4)
    assert len(results) == 256
    assert all(r.probability == 1.0 for r in results)


def test_classify_exhaustive_guards():
    with pytest.raises(ValueError):
        classify_exhaustive(0)
    with pytest.raises(ValueError):
        classify_exhaustive(5)


@pytest.mark.parametrize("faithful", [False, True])
def test_faithful_mode_agrees_with_phase_mode(faithful):
    r = classify(member_at(2, 9), faithful=faithful)
    assert r.index == 9
    assert abs(r.probability - 1.0) < 1e-12


@pytest.mark.parametrize("seed", [0, 1, 7])
def test_game_alice_always_wins_in_promise(seed):
    t = play_game(2, seed=seed)
    assert t.winner == "alice"
    assert t.alice_index == t.bob_index
    assert t.queries_used == 1
    assert not t.disambiguation_used
    assert t.alice_claims_negation is None


def test_game_is_deterministic_per_seed():
    assert play_game(1, seed=5) == play_game(1, seed=5)


def test_game_with_negation_uses_one_extra_query():
    t = play_game(2, seed=1, allow_negation=True)
    assert t.winner == "alice"
    assert t.disambiguation_used
    assert t.queries_used == 2
    assert t.alice_claims_negation == t.bob_negated


def test_game_rank_guard():
    with pytest.raises(ValueError):
        play_game(5)


def test_render_rank_one_circuit():
    c = build_circuit(1, PatternVector.parse("0100"))
    assert render_circuit(c) == RANK1_RENDERED


def test_render_rank_two_circuit():
    text = render_circuit(build_circuit(2, member_at(2, 3)))
    lines = text.splitlines()
    assert lines[0] == "# qcpc rank 2, 4 qubits"
    assert "oracle 1000 1000 1000 0111" in lines
    assert "cz q0 q1" in lines
    assert "cz q2 q3" in lines
    assert lines[-1] == "measure"
    assert text.endswith("\n")
