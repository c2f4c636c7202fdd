import pytest
from hypothesis import given, strategies as st

from icausal.core.errors import DimensionError, PreconditionError
from icausal.domains.protocols import (
    backteleport_2ics, correction_table, roundtrip, teleport_2ics, teleport_3ics, teleport_4ics, teleport_mics,
)
from icausal.domains.qcore import I2, I_SIGMA_Y, SIGMA_X, SIGMA_Z, fidelity, ket, random_state, tensor

seeds = st.integers(min_value=0, max_value=2 ** 63)
TOL = 1e-10


def _corrections(result):
    return {b.outcomes: b.correction for b in result.branches}


def test_two_ics_table():
    table = correction_table(2)
    assert table[(0, 0)].equals_up_to_phase(SIGMA_X)
    assert table[(0, 1)].equals_up_to_phase(I2)
    assert table[(1, 0)].equals_up_to_phase(I_SIGMA_Y)
    assert table[(1, 1)].equals_up_to_phase(SIGMA_Z)
    assert correction_table(2, "backward").matches(table)


def test_unknown_table_rejected():
    with pytest.raises(PreconditionError):
        correction_table(5)
    with pytest.raises(PreconditionError):
        correction_table(3, "sideways")


@given(seed=seeds, d=st.sampled_from([2, 3, 5, 8]))
def test_two_ics_teleports_any_state(seed, d):
    state = random_state((2, d), seed)
    result = teleport_2ics(state, d_B=d)
    assert len(result.branches) == 4
    assert result.min_branch_fidelity >= 1 - TOL
    for branch in result.branches:
        assert branch.probability == pytest.approx(0.25, abs=TOL)
        assert branch.extra["mass_regenerated"]


def test_two_ics_branch_corrections():
    result = teleport_2ics(random_state((2, 2), 1))
    assert _corrections(result) == {
        ("+", "0"): "σx", ("+", "1"): "I", ("-", "0"): "iσy", ("-", "1"): "σz",
    }


def test_product_input_keeps_bob_factor():
    bob = random_state((3,), 4)
    state = tensor(ket(2, 0), bob)
    result = teleport_2ics(state)
    for branch in result.branches:
        assert branch.state.dims == (2, 3)
        assert fidelity(branch.state, state) == pytest.approx(1.0)


def test_bob_dimension_checked():
    with pytest.raises(DimensionError):
        teleport_2ics(random_state((2, 2), 0), d_B=3)
    with pytest.raises(DimensionError):
        teleport_mics(random_state((3, 2), 0), 2)


@given(seed=seeds)
def test_back_teleportation(seed):
    state = random_state((2, 3), seed)
    result = backteleport_2ics(state)
    assert result.min_branch_fidelity >= 1 - TOL
    assert result.probability_sum == pytest.approx(1.0)


def test_backward_transcript_starts_with_resets():
    branch = backteleport_2ics(random_state((2, 2), 2)).branches[0]
    actions = [(e.actor, e.action) for e in branch.transcript.entries[:3]]
    assert actions == [("alice", "reset A to |0⟩"), ("charlie", "reset mass to +"), ("charlie", "measure mass")]


def test_roundtrip_enumerates_every_path():
    state = random_state((2, 2), 8)
    result = roundtrip(state)
    assert len(result.branches) == 16
    assert result.min_branch_fidelity >= 1 - TOL
    for branch in result.branches:
        assert branch.probability == pytest.approx(1 / 16, abs=TOL)
        assert len(branch.outcomes) == 4


@given(seed=seeds, direction=st.sampled_from(["forward", "backward"]))
def test_three_ics(seed, direction):
    result = teleport_3ics(random_state((3, 2), seed), direction)
    assert len(result.branches) == 9
    assert result.min_branch_fidelity >= 1 - TOL
    assert all(b.probability == pytest.approx(1 / 9, abs=TOL) for b in result.branches)


@given(seed=seeds, direction=st.sampled_from(["forward", "backward"]))
def test_four_ics(seed, direction):
    result = teleport_4ics(random_state((4, 2), seed), direction)
    assert len(result.branches) == 16
    assert result.min_branch_fidelity >= 1 - TOL
    assert all(b.probability == pytest.approx(1 / 16, abs=TOL) for b in result.branches)


def test_three_ics_correction_labels():
    forward = _corrections(teleport_3ics(random_state((3, 2), 1)))
    assert forward[("a", "0")] == "V1"
    assert forward[("b", "1")] == "V2Ω1"
    assert forward[("c", "2")] == "V3Ω2"
    backward = _corrections(teleport_3ics(random_state((3, 2), 1), "backward"))
    assert backward[("a", "0")] == "V3"


def test_four_ics_correction_labels():
    forward = _corrections(teleport_4ics(random_state((4, 2), 1)))
    assert forward[("a", "0")] == "V1"
    assert forward[("b", "3")] == "V4Ω1"
    assert forward[("d", "2")] == "V3Ω3"
    backward = _corrections(teleport_4ics(random_state((4, 2), 1), "backward"))
    assert backward[("c", "1")] == "W2Ω2"
    assert backward[("b", "0")] == "W1Ω3"


def test_sampling_picks_one_branch():
    result = teleport_2ics(random_state((2, 2), 3))
    sampled = result.sample(17)
    assert len(sampled.branches) == 1
    assert sampled.branches[0].outcomes == result.sample(17).branches[0].outcomes
