import numpy as np
import pytest
from hypothesis import given, strategies as st

from icausal.core.errors import BranchCountError, StrategyIncompleteError
from icausal.domains.branch import (
    SIGNAL, MassRegister, branch_entropy_trace, compose_all, controlled_unitary, fourier_mass_basis,
    ics_strategy, ics_unitaries, is_regenerated, ladder_orders, load_strategy, measure_mass, run_superposed,
    save_strategy, simulate_messages, standard_mass_basis, two_party_strategy,
)
from icausal.domains.qcore import I2, SIGMA_X, PureState, bell_state, fidelity, random_state, random_unitary

seeds = st.integers(min_value=0, max_value=2 ** 63)


@pytest.mark.parametrize("m, labels", [
    (2, ["X->Y", "Y->X"]),
    (3, ["X1->X2->Y", "X1->Y->X2", "Y->X1->X2"]),
    (4, ["X1->X2->X3->Y", "X1->X2->Y->X3", "X1->Y->X2->X3", "Y->X1->X2->X3"]),
])
def test_ladder_orders(m, labels):
    assert [o.label for o in ladder_orders(m)] == labels


def test_two_party_plans():
    strategy = two_party_strategy(I2, SIGMA_X)
    first, second = (simulate_messages(strategy, o) for o in strategy.orders)
    assert [(s.event, s.unitary.label, s.message) for s in first] == [("X", "I", "0"), ("Y", "σx", SIGNAL)]
    assert [(s.event, s.unitary.label, s.message) for s in second] == [("Y", "I", SIGNAL), ("X", "σx", None)]
    assert second[1].received == frozenset({SIGNAL})


def test_three_ics_middle_order():
    strategy = ics_strategy(3, (0,), (1,))
    plan = simulate_messages(strategy, strategy.orders[1])
    assert [s.event for s in plan] == ["X1", "Y", "X2"]
    assert [s.unitary.label for s in plan] == ["U1", "U2", "U3"]
    # Alice 自己发出的 "0" 不算新消息
    assert plan[2].received == frozenset({SIGNAL})


def test_bob_waits_for_all_alice_messages():
    strategy = ics_strategy(4, (0,), (1,))
    plan = simulate_messages(strategy, strategy.orders[0])
    bob = plan[-1]
    assert bob.received == frozenset({"0", "1", "2"})
    assert bob.unitary.label == "U4"


def test_unresolvable_history_raises():
    strategy = ics_strategy(3, (0,), (1,))
    with pytest.raises(StrategyIncompleteError):
        strategy.resolve("Y", frozenset({"1"}))


def test_mass_and_strategy_branch_counts_must_agree():
    with pytest.raises(BranchCountError):
        run_superposed(MassRegister.uniform(3), two_party_strategy(I2, SIGMA_X), bell_state(1))


@pytest.mark.parametrize("m", [2, 3, 4])
@given(seed=seeds)
def test_superposition_matches_controlled_unitary(m, seed):
    strategy = ics_strategy(m, (0,), (1,))
    state = random_state((m, m), seed)
    mass = MassRegister.uniform(m)
    joint = run_superposed(mass, strategy, state)
    dense = controlled_unitary(strategy, state.dims).mat @ np.kron(mass.amps, state.amps)
    np.testing.assert_allclose(joint.amps, dense, atol=1e-12)


def test_definite_mass_runs_single_order():
    strategy = two_party_strategy(I2, SIGMA_X)
    state = PureState.basis_state((2, 2), (0, 0))
    joint = run_superposed(MassRegister.definite(2, 1), strategy, state)
    expected = np.kron([0, 1], PureState.basis_state((2, 2), (1, 0)).amps)
    np.testing.assert_allclose(joint.amps, expected, atol=1e-15)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_mass_measurement_regenerates_mass(m):
    strategy = ics_strategy(m, (0,), (1,))
    joint = run_superposed(MassRegister.uniform(m), strategy, random_state((m, m), m))
    outcomes = measure_mass(joint, standard_mass_basis(m))
    assert sum(o.probability for o in outcomes) == pytest.approx(1.0)
    assert all(is_regenerated(o.mass_state) for o in outcomes)


def test_fourier_basis_matches_standard_for_three():
    np.testing.assert_allclose(fourier_mass_basis(3).vectors, standard_mass_basis(3).vectors, atol=1e-15)


def test_ics_unitaries_are_shift_powers():
    u = ics_unitaries(4)
    assert [x.label for x in u] == ["U1", "U2", "U3", "U4"]
    np.testing.assert_allclose(u[1].mat @ np.eye(4)[:, 0], np.eye(4)[:, 2])


def test_compose_all_is_unitary():
    composition = compose_all(ics_strategy(3, (0,), (1,)), (3, 3))
    assert len(composition.unitaries) == 3
    assert composition.unitaries[1].dim == 9


def test_local_unitaries_do_not_change_entanglement():
    strategy = two_party_strategy(random_unitary(2, 1), random_unitary(2, 2))
    state = random_state((2, 2), 3)
    for trace in branch_entropy_trace(strategy, state, [0]):
        assert max(trace) - min(trace) < 1e-10


def test_strategy_file_roundtrip(tmp_path):
    strategy = ics_strategy(3, (0,), (1,))
    path = str(tmp_path / "strategy.json")
    save_strategy(strategy, path)
    loaded = load_strategy(path)
    state = random_state((3, 3), 9)
    mass = MassRegister.uniform(3)
    assert fidelity(run_superposed(mass, loaded, state), run_superposed(mass, strategy, state)) == pytest.approx(1.0)


@given(seed=seeds)
def test_mass_measurement_on_two_branches(seed):
    # (|0⟩W₀ψ + |1⟩W₁ψ)/√2 在 ± 基下：p± = (1 ± Re⟨W₀ψ|W₁ψ⟩)/2，系统塌缩到 W₀ψ ± W₁ψ
    psi = random_state((2, 2), seed)
    first = random_unitary(4, seed + 1).mat @ psi.amps
    second = random_unitary(4, seed + 2).mat @ psi.amps
    joint = PureState((2, 2, 2), np.concatenate([first, second]) / np.sqrt(2))
    overlap = np.vdot(first, second).real
    plus, minus = measure_mass(joint, standard_mass_basis(2))
    assert plus.probability == pytest.approx((1 + overlap) / 2, abs=1e-12)
    assert minus.probability == pytest.approx((1 - overlap) / 2, abs=1e-12)
    for outcome, sign in ((plus, 1), (minus, -1)):
        if not outcome.is_null:
            expected = PureState.from_vector((2, 2), first + sign * second)
            assert fidelity(outcome.system, expected) == pytest.approx(1.0, abs=1e-10)
