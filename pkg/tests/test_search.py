import pytest

from icausal.core.errors import PreconditionError
from icausal.domains.branch import fourier_mass_basis, standard_mass_basis
from icausal.domains.protocols import correction_table, search_corrections, shift_unitaries, teleport_mics
from icausal.domains.qcore import random_state

ICS_POWERS = {2: [0, 1], 3: [0, 1, 2], 4: [0, 2, 1, 3]}


@pytest.mark.parametrize("m", [2, 3, 4])
def test_recovers_published_tables(m):
    result = search_corrections(m, shift_unitaries(m, ICS_POWERS[m]), standard_mass_basis(m))
    assert result.found
    assert result.failing is None
    assert result.table.matches(correction_table(m, "forward"))
    assert max(result.residuals.values()) <= 1e-10


def test_found_table_teleports():
    m = 3
    unitaries = shift_unitaries(m, [0, 2, 1])
    basis = fourier_mass_basis(m)
    result = search_corrections(m, unitaries, basis)
    assert result.found
    teleported = teleport_mics(random_state((m, 2), 5), m, "forward", result.table, basis, unitaries)
    assert teleported.min_branch_fidelity >= 1 - 1e-10


def test_identical_unitaries_fail():
    result = search_corrections(2, shift_unitaries(2, [0, 0]), standard_mass_basis(2))
    assert not result.found
    assert result.failing == (0, 0)
    assert result.vacuous == [(1, 0), (1, 1)]
    data = result.to_dict()
    assert data["failing"] == ["+", 0]
    assert "table" not in data


def test_bob_dimension_does_not_matter():
    unitaries = shift_unitaries(2, [0, 1])
    result = search_corrections(2, unitaries, standard_mass_basis(2), d=3)
    assert result.table.matches(correction_table(2))


@pytest.mark.parametrize("m, powers", [(7, list(range(7))), (3, [0, 1])])
def test_invalid_search_rejected(m, powers):
    with pytest.raises(PreconditionError):
        search_corrections(m, shift_unitaries(len(powers), powers), fourier_mass_basis(len(powers)))
