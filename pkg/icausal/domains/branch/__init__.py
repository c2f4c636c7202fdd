"""Branch engine: causal orders, signalling strategies and the superposed mass register."""

from .order import CausalOrder, Event, ladder_orders
from .strategy import (
    SIGNAL, Action, SignalingStrategy, ics_strategy, ics_unitaries, ladder_strategy,
    load_strategy, save_strategy, strategy_from_dict, strategy_to_dict, two_party_strategy,
)
from .mass import MassRegister, fourier_mass_basis, is_regenerated, outcome_labels, standard_mass_basis
from .engine import (
    BranchComposition, MassOutcome, PlanStep, apply_plan, branch_entropy_trace, compose_all,
    compose_branch, controlled_unitary, measure_mass, run_superposed, simulate_messages,
)

__all__ = [
    "CausalOrder", "Event", "ladder_orders",
    "SIGNAL", "Action", "SignalingStrategy", "ics_strategy", "ics_unitaries", "ladder_strategy",
    "load_strategy", "save_strategy", "strategy_from_dict", "strategy_to_dict", "two_party_strategy",
    "MassRegister", "fourier_mass_basis", "is_regenerated", "outcome_labels", "standard_mass_basis",
    "BranchComposition", "MassOutcome", "PlanStep", "apply_plan", "branch_entropy_trace", "compose_all",
    "compose_branch", "controlled_unitary", "measure_mass", "run_superposed", "simulate_messages",
]
