"""Branch composition: replay each causal order, compose its unitary, superpose over the mass register."""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from ...core.errors import BranchCountError, DimensionError
from ...utils.logging import log
from ..qcore import (
    Basis, PureState, Unitary, apply_unitary, embed_unitary, entanglement_entropy, measure_exhaustive,
)
from .mass import MassRegister, outcome_labels
from .order import CausalOrder
from .strategy import SignalingStrategy


@dataclass(frozen=True)
class PlanStep:
    """执行计划中的一步"""

    event: str
    party: str
    unitary: Unitary
    targets: Tuple[int, ...]
    received: FrozenSet[str] = frozenset()
    message: Optional[str] = None

    def describe(self) -> Dict[str, object]:
        return {
            "event": self.event,
            "party": self.party,
            "unitary": self.unitary.label,
            "targets": list(self.targets),
            "received": sorted(self.received),
            "message": self.message,
        }


@dataclass(frozen=True)
class _Message:
    sender: str
    event: str
    content: str


def simulate_messages(strategy: SignalingStrategy, order: CausalOrder) -> List[PlanStep]:
    """
    逐事件重放一个因果序，得到执行计划

    每个事件收到的是其他方在此之前发出、且本方尚未收到过的消息；
    消息只携带内容与来源事件。

    Raises:
        StrategyIncompleteError: 某个消息历史没有对应规则
    """
    outbox: List[_Message] = []
    consumed: Dict[str, int] = {}
    plan = []
    for event in order.sequence:
        start = consumed.get(event.party, 0)
        fresh = frozenset(msg.content for msg in outbox[start:] if msg.sender != event.party)
        consumed[event.party] = len(outbox)
        action = strategy.resolve(event.name, fresh)
        plan.append(PlanStep(
            event.name, event.party, strategy.registry[action.unitary], action.targets, fresh, action.message,
        ))
        if action.message is not None:
            outbox.append(_Message(event.party, event.name, action.message))
    return plan


def compose_branch(plan: Sequence[PlanStep], dims: Sequence[int]) -> Unitary:
    """W = 按因果序嵌入各事件幺正后的乘积，最早的事件在最右"""
    dims = tuple(dims)
    n = int(np.prod(dims))
    w = np.eye(n, dtype=complex)
    for step in plan:
        w = embed_unitary(step.unitary, step.targets, dims).mat @ w
    return Unitary(n, w, "W")


def apply_plan(plan: Sequence[PlanStep], state: PureState) -> PureState:
    """逐步作用计划，与 compose_branch(plan)·state 等价"""
    for step in plan:
        state = apply_unitary(state, step.unitary, step.targets)
    return state


@dataclass
class BranchComposition:
    """每个因果序的执行计划与合成幺正"""

    orders: Tuple[CausalOrder, ...]
    plans: List[List[PlanStep]]
    unitaries: List[Unitary] = field(default_factory=list)


def compose_all(strategy: SignalingStrategy, dims: Sequence[int], dense: bool = True) -> BranchComposition:
    plans = [simulate_messages(strategy, order) for order in strategy.orders]
    unitaries = [compose_branch(plan, dims) for plan in plans] if dense else []
    return BranchComposition(strategy.orders, plans, unitaries)


def run_superposed(mass: MassRegister, strategy: SignalingStrategy, input_state: PureState) -> PureState:
    """
    Σ_k amps_k |M_k⟩ ⊗ W_k|input⟩

    Raises:
        BranchCountError: 质量寄存器分支数与因果序数不一致
    """
    if mass.m != strategy.m:
        raise BranchCountError(f"mass register has {mass.m} branches, strategy has {strategy.m} orders")
    branches = []
    for amp, order in zip(mass.amps, strategy.orders):
        plan = simulate_messages(strategy, order)
        log(f"Order {order.label}: {[step.describe() for step in plan]}", level="debug")
        out = apply_plan(plan, input_state)
        branches.append(amp * out.amps)
    joint = np.stack(branches).ravel()
    return PureState((mass.m,) + input_state.dims, joint)


def controlled_unitary(strategy: SignalingStrategy, dims: Sequence[int]) -> Unitary:
    """稠密参照：Σ_k |k⟩⟨k| ⊗ W_k"""
    composition = compose_all(strategy, dims)
    m = strategy.m
    n = composition.unitaries[0].dim
    big = np.zeros((m * n, m * n), dtype=complex)
    for k, w in enumerate(composition.unitaries):
        big[k * n:(k + 1) * n, k * n:(k + 1) * n] = w.mat
    return Unitary(m * n, big, "ΣW")


@dataclass(frozen=True)
class MassOutcome:
    """Charlie 测量质量构型的一个结果"""

    index: int
    label: str
    probability: float
    system: Optional[PureState]
    mass_state: PureState

    @property
    def is_null(self) -> bool:
        return self.system is None


def measure_mass(joint: PureState, basis: Basis, labels: Optional[Sequence[str]] = None) -> List[MassOutcome]:
    """
    在 basis 下测量子系统 0（质量），去掉质量因子

    Returns:
        每个结果的概率、坍缩后的系统态（去掉质量因子）和测量后的质量态
    """
    if basis.dim != joint.dims[0]:
        raise DimensionError(f"basis dim {basis.dim} does not match mass dim {joint.dims[0]}")
    labels = list(labels) if labels is not None else outcome_labels(basis.dim)
    results = []
    for outcome in measure_exhaustive(joint, 0, basis):
        mass_state = PureState((basis.dim,), basis[outcome.index])
        system = None
        if not outcome.is_null:
            rest = basis[outcome.index].conj() @ outcome.state.amps.reshape(basis.dim, -1)
            system = PureState.from_vector(joint.dims[1:], rest)
        results.append(MassOutcome(outcome.index, labels[outcome.index], outcome.probability, system, mass_state))
    log(f"Mass measurement: {[round(r.probability, 12) for r in results]}", level="debug")
    return results


def branch_entropy_trace(strategy: SignalingStrategy, input_state: PureState,
                         part: Sequence[int]) -> List[List[float]]:
    """每个分支在输入及每一步之后、part 与其余部分之间的纠缠熵"""
    traces = []
    for order in strategy.orders:
        state = input_state
        values = [entanglement_entropy(state, part)]
        for step in simulate_messages(strategy, order):
            state = apply_unitary(state, step.unitary, step.targets)
            values.append(entanglement_entropy(state, part))
        traces.append(values)
    return traces
