"""Entanglement generation from two local states through a 2-ICS."""

from dataclasses import dataclass
from typing import Optional, Tuple

from ...core.errors import DimensionError
from ...utils.logging import log
from ..branch import MassRegister, measure_mass, run_superposed, two_party_strategy
from ..qcore import PureState, Unitary, entanglement_entropy, fidelity, tensor
from .base import Branch, ProtocolResult, Transcript


@dataclass(frozen=True)
class EntangledOutcome:
    """Charlie 的一个测量结果；概率为 0 时 state 为 None"""

    label: str
    state: Optional[PureState]
    probability: float
    entropy: float

    @property
    def is_null(self) -> bool:
        return self.state is None


def _expected(u1: Unitary, u2: Unitary, psi: PureState, phi: PureState, sign: int) -> Optional[PureState]:
    # (U1ψ)(U2φ) ± (U2ψ)(U1φ)，直接按矩阵计算
    first = tensor(PureState(psi.dims, u1.mat @ psi.amps), PureState(phi.dims, u2.mat @ phi.amps))
    second = tensor(PureState(psi.dims, u2.mat @ psi.amps), PureState(phi.dims, u1.mat @ phi.amps))
    vec = first.amps + sign * second.amps
    if abs(vec @ vec.conj()) < 1e-24:
        return None
    return PureState.from_vector(first.dims, vec)


def entangle_2ics(u1: Unitary, u2: Unitary, psi: PureState, phi: PureState) -> Tuple[EntangledOutcome, ...]:
    """
    Alice 持 ψ、Bob 持 φ，经 2-ICS 后由 Charlie 在 ± 基下测量

    Args:
        u1: 无信号时使用的幺正
        u2: 收到信号后使用的幺正
        psi: Alice 的单体态
        phi: Bob 的单体态

    Returns:
        (+ 结果, − 结果)，各含归一化态、概率和 A|B 纠缠熵

    Raises:
        DimensionError: 幺正与态的维度不一致
    """
    if psi.n_subsystems != 1 or phi.n_subsystems != 1:
        raise DimensionError("entangle_2ics takes single-party states")
    if not (u1.dim == u2.dim == psi.dim == phi.dim):
        raise DimensionError(
            f"unitaries of dims {u1.dim}, {u2.dim} do not act on states of dims {psi.dim}, {phi.dim}"
        )
    joint = run_superposed(MassRegister.uniform(2), two_party_strategy(u1, u2), tensor(psi, phi))
    outcomes = []
    for mo in measure_mass(joint, MassRegister.uniform(2).basis):
        entropy = 0.0 if mo.is_null else entanglement_entropy(mo.system, [0])
        outcomes.append(EntangledOutcome(mo.label, mo.system, mo.probability, entropy))
    log(f"entangle: probabilities {[round(o.probability, 12) for o in outcomes]}", level="debug")
    return tuple(outcomes)


def entangle_result(u1: Unitary, u2: Unitary, psi: PureState, phi: PureState) -> ProtocolResult:
    """报告用：每个分支与直接计算的叠加态比较保真度"""
    branches = []
    for sign, outcome in zip((1, -1), entangle_2ics(u1, u2, psi, phi)):
        transcript = Transcript().add("charlie", "measure mass", outcome.label, outcome.probability)
        if outcome.is_null:
            branches.append(Branch((outcome.label,), outcome.probability, None, None, transcript))
            continue
        expected = _expected(u1, u2, psi, phi, sign)
        value = 0.0 if expected is None else fidelity(outcome.state, expected)
        branches.append(Branch(
            (outcome.label,), outcome.probability, outcome.state, value, transcript,
            extra={"entropy": round(outcome.entropy, 15)},
        ))
    return ProtocolResult("entangle-2ics", branches)
