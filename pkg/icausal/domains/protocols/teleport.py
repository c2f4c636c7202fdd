"""Teleportation and back-teleportation through an m-ICS mass register."""

from typing import List, Optional, Sequence, Tuple

from ...core.errors import DimensionError
from ...core.types import Direction
from ...utils.logging import log
from ..branch import (
    MassRegister, is_regenerated, ics_unitaries, ladder_strategy, measure_mass, run_superposed,
    standard_mass_basis,
)
from ..qcore import (
    Basis, PureState, Unitary, apply_unitary, drop_subsystem, fidelity, ket, measure_exhaustive, permute, tensor,
)
from .base import Branch, CorrectionTable, ProtocolResult, Transcript
from .tables import correction_table


def _layout(input_state: PureState, m: int, direction: Direction) -> Tuple[PureState, int, int]:
    """
    拼出 (系统态, Alice 寄存器索引, Bob 寄存器索引)

    forward:  (A, B..., B')，B' 为追加的 |0⟩
    backward: (A, B', B...)，A 重置为 |0⟩
    """
    if input_state.n_subsystems < 2:
        raise DimensionError("teleportation input must have the sender factor plus at least one more")
    if input_state.dims[0] != m:
        raise DimensionError(f"{m}-ICS teleports a {m}-dimensional factor, got dims {input_state.dims}")
    if direction == "forward":
        return tensor(input_state, ket(m, 0)), 0, input_state.n_subsystems
    if direction == "backward":
        return tensor(ket(m, 0), input_state), 0, 1
    raise DimensionError(f"direction must be forward or backward, got {direction!r}")


def _receiver_state(state: PureState, sender: int, outcome: int, direction: Direction) -> PureState:
    # 去掉发送方寄存器；前向时把 B' 移到最前
    rest = drop_subsystem(state, sender, outcome)
    if direction == "backward":
        return rest
    n = rest.n_subsystems
    return permute(rest, [n - 1] + list(range(n - 1)))


def teleport_mics(input_state: PureState, m: int, direction: Direction = "forward",
                  table: Optional[CorrectionTable] = None, basis: Optional[Basis] = None,
                  unitaries: Optional[Sequence[Unitary]] = None) -> ProtocolResult:
    """
    用 m-ICS 把第一个因子从发送方传到接收方，枚举全部结果分支

    Args:
        input_state: 第一个子系统维度为 m；其余子系统始终留在 Bob 处
        m: 因果序数量
        direction: forward 为 Alice → Bob，backward 为 Bob → Alice
        table: 修正表，默认取标准表
        basis: Charlie 的测量基，默认取标准基
        unitaries: U1..Um，默认取标准集合

    Returns:
        m × m 个分支，每个分支带修正后的态与保真度
    """
    table = table or correction_table(m, direction)
    basis = basis or standard_mass_basis(m)
    system, alice, bob = _layout(input_state, m, direction)
    sender, receiver = (alice, bob) if direction == "forward" else (bob, alice)
    sender_name, receiver_name = ("alice", "bob") if direction == "forward" else ("bob", "alice")
    sender_reg, receiver_reg = ("A", "B'") if direction == "forward" else ("B'", "A")

    strategy = ladder_strategy(unitaries or ics_unitaries(m), (alice,), (bob,))
    mass = MassRegister.uniform(m, basis)
    joint = run_superposed(mass, strategy, system)

    prologue = Transcript()
    if direction == "forward":
        prologue.add("bob", "prepare B' in |0⟩")
    else:
        prologue.add("alice", "reset A to |0⟩")
        prologue.add("charlie", f"reset mass to {mass.labels[0]}")

    computational = Basis.computational(m)
    branches: List[Branch] = []
    for mo in measure_mass(joint, basis, mass.labels):
        head = prologue.copy().add("charlie", "measure mass", mo.label, mo.probability)
        if mo.is_null:
            for i in range(m):
                branches.append(Branch((mo.label, str(i)), 0.0, None, None, head.copy()))
            continue
        head.add("charlie", "broadcast", mo.label)
        for outcome in measure_exhaustive(mo.system, sender, computational):
            labels = (mo.label, str(outcome.index))
            transcript = head.copy().add(sender_name, f"measure {sender_reg}", str(outcome.index),
                                         outcome.probability)
            probability = mo.probability * outcome.probability
            if outcome.is_null:
                branches.append(Branch(labels, probability, None, None, transcript))
                continue
            fix = table[(mo.index, outcome.index)]
            transcript.add(sender_name, "send outcome", str(outcome.index))
            transcript.add(receiver_name, f"apply {fix.label} to {receiver_reg}")
            corrected = apply_unitary(outcome.state, fix, [receiver])
            final = _receiver_state(corrected, sender, outcome.index, direction)
            branches.append(Branch(
                labels, probability, final, fidelity(final, input_state), transcript, fix.label,
                {"mass_regenerated": is_regenerated(mo.mass_state)},
            ))

    result = ProtocolResult(f"teleport-{m}ics-{direction}", branches, {"m": m, "direction": direction})
    log(f"{result.protocol}: {len(branches)} branches, min fidelity {result.min_branch_fidelity:.15f}",
        level="debug")
    return result


def teleport_2ics(input_state: PureState, d_B: Optional[int] = None) -> ProtocolResult:
    """Alice 的量子比特经 2-ICS 传给 Bob 的辅助比特 B'"""
    if d_B is not None and tuple(input_state.dims[1:]) != (d_B,):
        raise DimensionError(f"expected Bob dimension {d_B}, got dims {input_state.dims}")
    return teleport_mics(input_state, 2, "forward")


def backteleport_2ics(input_state: PureState) -> ProtocolResult:
    """(B', B) 上的态经 2-ICS 传回 (A, B)"""
    return teleport_mics(input_state, 2, "backward")


def teleport_3ics(input_state: PureState, direction: Direction = "forward") -> ProtocolResult:
    return teleport_mics(input_state, 3, direction)


def teleport_4ics(input_state: PureState, direction: Direction = "forward") -> ProtocolResult:
    return teleport_mics(input_state, 4, direction)


def roundtrip(input_state: PureState, m: int = 2) -> ProtocolResult:
    """前向再反向，枚举全部 (m·m)² 条路径"""
    forward = teleport_mics(input_state, m, "forward")
    branches = []
    for fb in forward.live_branches:
        backward = teleport_mics(fb.state, m, "backward")
        for bb in backward.branches:
            path_fidelity = None if bb.is_null else fidelity(bb.state, input_state)
            branches.append(Branch(
                fb.outcomes + bb.outcomes,
                fb.probability * bb.probability,
                bb.state,
                path_fidelity,
                fb.transcript.copy().extend(bb.transcript),
                f"{fb.correction}|{bb.correction}",
            ))
    return ProtocolResult(f"roundtrip-{m}ics", branches, {"m": m})
