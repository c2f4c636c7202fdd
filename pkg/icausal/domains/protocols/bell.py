"""Local discrimination of the four Bell states with a 2-ICS."""

from typing import Dict, List, Optional, Tuple

from ...core.errors import DimensionError
from ...utils.logging import log
from ..branch import MassRegister, measure_mass, run_superposed, two_party_strategy
from ..qcore import I2, SIGMA_X, Basis, PureState, bell_state, measure_exhaustive
from .base import Branch, ProtocolResult, Transcript

# (Charlie 结果, Alice 与 Bob 的结果是否相同) → Bell 态编号
BELL_TABLE: Dict[Tuple[str, bool], int] = {
    ("+", False): 1,
    ("-", False): 2,
    ("+", True): 3,
    ("-", True): 4,
}


def bell_branches(secret_index: int, state: Optional[PureState] = None) -> ProtocolResult:
    """
    穷举 Charlie、Alice、Bob 的全部测量结果

    Args:
        secret_index: 1..4
        state: 默认取 bell_state(secret_index)

    Returns:
        每个分支的 extra["identified"] 为查表得到的编号，fidelity 为识别正确与否（1.0 或 0.0）
    """
    if secret_index not in (1, 2, 3, 4):
        raise DimensionError(f"Bell index must be 1..4, got {secret_index}")
    state = state if state is not None else bell_state(secret_index)
    mass = MassRegister.uniform(2)
    joint = run_superposed(mass, two_party_strategy(I2, SIGMA_X), state)
    computational = Basis.computational(2)

    branches: List[Branch] = []
    for mo in measure_mass(joint, mass.basis):
        head = Transcript().add("charlie", "measure mass", mo.label, mo.probability)
        if mo.is_null:
            branches.append(Branch((mo.label,), 0.0, None, None, head))
            continue
        head.add("charlie", "broadcast", mo.label)
        for a in measure_exhaustive(mo.system, 0, computational):
            if a.is_null:
                continue
            for b in measure_exhaustive(a.state, 1, computational):
                if b.is_null:
                    continue
                identified = BELL_TABLE[(mo.label, a.index == b.index)]
                transcript = (
                    head.copy()
                    .add("alice", "measure A", str(a.index), a.probability)
                    .add("bob", "measure B", str(b.index), b.probability)
                    .add("alice", "send outcome", str(a.index))
                    .add("bob", "conclude", f"B{identified}")
                )
                branches.append(Branch(
                    (mo.label, str(a.index), str(b.index)),
                    mo.probability * a.probability * b.probability,
                    b.state,
                    1.0 if identified == secret_index else 0.0,
                    transcript,
                    extra={"identified": identified},
                ))
    log(f"bell B{secret_index}: {len(branches)} branches", level="debug")
    return ProtocolResult("bell", branches, {"secret": secret_index})


def discriminate_bell(secret_index: int, rng_seed: int = 0) -> Tuple[int, Transcript]:
    """抽样一条测量路径，返回 (识别出的编号, 通信记录)"""
    branch = bell_branches(secret_index).sample(rng_seed).branches[0]
    return branch.extra["identified"], branch.transcript
