"""Unlocking the Smolin bound-entangled state by Bell discrimination."""

from typing import Dict, List

from ...core.constants import TOLERANCE
from ...utils.logging import log
from ..qcore import (
    I2, I_SIGMA_Y, SIGMA_X, SIGMA_Z, DensityState, Unitary, apply_unitary, bell_state,
    entanglement_entropy, fidelity, min_eigenvalue, mixture, partial_transpose, tensor,
)
from .base import Branch, ProtocolResult
from .bell import bell_branches

# Dan 把 B_i 映射回 B_1 的局域 Pauli
DAN_CORRECTIONS: Dict[int, Unitary] = {1: I2, 2: SIGMA_Z, 3: SIGMA_X, 4: I_SIGMA_Y}

# 子系统顺序 (A, B, D, E)；对每个二分的一侧做部分转置
CUTS: Dict[str, List[int]] = {
    "AB|DE": [2, 3],
    "AD|BE": [1, 3],
    "AE|BD": [1, 2],
}


def smolin_density() -> DensityState:
    """(1/4) Σ |B_i⟩⟨B_i|_AB ⊗ |B_i⟩⟨B_i|_DE"""
    return mixture((2, 2, 2, 2), [(0.25, tensor(bell_state(i), bell_state(i))) for i in range(1, 5)])


def ppt_report(rho: DensityState) -> Dict[str, float]:
    """每个 2|2 二分下部分转置的最小本征值"""
    return {cut: min_eigenvalue(partial_transpose(rho, part)) for cut, part in CUTS.items()}


def unlock_smolin() -> ProtocolResult:
    """
    按四分支系综执行：Alice–Bob 识别 i 并告知 Dan，Dan 作用 Pauli 使 (D, E) 变为 B_1

    Returns:
        分支结果为 (D, E) 的态，fidelity 相对 B_1，extra 含 ebit 数与 PPT 最小本征值
    """
    target = bell_state(1)
    branches: List[Branch] = []
    for i in range(1, 5):
        for bb in bell_branches(i).live_branches:
            j = bb.extra["identified"]
            fix = DAN_CORRECTIONS[j]
            final = apply_unitary(bell_state(i), fix, [0])
            transcript = bb.transcript.copy().add("alice", "send conclusion", f"B{j}")
            transcript.add("dan", f"apply {fix.label} to D")
            branches.append(Branch(
                (f"B{i}",) + bb.outcomes,
                0.25 * bb.probability,
                final,
                fidelity(final, target),
                transcript,
                fix.label,
                {"identified": j, "ebits": round(entanglement_entropy(final, [0]), 15)},
            ))

    ppt = ppt_report(smolin_density())
    ebits = min(b.extra["ebits"] for b in branches)
    log(f"smolin: min PT eigenvalues {ppt}, unlocked {ebits} ebit", level="debug")
    return ProtocolResult("smolin", branches, {
        "ppt_min_eigenvalues": {k: round(v, 15) for k, v in ppt.items()},
        "ppt": {k: bool(v >= -TOLERANCE) for k, v in ppt.items()},
        "ebits": ebits,
        "identified_all": all(b.extra["identified"] == int(b.outcomes[0][1:]) for b in branches),
    })
