"""Brute-force search for teleportation corrections of an arbitrary ladder strategy."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ...core.constants import NULL_PROBABILITY, TOLERANCE
from ...core.errors import PreconditionError
from ...core.types import OutcomePair
from ...utils.logging import log
from ..branch import MassRegister, ladder_strategy, outcome_labels, run_superposed
from ..qcore import Basis, PureState, Unitary, cyclic_shift
from .base import CorrectionTable

MAX_M = 6
UNITARITY_TOL = TOLERANCE


@dataclass
class SearchResult:
    """找到的修正表，或第一个无解的结果对"""

    m: int
    table: Optional[CorrectionTable]
    failing: Optional[OutcomePair] = None
    vacuous: List[OutcomePair] = field(default_factory=list)
    residuals: Dict[OutcomePair, float] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.table is not None

    def to_dict(self) -> Dict[str, Any]:
        labels = outcome_labels(self.m)
        data: Dict[str, Any] = {
            "m": self.m,
            "found": self.found,
            "failing": None if self.failing is None else [labels[self.failing[0]], self.failing[1]],
            "vacuous": [[labels[c], i] for c, i in self.vacuous],
        }
        if self.table is not None:
            data["table"] = [
                {"charlie": labels[c], "sender": i, "residual": self.residuals.get((c, i), 0.0)}
                for c, i in self.table.pairs()
            ]
        return data


def shift_unitaries(m: int, powers: Sequence[int]) -> List[Unitary]:
    """U_k = X^{powers[k]}"""
    if len(powers) != m:
        raise PreconditionError(f"need {m} shift powers, got {len(powers)}")
    return [Unitary(m, cyclic_shift(m, p).mat, f"U{k + 1}") for k, p in enumerate(powers)]


def conditional_maps(m: int, sender_unitaries: Sequence[Unitary], mass_basis: Basis, d: int) -> np.ndarray:
    """
    T[c, i] 的第 a 列 = 输入 |a⟩_A|0⟩_B|0⟩_B' 在 (Charlie=c, Alice=i, B=0) 下 B' 上的未归一化态

    Returns:
        形状 (m, m, m, m) 的数组，依次为 c, i, B' 分量, a
    """
    strategy = ladder_strategy(sender_unitaries, (0,), (2,))
    mass = MassRegister.uniform(m, mass_basis)
    maps = np.zeros((m, m, m, m), dtype=complex)
    for a in range(m):
        joint = run_superposed(mass, strategy, PureState.basis_state((m, d, m), (a, 0, 0)))
        amps = joint.tensor()[:, :, 0, :]  # (mass, A, B')
        for c in range(m):
            projected = np.tensordot(mass_basis[c].conj(), amps, axes=(0, 0))  # (A, B')
            maps[c, :, :, a] = projected
    return maps


def search_corrections(m: int, sender_unitaries: Sequence[Unitary], mass_basis: Basis,
                       d: int = 2) -> SearchResult:
    """
    对每个 (c, i) 求解 C·T = s·I，并检查 C 是否为幺正

    Args:
        m: 因果序数量，不超过 6
        sender_unitaries: U1..Um，均为 m 维
        mass_basis: Charlie 的测量基
        d: Bob 旁观子系统的维度

    Returns:
        SearchResult；概率小于 1e-12 的结果对记为 vacuous 且视为无解
    """
    if not 2 <= m <= MAX_M:
        raise PreconditionError(f"search supports 2 <= m <= {MAX_M}, got {m}")
    if len(sender_unitaries) != m or any(u.dim != m for u in sender_unitaries):
        raise PreconditionError(f"need {m} unitaries of dim {m}")
    if mass_basis.dim != m:
        raise PreconditionError(f"mass basis dim {mass_basis.dim} != {m}")

    maps = conditional_maps(m, sender_unitaries, mass_basis, d)
    entries: Dict[OutcomePair, Unitary] = {}
    residuals: Dict[OutcomePair, float] = {}
    vacuous: List[OutcomePair] = []
    failing: Optional[OutcomePair] = None
    for c in range(m):
        for i in range(m):
            t = maps[c, i]
            s2 = float(np.real(np.trace(t.conj().T @ t))) / m
            if s2 < NULL_PROBABILITY:
                vacuous.append((c, i))
                failing = failing or (c, i)
                continue
            s = np.sqrt(s2)
            fix_t, *_ = np.linalg.lstsq(t.T, s * np.eye(m), rcond=None)
            fix = fix_t.T
            unitarity = float(np.max(np.abs(fix.conj().T @ fix - np.eye(m))))
            residual = float(np.max(np.abs(fix @ t - s * np.eye(m))))
            if unitarity > UNITARITY_TOL or residual > UNITARITY_TOL:
                failing = failing or (c, i)
                continue
            entries[(c, i)] = Unitary(m, fix, f"C[{c},{i}]")
            residuals[(c, i)] = residual

    if failing is not None:
        log(f"search m={m}: no correction for pair {failing}; vacuous {vacuous}", level="debug")
        return SearchResult(m, None, failing, vacuous, residuals)
    return SearchResult(m, CorrectionTable(m, m, entries), None, vacuous, residuals)
