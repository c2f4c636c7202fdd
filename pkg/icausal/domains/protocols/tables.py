"""Correction tables for the 2-, 3- and 4-ICS teleportation protocols.

Each correction is a matrix product V·Ω acting on the receiver's register;
Ω (Charlie's phase fix) acts first, V (the sender's permutation fix) second.
"""

from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from ...core.errors import PreconditionError
from ...core.types import Direction
from ..qcore import I2, I_SIGMA_Y, SIGMA_X, SIGMA_Z, Unitary, diagonal
from .base import CorrectionTable

W3 = np.exp(2j * np.pi / 3)


def _perm(rows: Sequence[Sequence[int]], label: str) -> Unitary:
    return Unitary.from_matrix(np.array(rows, dtype=complex), label)


# 3-ICS
V3_1 = _perm([[0, 0, 1], [0, 1, 0], [1, 0, 0]], "V1")
V3_2 = _perm([[1, 0, 0], [0, 0, 1], [0, 1, 0]], "V2")
V3_3 = _perm([[0, 1, 0], [1, 0, 0], [0, 0, 1]], "V3")
OMEGA3_1 = diagonal([W3 ** 2, W3, 1], "Ω1")
OMEGA3_2 = diagonal([W3, W3 ** 2, 1], "Ω2")

# 4-ICS
V4_1 = _perm([[0, 0, 0, 1], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0]], "V1")
V4_2 = _perm([[0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0], [1, 0, 0, 0]], "V2")
V4_3 = _perm([[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]], "V3")
V4_4 = _perm([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], "V4")
W4_1 = _perm([[0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]], "W1")
W4_2 = _perm([[0, 0, 0, 1], [0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0]], "W2")
W4_3 = _perm([[0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [1, 0, 0, 0]], "W3")
W4_4 = _perm([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], "W4")
OMEGA4_1 = diagonal([1, -1, -1, 1], "Ω1")
OMEGA4_2 = diagonal([-1, -1, 1, 1], "Ω2")
OMEGA4_3 = diagonal([-1, 1, -1, 1], "Ω3")


def _fix(v: Unitary, omega: Optional[Unitary] = None) -> Unitary:
    if omega is None:
        return v
    return Unitary(v.dim, v.mat @ omega.mat, f"{v.label}{omega.label}")


def _table(m: int, d_prime: int, senders: Sequence[Unitary], phases: Sequence[Optional[Unitary]]) -> CorrectionTable:
    entries: Dict[Tuple[int, int], Unitary] = {}
    for c, omega in enumerate(phases):
        for i, v in enumerate(senders):
            entries[(c, i)] = _fix(v, omega)
    return CorrectionTable(m, d_prime, entries)


def _two_ics() -> CorrectionTable:
    # 前向与反向相同：(+,0) σx, (+,1) I, (−,0) iσy, (−,1) σz
    return CorrectionTable(2, 2, {(0, 0): SIGMA_X, (0, 1): I2, (1, 0): I_SIGMA_Y, (1, 1): SIGMA_Z})


def correction_table(m: int, direction: Direction = "forward") -> CorrectionTable:
    """
    取 m-ICS 在给定方向上的修正表

    Args:
        m: 2, 3 或 4
        direction: forward（Alice → Bob）或 backward（Bob → Alice）

    Returns:
        m × m 项的修正表

    Raises:
        PreconditionError: 不支持的 m 或方向
    """
    if direction not in ("forward", "backward"):
        raise PreconditionError(f"direction must be forward or backward, got {direction!r}")
    if m == 2:
        return _two_ics()
    if m == 3:
        senders = (V3_1, V3_2, V3_3) if direction == "forward" else (V3_3, V3_1, V3_2)
        return _table(3, 3, senders, (None, OMEGA3_1, OMEGA3_2))
    if m == 4:
        if direction == "forward":
            return _table(4, 4, (V4_1, V4_2, V4_3, V4_4), (None, OMEGA4_1, OMEGA4_2, OMEGA4_3))
        # 反向时 b、d 两个结果的相位修正互换
        return _table(4, 4, (W4_1, W4_2, W4_3, W4_4), (None, OMEGA4_3, OMEGA4_2, OMEGA4_1))
    raise PreconditionError(f"no correction table for m={m}")
