"""Mass register over causal-order basis states and Charlie's measurement bases."""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from ...core.constants import TOLERANCE
from ...core.errors import DimensionError, NormalizationError, PreconditionError
from ..qcore import Basis, PureState


def outcome_labels(m: int) -> List[str]:
    """m=2 时为 +/-，否则为 a, b, c, ..."""
    if m == 2:
        return ["+", "-"]
    return [chr(ord("a") + i) for i in range(m)]


def standard_mass_basis(m: int) -> Basis:
    """
    Charlie 的标准测量基

    m=2 为 ± 基；m=3 为 ω = e^{2πi/3} 的 Fourier 基；
    m=4 为 ±1 符号模式基（不是 4 阶 Fourier 基）。
    """
    if m == 2:
        rows = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    elif m == 3:
        w = np.exp(2j * np.pi / 3)
        rows = np.array([[1, 1, 1], [1, w, w ** 2], [1, w ** 2, w]]) / np.sqrt(3)
    elif m == 4:
        rows = np.array([
            [1, 1, 1, 1],
            [1, -1, -1, 1],
            [1, -1, 1, -1],
            [1, 1, -1, -1],
        ]) / 2
    else:
        raise PreconditionError(f"no standard mass basis for m={m}")
    return Basis(m, rows)


def fourier_mass_basis(m: int) -> Basis:
    """任意 m 的 Fourier 基，行 j 为 (ω^{jk})_k / √m"""
    if m < 2:
        raise PreconditionError(f"m must be >= 2, got {m}")
    j, k = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
    return Basis(m, np.exp(2j * np.pi * j * k / m) / np.sqrt(m))


@dataclass(frozen=True, eq=False)
class MassRegister:
    """质量构型：m 个因果序基态上的振幅 + Charlie 的测量基"""

    m: int
    amps: np.ndarray
    basis: Basis
    labels: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=complex).ravel()
        if amps.size != self.m or self.basis.dim != self.m:
            raise DimensionError(f"mass register of m={self.m} got {amps.size} amps, basis dim {self.basis.dim}")
        if abs(float(np.vdot(amps, amps).real) - 1.0) > TOLERANCE:
            raise NormalizationError("mass register amplitudes are not normalized")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(outcome_labels(self.m)))

    @classmethod
    def uniform(cls, m: int, basis: Optional[Basis] = None) -> "MassRegister":
        """等权叠加（即 |a⟩ 或 + 态）"""
        basis = basis if basis is not None else standard_mass_basis(m)
        return cls(m, np.full(m, 1 / np.sqrt(m), dtype=complex), basis)

    @classmethod
    def definite(cls, m: int, order_index: int, basis: Optional[Basis] = None) -> "MassRegister":
        """质量处于单一因果序"""
        basis = basis if basis is not None else standard_mass_basis(m)
        amps = np.zeros(m, dtype=complex)
        amps[order_index] = 1.0
        return cls(m, amps, basis)

    def state(self) -> PureState:
        return PureState((self.m,), self.amps)


def is_regenerated(mass_state: PureState, tol: float = TOLERANCE) -> bool:
    """测量后的质量态在每个因果序上的模都为 1/√m"""
    m = mass_state.dim
    return bool(np.all(np.abs(np.abs(mass_state.amps) - 1 / np.sqrt(m)) < tol))


