"""Unitaries, Kraus channels and the named gate constants used by the protocols."""

from dataclasses import dataclass, field
from typing import Sequence, Tuple

import numpy as np

from ...core.constants import TOLERANCE
from ...core.errors import ChannelError, DimensionError, NormalizationError


@dataclass(frozen=True, eq=False)
class Unitary:
    """幺正矩阵，label 仅用于报告"""

    dim: int
    mat: np.ndarray
    label: str = ""

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        if mat.shape != (self.dim, self.dim):
            raise DimensionError(f"unitary of dim {self.dim} needs a {self.dim}x{self.dim} matrix")
        if np.max(np.abs(mat.conj().T @ mat - np.eye(self.dim))) > TOLERANCE:
            raise NormalizationError(f"matrix {self.label or '<unnamed>'} is not unitary")
        mat = mat.copy()
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)

    @classmethod
    def from_matrix(cls, mat: Sequence[Sequence[complex]], label: str = "") -> "Unitary":
        mat = np.asarray(mat, dtype=complex)
        return cls(mat.shape[0], mat, label)

    @classmethod
    def identity(cls, dim: int, label: str = "I") -> "Unitary":
        return cls(dim, np.eye(dim, dtype=complex), label)

    def dagger(self) -> "Unitary":
        return Unitary(self.dim, self.mat.conj().T, f"{self.label}†" if self.label else "")

    def __matmul__(self, other: "Unitary") -> "Unitary":
        if other.dim != self.dim:
            raise DimensionError(f"cannot compose dims {self.dim} and {other.dim}")
        label = f"{self.label}{other.label}" if self.label and other.label else ""
        return Unitary(self.dim, self.mat @ other.mat, label)

    def kron(self, other: "Unitary") -> "Unitary":
        label = f"{self.label}⊗{other.label}" if self.label and other.label else ""
        return Unitary(self.dim * other.dim, np.kron(self.mat, other.mat), label)

    def equals_up_to_phase(self, other: "Unitary", tol: float = TOLERANCE) -> bool:
        """比较两个幺正矩阵，忽略全局相位"""
        if other.dim != self.dim:
            return False
        overlap = abs(np.trace(self.mat.conj().T @ other.mat)) / self.dim
        return abs(overlap - 1.0) < tol


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """Kraus 表示的完全正、迹不增信道"""

    in_dim: int
    out_dim: int
    kraus: Tuple[np.ndarray, ...]
    trace_preserving: bool = field(init=False)

    def __post_init__(self):
        if not self.kraus:
            raise ChannelError("a channel needs at least one Kraus operator")
        ops = []
        for k in self.kraus:
            k = np.asarray(k, dtype=complex)
            if k.shape != (self.out_dim, self.in_dim):
                raise ChannelError(f"Kraus operator shape {k.shape} != ({self.out_dim}, {self.in_dim})")
            k = k.copy()
            k.setflags(write=False)
            ops.append(k)
        total = sum(k.conj().T @ k for k in ops)
        gap = np.linalg.eigvalsh(np.eye(self.in_dim) - (total + total.conj().T) / 2)
        if np.min(gap) < -TOLERANCE:
            raise ChannelError("sum of K†K exceeds the identity; channel is trace increasing")
        object.__setattr__(self, "kraus", tuple(ops))
        object.__setattr__(self, "trace_preserving", bool(np.max(np.abs(gap)) < TOLERANCE))

    @classmethod
    def from_unitary(cls, u: Unitary) -> "KrausChannel":
        return cls(u.dim, u.dim, (u.mat,))

    def apply(self, mat: np.ndarray) -> np.ndarray:
        """ρ ↦ Σ K ρ K†（输出可能未归一化）"""
        return sum(k @ mat @ k.conj().T for k in self.kraus)


def _u(rows, label: str) -> Unitary:
    return Unitary.from_matrix(np.array(rows, dtype=complex), label)


I2 = _u([[1, 0], [0, 1]], "I")
SIGMA_X = _u([[0, 1], [1, 0]], "σx")
SIGMA_Y = _u([[0, -1j], [1j, 0]], "σy")
SIGMA_Z = _u([[1, 0], [0, -1]], "σz")
I_SIGMA_Y = _u([[0, 1], [-1, 0]], "iσy")
SWAP = _u([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], "SWAP")


def cyclic_shift(dim: int, k: int = 1) -> Unitary:
    """|i⟩ ↦ |i+k mod dim⟩"""
    return Unitary(dim, np.roll(np.eye(dim, dtype=complex), k % dim, axis=0), f"X^{k % dim}")


def diagonal(phases: Sequence[complex], label: str = "") -> Unitary:
    return Unitary(len(phases), np.diag(np.asarray(phases, dtype=complex)), label)
