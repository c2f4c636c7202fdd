"""Pure and mixed states over ordered subsystems, and orthonormal bases.

Index convention: subsystem 0 is the most significant factor, so the flat
amplitude index is k = sum_i idx_i * prod_{j>i} dims_j. This is numpy's
C order, which lets every operation work on ``amps.reshape(dims)``.
"""

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence, Tuple

import numpy as np

from ...core.constants import MAX_AMPLITUDES, TOLERANCE
from ...core.errors import DimensionError, NormalizationError


def _check_dims(dims: Iterable[int]) -> Tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise DimensionError("dims must be nonempty")
    if any(d < 2 for d in dims):
        raise DimensionError(f"every subsystem dimension must be >= 2, got {dims}")
    if prod(dims) > MAX_AMPLITUDES:
        raise DimensionError(f"dims {dims} exceed the dense limit of {MAX_AMPLITUDES} amplitudes")
    return dims


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PureState:
    """归一化纯态：有序子系统维度 + 复振幅"""

    dims: Tuple[int, ...]
    amps: np.ndarray

    def __post_init__(self):
        dims = _check_dims(self.dims)
        amps = np.asarray(self.amps, dtype=complex).ravel()
        if amps.size != prod(dims):
            raise DimensionError(f"{amps.size} amplitudes do not match dims {dims}")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > TOLERANCE:
            raise NormalizationError(f"state norm^2 is {norm!r}, expected 1")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amps", _frozen(amps))

    @classmethod
    def from_vector(cls, dims: Sequence[int], vec: Sequence[complex]) -> "PureState":
        """由任意非零向量构造，自动归一化"""
        vec = np.asarray(vec, dtype=complex).ravel()
        norm = np.linalg.norm(vec)
        if norm < TOLERANCE:
            raise NormalizationError("cannot normalize a zero vector")
        return cls(tuple(dims), vec / norm)

    @classmethod
    def basis_state(cls, dims: Sequence[int], indices: Sequence[int]) -> "PureState":
        """计算基态 |i_0 i_1 ...⟩"""
        dims = _check_dims(dims)
        if len(indices) != len(dims) or any(not 0 <= i < d for i, d in zip(indices, dims)):
            raise DimensionError(f"basis indices {tuple(indices)} invalid for dims {dims}")
        amps = np.zeros(prod(dims), dtype=complex)
        amps[np.ravel_multi_index(tuple(indices), dims)] = 1.0
        return cls(dims, amps)

    @property
    def dim(self) -> int:
        return int(self.amps.size)

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)

    def tensor(self) -> np.ndarray:
        """振幅按子系统展开的张量视图"""
        return self.amps.reshape(self.dims)

    def density(self) -> "DensityState":
        return DensityState(self.dims, np.outer(self.amps, self.amps.conj()))


@dataclass(frozen=True, eq=False)
class DensityState:
    """密度矩阵：厄米、迹为 1、半正定"""

    dims: Tuple[int, ...]
    mat: np.ndarray

    def __post_init__(self):
        dims = _check_dims(self.dims)
        n = prod(dims)
        mat = np.asarray(self.mat, dtype=complex)
        if mat.shape != (n, n):
            raise DimensionError(f"matrix shape {mat.shape} does not match dims {dims}")
        if np.max(np.abs(mat - mat.conj().T)) > TOLERANCE:
            raise NormalizationError("density matrix is not Hermitian")
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > TOLERANCE:
            raise NormalizationError(f"density matrix trace is {trace!r}, expected 1")
        if np.min(np.linalg.eigvalsh((mat + mat.conj().T) / 2)) < -TOLERANCE:
            raise NormalizationError("density matrix has a negative eigenvalue")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mat", _frozen(mat))

    @classmethod
    def from_matrix(cls, dims: Sequence[int], mat: np.ndarray) -> "DensityState":
        """对称化并按迹归一化后构造"""
        mat = np.asarray(mat, dtype=complex)
        mat = (mat + mat.conj().T) / 2
        trace = float(np.trace(mat).real)
        if trace < TOLERANCE:
            raise NormalizationError("cannot normalize a traceless operator")
        return cls(tuple(dims), mat / trace)

    @property
    def dim(self) -> int:
        return int(self.mat.shape[0])

    def eigh(self) -> Tuple[np.ndarray, np.ndarray]:
        """本征分解，按本征值降序"""
        vals, vecs = np.linalg.eigh(self.mat)
        order = np.argsort(vals)[::-1]
        return vals[order], vecs[:, order]


@dataclass(frozen=True, eq=False)
class Basis:
    """正交归一基，vectors 的每一行是一个基矢"""

    dim: int
    vectors: np.ndarray

    def __post_init__(self):
        vectors = np.asarray(self.vectors, dtype=complex)
        if vectors.shape != (self.dim, self.dim):
            raise DimensionError(f"basis of dim {self.dim} needs a {self.dim}x{self.dim} array")
        gram = vectors.conj() @ vectors.T
        if np.max(np.abs(gram - np.eye(self.dim))) > TOLERANCE:
            raise NormalizationError("basis vectors are not orthonormal")
        object.__setattr__(self, "vectors", _frozen(vectors))

    @classmethod
    def computational(cls, dim: int) -> "Basis":
        return cls(dim, np.eye(dim, dtype=complex))

    def __len__(self) -> int:
        return self.dim

    def __getitem__(self, index: int) -> np.ndarray:
        return self.vectors[index]


def ket(dim: int, index: int) -> PureState:
    """单子系统计算基态"""
    return PureState.basis_state((dim,), (index,))


def plus_state() -> PureState:
    return PureState((2,), np.array([1, 1]) / np.sqrt(2))


def bell_state(index: int) -> PureState:
    """
    四个 Bell 态

    Args:
        index: 1..4，依次为 (|00⟩+|11⟩)/√2, (|00⟩−|11⟩)/√2,
               (|01⟩+|10⟩)/√2, (|01⟩−|10⟩)/√2

    Returns:
        两量子比特纯态
    """
    table = {
        1: [1, 0, 0, 1],
        2: [1, 0, 0, -1],
        3: [0, 1, 1, 0],
        4: [0, 1, -1, 0],
    }
    if index not in table:
        raise DimensionError(f"Bell index must be 1..4, got {index}")
    return PureState((2, 2), np.array(table[index]) / np.sqrt(2))
