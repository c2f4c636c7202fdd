"""Entropy, fidelity and distance measures."""

from math import log2, prod
from typing import Sequence

import numpy as np

from ...core.constants import EIGEN_CUTOFF
from ...core.errors import DimensionError
from .ops import reduced_density
from .states import DensityState, PureState


def von_neumann_entropy(mat: np.ndarray) -> float:
    """以 2 为底的冯诺依曼熵，忽略小于 1e-12 的本征值"""
    vals = np.linalg.eigvalsh((mat + mat.conj().T) / 2)
    vals = vals[vals > EIGEN_CUTOFF]
    return float(-np.sum(vals * np.log2(vals)))


def entanglement_entropy(state: PureState, part: Sequence[int]) -> float:
    """
    part 与其余子系统之间的纠缠熵（ebit）

    Raises:
        DimensionError: part 为空、重复、越界或包含全部子系统
    """
    part = tuple(part)
    n = state.n_subsystems
    if not part or len(part) >= n or len(set(part)) != len(part) or any(not 0 <= i < n for i in part):
        raise DimensionError(f"{part} is not a strict nonempty subset of {n} subsystems")
    d_part = prod(state.dims[i] for i in part)
    d_rest = state.dim // d_part
    entropy = von_neumann_entropy(reduced_density(state, part))
    return float(min(max(entropy, 0.0), log2(min(d_part, d_rest))))


def fidelity(a: PureState, b: PureState) -> float:
    """|⟨a|b⟩|²"""
    if a.dims != b.dims:
        raise DimensionError(f"fidelity of dims {a.dims} and {b.dims}")
    return float(min(abs(np.vdot(a.amps, b.amps)) ** 2, 1.0))


def trace_distance(r: DensityState, s: DensityState) -> float:
    """½‖r − s‖₁"""
    if r.dims != s.dims:
        raise DimensionError(f"trace distance of dims {r.dims} and {s.dims}")
    diff = r.mat - s.mat
    vals = np.linalg.eigvalsh((diff + diff.conj().T) / 2)
    return float(min(0.5 * np.sum(np.abs(vals)), 1.0))


def min_eigenvalue(mat: np.ndarray) -> float:
    return float(np.min(np.linalg.eigvalsh((mat + mat.conj().T) / 2)))
