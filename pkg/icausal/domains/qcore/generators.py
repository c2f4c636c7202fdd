"""Seeded random states, unitaries and channels for property checks."""

from math import prod
from typing import Sequence

import numpy as np
from scipy.stats import unitary_group

from .operators import KrausChannel, Unitary
from .states import DensityState, PureState


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)


def random_state(dims: Sequence[int], seed: int) -> PureState:
    """高斯实部虚部后归一化"""
    rng = _rng(seed)
    n = prod(dims)
    vec = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return PureState.from_vector(tuple(dims), vec)


def random_unitary(dim: int, seed: int) -> Unitary:
    """Haar 随机幺正"""
    return Unitary(dim, unitary_group.rvs(dim, random_state=_rng(seed)), "U_rand")


def random_density(dims: Sequence[int], seed: int, rank: int = 0) -> DensityState:
    """秩为 rank 的随机混态（0 表示满秩）"""
    rng = _rng(seed)
    n = prod(dims)
    k = rank or n
    g = rng.standard_normal((n, k)) + 1j * rng.standard_normal((n, k))
    return DensityState.from_matrix(tuple(dims), g @ g.conj().T)


def random_channel(dim: int, n_kraus: int, seed: int) -> KrausChannel:
    """由 Haar 等距截取的随机保迹信道"""
    big = unitary_group.rvs(dim * n_kraus, random_state=_rng(seed)) if dim * n_kraus > 1 else np.eye(1)
    isometry = big[:, :dim]
    kraus = [isometry[i * dim:(i + 1) * dim, :] for i in range(n_kraus)]
    return KrausChannel(dim, dim, tuple(kraus))
