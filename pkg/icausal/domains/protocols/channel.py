"""Local implementation of an arbitrary channel on a shared (A, B) state."""

from typing import List, Tuple

import numpy as np

from ...core.constants import EIGEN_CUTOFF, NULL_PROBABILITY
from ...core.errors import ChannelError, DimensionError
from ...utils.logging import log
from ...utils.serialization import pairs_from_matrix
from ..qcore import DensityState, KrausChannel, PureState, apply_channel, mixture, trace_distance
from .base import Branch, ProtocolResult
from .teleport import backteleport_2ics, teleport_2ics


def _ensemble(rho: DensityState) -> List[Tuple[float, PureState]]:
    # 本征分解得到的正交纯态系综
    vals, vecs = rho.eigh()
    return [
        (float(p), PureState.from_vector(rho.dims, vecs[:, k]))
        for k, p in enumerate(vals) if p > EIGEN_CUTOFF
    ]


def _transport(rho: DensityState, forward: bool) -> DensityState:
    # 对系综的每个纯态分别传送，再按权重与分支概率混合
    weighted = []
    for p, psi in _ensemble(rho):
        result = teleport_2ics(psi) if forward else backteleport_2ics(psi)
        weighted.extend((p * b.probability, b.state) for b in result.live_branches)
    return mixture(rho.dims, weighted)


def implement_nonlocal_channel(rho: DensityState, channel: KrausChannel) -> DensityState:
    """
    传送 → Bob 在 (B', B) 上局域作用信道 → 反向传送

    Args:
        rho: 维度为 (2, d) 的共享态
        channel: 作用在 2d 维联合空间上的 Kraus 信道

    Returns:
        (A, B) 上的输出态；迹不保持的信道输出按迹归一化

    Raises:
        DimensionError: rho 不是 (2, d) 二分态
        ChannelError: 信道维度不匹配，或输出迹为 0
    """
    if len(rho.dims) != 2 or rho.dims[0] != 2:
        raise DimensionError(f"channel implementation expects dims (2, d), got {rho.dims}")
    if channel.in_dim != rho.dim or channel.out_dim != rho.dim:
        raise ChannelError(f"channel {channel.in_dim}->{channel.out_dim} does not act on dims {rho.dims}")

    at_bob = _transport(rho, forward=True)
    out = apply_channel(at_bob, channel)
    trace = float(np.real(np.trace(out)))
    if trace < NULL_PROBABILITY:
        raise ChannelError(f"channel output has trace {trace!r}")
    applied = DensityState.from_matrix(rho.dims, out / trace)
    result = _transport(applied, forward=False)
    log(f"channel: output trace before renormalization {trace:.15f}", level="debug")
    return result


def apply_directly(rho: DensityState, channel: KrausChannel) -> DensityState:
    """参照：直接在 ρ_AB 上作用信道并归一化"""
    out = apply_channel(rho, channel)
    return DensityState.from_matrix(rho.dims, out / float(np.real(np.trace(out))))


def channel_result(rho: DensityState, channel: KrausChannel) -> ProtocolResult:
    """
    报告用：前向传送各本征分量的分支，以及输出与直接作用结果的迹距离
    """
    branches = []
    for k, (p, psi) in enumerate(_ensemble(rho)):
        for b in teleport_2ics(psi).branches:
            branches.append(Branch(
                (f"e{k}",) + b.outcomes, p * b.probability, b.state, b.fidelity, b.transcript, b.correction,
            ))
    output = implement_nonlocal_channel(rho, channel)
    direct = apply_directly(rho, channel)
    return ProtocolResult("channel", branches, {
        "trace_distance": trace_distance(output, direct),
        "trace_preserving": channel.trace_preserving,
        "output": pairs_from_matrix(output.mat),
    })
