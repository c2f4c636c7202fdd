"""Tensor products, subsystem-targeted unitaries, measurement and partial operations."""

from dataclasses import dataclass
from math import prod
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ...core.constants import NULL_PROBABILITY, TOLERANCE
from ...core.errors import DimensionError, NormalizationError
from .operators import KrausChannel, Unitary
from .states import Basis, DensityState, PureState


@dataclass(frozen=True)
class MeasurementOutcome:
    """一次投影测量的单个结果；概率过小时 state 为 None（空态）"""

    index: int
    probability: float
    state: Optional[PureState]

    @property
    def is_null(self) -> bool:
        return self.state is None


def _check_targets(targets: Sequence[int], n: int) -> Tuple[int, ...]:
    targets = tuple(int(t) for t in targets)
    if not targets:
        raise DimensionError("at least one target subsystem is required")
    if len(set(targets)) != len(targets):
        raise DimensionError(f"duplicate target in {targets}")
    if any(not 0 <= t < n for t in targets):
        raise DimensionError(f"target out of range in {targets} for {n} subsystems")
    return targets


def act_on_axes(arr: np.ndarray, mat: np.ndarray, targets: Sequence[int]) -> np.ndarray:
    """
    将矩阵作用到张量的若干轴上，其余轴不变

    Args:
        arr: 形状为 dims (+ 任意尾轴) 的张量
        mat: 作用在 targets 联合因子上的矩阵，targets[0] 为最高位
        targets: 目标轴

    Returns:
        同形状的新张量
    """
    front = list(range(len(targets)))
    moved = np.moveaxis(arr, targets, front)
    shape = moved.shape
    k = prod(shape[: len(targets)])
    out = (mat @ moved.reshape(k, -1)).reshape(shape)
    return np.moveaxis(out, front, targets)


def tensor(a: PureState, b: PureState) -> PureState:
    """a ⊗ b，维度拼接"""
    return PureState(a.dims + b.dims, np.kron(a.amps, b.amps))


def tensor_all(states: Sequence[PureState]) -> PureState:
    result = states[0]
    for s in states[1:]:
        result = tensor(result, s)
    return result


def apply_unitary(state: PureState, u: Unitary, targets: Sequence[int]) -> PureState:
    """在目标子系统上作用 u，其余子系统为恒等"""
    targets = _check_targets(targets, state.n_subsystems)
    if prod(state.dims[t] for t in targets) != u.dim:
        raise DimensionError(
            f"unitary dim {u.dim} does not match targets {targets} of dims {state.dims}"
        )
    out = act_on_axes(state.tensor(), u.mat, targets)
    return PureState(state.dims, out.ravel())


def embed_unitary(u: Unitary, targets: Sequence[int], dims: Sequence[int]) -> Unitary:
    """
    构造稠密的 I⊗U⊗I 矩阵

    先用置换矩阵把目标子系统按 targets 顺序移到最前，作用 U ⊗ I_rest，再置换回去。
    不经过 act_on_axes，可作为 apply_unitary 的独立参照。
    """
    dims = tuple(dims)
    targets = _check_targets(targets, len(dims))
    if prod(dims[t] for t in targets) != u.dim:
        raise DimensionError(f"unitary dim {u.dim} does not match targets {targets} of dims {dims}")
    rest = [i for i in range(len(dims)) if i not in targets]
    order = list(targets) + rest
    n = prod(dims)
    digits = np.unravel_index(np.arange(n), dims)
    moved = np.ravel_multi_index([digits[i] for i in order], [dims[i] for i in order])
    perm = np.zeros((n, n))
    perm[moved, np.arange(n)] = 1.0
    big = np.kron(u.mat, np.eye(prod(dims[i] for i in rest)))
    return Unitary(n, perm.T @ big @ perm, u.label)


def permute(state: PureState, order: Sequence[int]) -> PureState:
    """按 order 重排子系统：新的第 i 个子系统是原来的第 order[i] 个"""
    order = tuple(order)
    if sorted(order) != list(range(state.n_subsystems)):
        raise DimensionError(f"{order} is not a permutation of {state.n_subsystems} subsystems")
    out = np.transpose(state.tensor(), order)
    return PureState(tuple(state.dims[i] for i in order), out.ravel())


def measure_exhaustive(state: PureState, target: int, basis: Basis) -> List[MeasurementOutcome]:
    """
    在给定基下测量单个子系统，枚举全部结果

    Args:
        state: 被测纯态
        target: 被测子系统
        basis: 测量基，维度须等于该子系统维度

    Returns:
        按基矢顺序排列的结果列表；坍缩态仍包含被测子系统（处于对应基矢）
    """
    (target,) = _check_targets([target], state.n_subsystems)
    d = state.dims[target]
    if basis.dim != d:
        raise DimensionError(f"basis dim {basis.dim} does not match subsystem dim {d}")

    moved = np.moveaxis(state.tensor(), target, 0).reshape(d, -1)
    outcomes = []
    for i in range(d):
        vec = basis[i]
        rest = vec.conj() @ moved
        p = float(np.vdot(rest, rest).real)
        if p < NULL_PROBABILITY:
            outcomes.append(MeasurementOutcome(i, p, None))
            continue
        collapsed = np.outer(vec, rest / np.sqrt(p))
        full = np.moveaxis(collapsed.reshape((d,) + tuple(np.delete(state.dims, target))), 0, target)
        outcomes.append(MeasurementOutcome(i, p, PureState(state.dims, full.ravel())))

    total = sum(o.probability for o in outcomes)
    if abs(total - 1.0) > TOLERANCE:
        raise NormalizationError(f"measurement probabilities sum to {total!r}")
    return outcomes


def sample_measurement(state: PureState, target: int, basis: Basis,
                       rng_seed: int) -> Tuple[int, PureState]:
    """按穷举分布抽样一个结果；相同种子给出相同结果"""
    outcomes = measure_exhaustive(state, target, basis)
    probs = np.array([o.probability for o in outcomes])
    rng = np.random.default_rng(int(rng_seed) & 0xFFFFFFFFFFFFFFFF)
    index = int(rng.choice(len(outcomes), p=probs / probs.sum()))
    return outcomes[index].index, outcomes[index].state


def drop_subsystem(state: PureState, target: int, index: int) -> PureState:
    """
    去掉一个已处于计算基态 |index⟩ 的子系统

    Raises:
        NormalizationError: 该子系统并不处于 |index⟩
    """
    (target,) = _check_targets([target], state.n_subsystems)
    if state.n_subsystems < 2:
        raise DimensionError("cannot drop the only subsystem")
    rest = np.take(state.tensor(), index, axis=target)
    norm = float(np.vdot(rest, rest).real)
    if abs(norm - 1.0) > TOLERANCE:
        raise NormalizationError(f"subsystem {target} is not in basis state |{index}⟩ (weight {norm!r})")
    dims = tuple(d for i, d in enumerate(state.dims) if i != target)
    return PureState(dims, rest.ravel())


def partial_trace(rho: DensityState, keep: Sequence[int]) -> DensityState:
    """保留 keep 中的子系统（按给定顺序），迹掉其余"""
    n = len(rho.dims)
    keep = _check_targets(keep, n)
    traced = [i for i in range(n) if i not in keep]
    letters = "abcdefghijklmnopqrstuvwxyz"
    if 2 * n > len(letters):
        raise DimensionError("too many subsystems for partial_trace")
    row = [letters[i] for i in range(n)]
    col = [letters[n + i] for i in range(n)]
    for i in traced:
        col[i] = row[i]
    out = "".join(row[i] for i in keep) + "".join(col[i] for i in keep)
    spec = f"{''.join(row)}{''.join(col)}->{out}"
    reduced = np.einsum(spec, rho.mat.reshape(rho.dims + rho.dims))
    d = prod(rho.dims[i] for i in keep)
    return DensityState.from_matrix(tuple(rho.dims[i] for i in keep), reduced.reshape(d, d))


def partial_transpose(rho: DensityState, part: Sequence[int]) -> np.ndarray:
    """对 part 中的子系统做转置"""
    n = len(rho.dims)
    part = _check_targets(part, n)
    axes = list(range(2 * n))
    for i in part:
        axes[i], axes[n + i] = axes[n + i], axes[i]
    return np.transpose(rho.mat.reshape(rho.dims + rho.dims), axes).reshape(rho.mat.shape)


def reduced_density(state: PureState, part: Sequence[int]) -> np.ndarray:
    """纯态在 part 上的约化密度矩阵（按 part 顺序）"""
    part = _check_targets(part, state.n_subsystems)
    d = prod(state.dims[i] for i in part)
    moved = np.moveaxis(state.tensor(), part, list(range(len(part)))).reshape(d, -1)
    return moved @ moved.conj().T


def apply_channel(rho: DensityState, channel: KrausChannel) -> np.ndarray:
    """作用 Kraus 信道，返回（可能未归一化的）输出矩阵"""
    if channel.in_dim != rho.dim:
        raise DimensionError(f"channel input dim {channel.in_dim} != state dim {rho.dim}")
    return channel.apply(rho.mat)


def mixture(dims: Sequence[int], weighted: Sequence[Tuple[float, PureState]]) -> DensityState:
    """Σ p |ψ⟩⟨ψ|"""
    n = prod(dims)
    mat = np.zeros((n, n), dtype=complex)
    for p, s in weighted:
        mat += p * np.outer(s.amps, s.amps.conj())
    return DensityState.from_matrix(tuple(dims), mat)
