"""Schwarzschild light propagation between two static clocks on a radial line."""

import math

from ...core.constants import BOUNDARY_BAND, MASS_FLOOR
from ...core.errors import DivergentThresholdError, HorizonError, PreconditionError
from .model import SpacetimeConfig


def metric_gtt(r: float, cfg: SpacetimeConfig) -> float:
    """g_tt = −(1 − R_s/r)"""
    rs = cfg.schwarzschild_radius
    if r <= rs:
        raise HorizonError(f"radius {r} is at or inside the Schwarzschild radius {rs}")
    return -(1.0 - rs / r)


def light_coordinate_time(r_from: float, r_to: float, cfg: SpacetimeConfig) -> float:
    """
    径向光信号的坐标时间

    闭式原函数 ∫dr/(1 − R_s/r) = r + R_s ln(r − R_s)。

    Args:
        r_from: 发射半径
        r_to: 接收半径
        cfg: 时空配置

    Returns:
        远处观察者测得的传播时间（秒），对参数对称

    Raises:
        HorizonError: 任一半径不在视界之外
    """
    rs = cfg.schwarzschild_radius
    for r in (r_from, r_to):
        if r <= rs:
            raise HorizonError(f"radius {r} is at or inside the Schwarzschild radius {rs}")
    r_lo, r_hi = sorted((r_from, r_to))
    distance = r_hi - r_lo
    if rs == 0.0 or distance == 0.0:
        return distance / cfg.c
    return (distance + rs * math.log1p(distance / (r_lo - rs))) / cfg.c


def arrival_proper_time(tau_emit: float, r_emit: float, r_receive: float,
                        cfg: SpacetimeConfig) -> float:
    """接收时钟读到信号到达时的固有时"""
    if tau_emit < 0:
        raise PreconditionError(f"emission proper time must be >= 0, got {tau_emit}")
    t_emit = tau_emit / math.sqrt(-metric_gtt(r_emit, cfg))
    t_arrive = t_emit + light_coordinate_time(r_emit, r_receive, cfg)
    return math.sqrt(-metric_gtt(r_receive, cfg)) * t_arrive


def _dilation_gap(cfg: SpacetimeConfig) -> float:
    # 1 − sqrt(g(R)/g(R+h))，用 log1p/expm1 避免相消
    rs = cfg.schwarzschild_radius
    log_ratio = math.log1p(-rs / cfg.R) - math.log1p(-rs / (cfg.R + cfg.h))
    return -math.expm1(0.5 * log_ratio)


def tau_star_threshold(cfg: SpacetimeConfig) -> float:
    """
    两时钟上相同固有时的事件恰好因果相连的阈值 τ*

    Raises:
        DivergentThresholdError: 质量低于下限（平直时空中分母为零）
    """
    if cfg.M < MASS_FLOOR:
        raise DivergentThresholdError(f"mass {cfg.M} kg is below the floor {MASS_FLOOR}; tau* diverges")
    gap = _dilation_gap(cfg)
    if not gap > 0.0:
        raise DivergentThresholdError("time-dilation gap vanishes; tau* diverges")
    t_c = light_coordinate_time(cfg.R, cfg.R + cfg.h, cfg)
    return math.sqrt(-metric_gtt(cfg.R, cfg)) * t_c / gap


def definite_future_threshold(tau_star: float, cfg: SpacetimeConfig) -> float:
    """
    最早的 τ̃：B 上 τ̃ 时刻的事件 Y′ 在两种质量位置下都位于 X（A 上 τ*）的因果未来
    """
    threshold = tau_star_threshold(cfg)
    if tau_star < threshold - max(BOUNDARY_BAND, 1e-12 * threshold):
        raise PreconditionError(f"tau_star {tau_star} is below the causal threshold {threshold}")
    # 质量靠近 A 时信号最慢到达 B
    return arrival_proper_time(tau_star, cfg.R, cfg.R + cfg.h, cfg)
