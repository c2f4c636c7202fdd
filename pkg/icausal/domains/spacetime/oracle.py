"""Adaptive-quadrature reference for the light-travel coordinate time."""

from scipy.integrate import quad

from ...core.errors import HorizonError
from .model import SpacetimeConfig


def light_coordinate_time_quadrature(r_from: float, r_to: float, cfg: SpacetimeConfig) -> float:
    """数值积分 (1/c)|∫ dr/(1 − R_s/r)|，仅作为闭式结果的独立校验"""
    rs = cfg.schwarzschild_radius
    if min(r_from, r_to) <= rs:
        raise HorizonError(f"radius at or inside the Schwarzschild radius {rs}")
    lo, hi = sorted((r_from, r_to))
    value, _ = quad(lambda r: 1.0 / (1.0 - rs / r), lo, hi, epsabs=0.0, epsrel=1e-12, limit=60)
    return value / cfg.c
