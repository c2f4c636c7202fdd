"""Schwarzschild causal geometry for two static clocks."""

from .model import CausalVerdict, EventSpec, Geometry, SpacetimeConfig
from .geometry import (
    arrival_proper_time, definite_future_threshold, light_coordinate_time,
    metric_gtt, tau_star_threshold,
)
from .causality import MicsReport, OrderCheck, PairCheck, classify_order, validate_mics
from .oracle import light_coordinate_time_quadrature

__all__ = [
    "CausalVerdict", "EventSpec", "Geometry", "SpacetimeConfig",
    "arrival_proper_time", "definite_future_threshold", "light_coordinate_time",
    "metric_gtt", "tau_star_threshold",
    "MicsReport", "OrderCheck", "PairCheck", "classify_order", "validate_mics",
    "light_coordinate_time_quadrature",
]
