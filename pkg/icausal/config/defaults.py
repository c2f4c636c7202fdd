"""Default configuration values."""

from typing import Dict, Any

from ..core.constants import BOUNDARY_BAND, IDENTITY_TOLERANCE, NULL_PROBABILITY, TOLERANCE


DEFAULT_SPACETIME: Dict[str, Any] = {
    "G": 6.67430e-11,  # CODATA 2018
    "c": 299792458.0,
    "M": 1.98847e30,  # 太阳质量
    "R": 6.957e8,  # 太阳半径
    "h": 1.0e3,
    "tau_star": None,  # 为空时使用阈值
}

DEFAULT_CONFIG: Dict[str, Any] = {
    "tolerance": TOLERANCE,
    "identity_tolerance": IDENTITY_TOLERANCE,
    "null_probability": NULL_PROBABILITY,
    "boundary_band": BOUNDARY_BAND,
    "mode": "exhaustive",
    "seed": None,  # sample 模式必填
    "m": 2,
    "d": 2,
    "output_dir": "~/icausal_reports",
    "log_to_file": False,
    "log_level": "WARNING",
    "workers": 4,  # 验收套件线程数
    "spacetime": dict(DEFAULT_SPACETIME),
}
