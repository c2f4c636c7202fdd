"""Spacetime configuration, events and causal verdicts."""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from ...core.constants import BOUNDARY_BAND
from ...core.errors import ConfigError, HorizonError, PreconditionError
from ...core.types import ClockLabel, Relation

CLOCKS = ("A", "B")


@dataclass(frozen=True)
class SpacetimeConfig:
    """Schwarzschild 配置（SI 单位，测试中可取 G=c=1）"""

    G: float
    c: float
    M: float
    R: float
    h: float

    def __post_init__(self):
        if not (self.G > 0 and self.c > 0 and self.h > 0):
            raise HorizonError(f"G, c and h must be positive (G={self.G}, c={self.c}, h={self.h})")
        if self.M < 0 or self.R <= 0:
            raise HorizonError(f"M must be >= 0 and R > 0 (M={self.M}, R={self.R})")
        rs = self.schwarzschild_radius
        if self.R <= rs:
            raise HorizonError(f"clock radius R={self.R} is inside the Schwarzschild radius {rs}")

    @property
    def schwarzschild_radius(self) -> float:
        return 2.0 * self.G * self.M / self.c ** 2

    def radius(self, clock: ClockLabel, mass_near: ClockLabel) -> float:
        """质量靠近 mass_near 时钟 clock 的径向坐标"""
        if clock not in CLOCKS or mass_near not in CLOCKS:
            raise PreconditionError(f"clock labels must be A or B, got {clock!r}/{mass_near!r}")
        return self.R if clock == mass_near else self.R + self.h

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpacetimeConfig":
        try:
            return cls(*(float(data[k]) for k in ("G", "c", "M", "R", "h")))
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError(f"Malformed spacetime block: {e}")

    def to_dict(self) -> Dict[str, float]:
        return {"G": self.G, "c": self.c, "M": self.M, "R": self.R, "h": self.h}


@dataclass(frozen=True)
class EventSpec:
    """某个时钟上的事件，proper_time 从同步时刻 0 起算"""

    clock: ClockLabel
    proper_time: float
    name: str = ""

    def __post_init__(self):
        if self.clock not in CLOCKS:
            raise PreconditionError(f"clock must be A or B, got {self.clock!r}")
        if self.proper_time < 0:
            raise PreconditionError(f"proper time must be >= 0, got {self.proper_time}")


@dataclass(frozen=True)
class CausalVerdict:
    """
    事件对的因果关系

    slack 为两个光锥不等式中较宽松者的余量，为负时类空；
    margin 对 X_before_Y 取 +slack，对 Y_before_X 取 −slack，类空时为 0。
    """

    relation: Relation
    margin: float
    slack: float

    @property
    def boundary(self) -> bool:
        return abs(self.slack) < BOUNDARY_BAND

    def to_dict(self) -> Dict[str, Any]:
        return {
            "relation": self.relation,
            "margin": self.margin,
            "slack": self.slack,
            "boundary": self.boundary,
        }


@dataclass(frozen=True)
class Geometry:
    """一种质量位置：配置 + 质量靠近的时钟"""

    cfg: SpacetimeConfig
    mass_near: ClockLabel
    label: Optional[str] = None
