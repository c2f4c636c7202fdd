"""Causal classification of event pairs and validation of m-ICS mass configurations."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from ...core.constants import BOUNDARY_BAND
from ...core.errors import PreconditionError
from ...core.orders import BOB_EVENT, alice_events, ladder_sequence, order_label
from ...core.types import ClockLabel
from ...utils.logging import log
from .geometry import arrival_proper_time
from .model import CausalVerdict, EventSpec, Geometry, SpacetimeConfig


def classify_order(ev1: EventSpec, ev2: EventSpec, mass_near: ClockLabel,
                   cfg: SpacetimeConfig) -> CausalVerdict:
    """
    判断 ev1 (X) 与 ev2 (Y) 在给定质量位置下的因果关系

    两个方向各算一次光信号到达时刻；余量落在边界带内仍判为因果相连，
    并由 verdict.boundary 标出。
    """
    if ev1.clock == ev2.clock:
        forward = ev2.proper_time - ev1.proper_time
        backward = -forward
    else:
        r1 = cfg.radius(ev1.clock, mass_near)
        r2 = cfg.radius(ev2.clock, mass_near)
        forward = ev2.proper_time - arrival_proper_time(ev1.proper_time, r1, r2, cfg)
        backward = ev1.proper_time - arrival_proper_time(ev2.proper_time, r2, r1, cfg)

    slack = max(forward, backward)
    if slack < -BOUNDARY_BAND:
        return CausalVerdict("spacelike", 0.0, slack)
    if forward >= backward:
        return CausalVerdict("X_before_Y", forward, forward)
    return CausalVerdict("Y_before_X", -backward, backward)


@dataclass
class PairCheck:
    """某个因果序中一对 (X_i, Y) 的检查结果"""

    first: str
    second: str
    expected: str
    verdict: CausalVerdict

    @property
    def ok(self) -> bool:
        return self.verdict.relation == self.expected

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": [self.first, self.second],
            "expected": self.expected,
            **self.verdict.to_dict(),
            "ok": self.ok,
        }


@dataclass
class OrderCheck:
    label: str
    mass_near: ClockLabel
    pairs: List[PairCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.pairs)

    @property
    def margin(self) -> float:
        """最紧的光锥余量"""
        return min(p.verdict.slack for p in self.pairs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.label,
            "mass_near": self.mass_near,
            "margin": self.margin,
            "ok": self.ok,
            "pairs": [p.to_dict() for p in self.pairs],
        }


@dataclass
class MicsReport:
    m: int
    tau_star: float
    orders: List[OrderCheck]

    @property
    def valid(self) -> bool:
        return all(o.ok for o in self.orders)

    @property
    def failing(self) -> Optional[str]:
        """第一个失败的因果序及其事件对"""
        for order in self.orders:
            for pair in order.pairs:
                if not pair.ok:
                    return (f"{order.label}: ({pair.first}, {pair.second}) is "
                            f"{pair.verdict.relation}, expected {pair.expected}")
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "tau_star": self.tau_star,
            "valid": self.valid,
            "failing": self.failing,
            "orders": [o.to_dict() for o in self.orders],
        }


def validate_mics(cfg: SpacetimeConfig, tau_star: float, m: int,
                  geometries: Optional[Sequence[Geometry]] = None,
                  alice_times: Optional[Sequence[float]] = None) -> MicsReport:
    """
    验证一组质量位置能否实现 m 个不同的因果序

    Args:
        cfg: m=2 时使用的配置，两种质量位置都基于它
        tau_star: Bob 事件 Y 在时钟 B 上的固有时
        m: 因果序数量，2..4
        geometries: m>=3 时每个因果序对应的几何，按因果序索引排列
        alice_times: Alice 各事件的固有时，默认全部为 tau_star

    Returns:
        逐个因果序的检查报告；失败时 valid 为 False 且 failing 指出事件对

    Raises:
        PreconditionError: m 不受支持，或 m>=3 时缺少几何
    """
    if m not in (2, 3, 4):
        raise PreconditionError(f"m must be 2, 3 or 4, got {m}")
    names = alice_events(m)
    if geometries is None:
        if m != 2:
            raise PreconditionError(f"m={m} needs one user-supplied geometry per causal order")
        # 序 0 为 X->Y（质量靠近 B），序 1 为 Y->X（质量靠近 A）
        geometries = [Geometry(cfg, "B"), Geometry(cfg, "A")]
    if len(geometries) != m:
        raise PreconditionError(f"expected {m} geometries, got {len(geometries)}")
    times = list(alice_times) if alice_times is not None else [tau_star] * len(names)
    if len(times) != len(names):
        raise PreconditionError(f"expected {len(names)} Alice event times, got {len(times)}")

    bob = EventSpec("B", tau_star, BOB_EVENT)
    alice = [EventSpec("A", t, name) for name, t in zip(names, times)]
    orders = []
    for index, geometry in enumerate(geometries):
        sequence = ladder_sequence(m, index)
        check = OrderCheck(geometry.label or order_label(sequence), geometry.mass_near)
        y_pos = sequence.index(BOB_EVENT)
        for event in alice:
            expected = "X_before_Y" if sequence.index(event.name) < y_pos else "Y_before_X"
            verdict = classify_order(event, bob, geometry.mass_near, geometry.cfg)
            check.pairs.append(PairCheck(event.name, BOB_EVENT, expected, verdict))
        orders.append(check)

    report = MicsReport(m, tau_star, orders)
    if not report.valid:
        log(f"{m}-ICS configuration invalid: {report.failing}", level="warning")
    return report
