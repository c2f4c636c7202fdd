"""Signalling strategies: which unitary each party applies given the signals it has received."""

import json
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Mapping, Optional, Sequence, Tuple

from ...core.errors import ConfigError, StrategyIncompleteError
from ...core.orders import ALICE, BOB, BOB_EVENT, alice_events, order_label
from ...utils.serialization import matrix_from_pairs, pairs_from_matrix
from ..qcore import SIGMA_X, Unitary, cyclic_shift
from .order import CausalOrder, Event, ladder_orders

SIGNAL = "signal"


@dataclass(frozen=True)
class Action:
    """规则的结果：幺正标签、作用目标、可选的外发消息"""

    unitary: str
    targets: Tuple[int, ...]
    message: Optional[str] = None


@dataclass(frozen=True, eq=False)
class SignalingStrategy:
    """
    信号策略

    rules[event] 把该事件之前新收到的消息内容集合映射到 Action；
    registry 在构造后只读。
    """

    local_events: Mapping[str, Tuple[str, ...]]
    rules: Mapping[str, Mapping[FrozenSet[str], Action]]
    registry: Mapping[str, Unitary]
    orders: Tuple[CausalOrder, ...]

    def __post_init__(self):
        parties = {e: p for p, events in self.local_events.items() for e in events}
        for event in parties:
            if event not in self.rules:
                raise StrategyIncompleteError(f"event {event} has no rules")
        for event, table in self.rules.items():
            if event not in parties:
                raise StrategyIncompleteError(f"rules given for unknown event {event}")
            for action in table.values():
                if action.unitary not in self.registry:
                    raise StrategyIncompleteError(f"unitary label {action.unitary!r} is not registered")
        for order in self.orders:
            for e in order.sequence:
                if parties.get(e.name) != e.party:
                    raise StrategyIncompleteError(f"order {order.label} tags {e.name} with party {e.party}")
            order.check_local_order(self.local_events)

    @property
    def m(self) -> int:
        return len(self.orders)

    def resolve(self, event: str, received: FrozenSet[str]) -> Action:
        """查找规则；历史不可解析时报错"""
        try:
            return self.rules[event][frozenset(received)]
        except KeyError:
            raise StrategyIncompleteError(
                f"no rule for event {event} after receiving {sorted(received)}"
            )


def ladder_strategy(unitaries: Sequence[Unitary], alice_targets: Sequence[int],
                    bob_targets: Sequence[int]) -> SignalingStrategy:
    """
    m 个幺正构成的阶梯策略

    Alice 在第 k 个事件：没收到 Bob 的信号则做 U1 并发送 "k-1"，
    收到则做 U_{k+1}。Bob 收到 Alice 前 n 条消息后做 U_{n+1}，
    之后总是发送信号。

    Args:
        unitaries: U1..Um
        alice_targets: Alice 所持子系统
        bob_targets: Bob 所持子系统

    Returns:
        带全部 m 个因果序的策略
    """
    m = len(unitaries)
    registry = {f"U{k + 1}": u for k, u in enumerate(unitaries)}
    alice_targets, bob_targets = tuple(alice_targets), tuple(bob_targets)
    rules: Dict[str, Dict[FrozenSet[str], Action]] = {}
    names = alice_events(m)
    for k, name in enumerate(names, start=1):
        rules[name] = {
            frozenset(): Action("U1", alice_targets, str(k - 1)),
            frozenset({SIGNAL}): Action(f"U{k + 1}", alice_targets),
        }
    rules[BOB_EVENT] = {
        frozenset(str(i) for i in range(n)): Action(f"U{n + 1}", bob_targets, SIGNAL)
        for n in range(m)
    }
    return SignalingStrategy(
        local_events={ALICE: tuple(names), BOB: (BOB_EVENT,)},
        rules=rules,
        registry=registry,
        orders=ladder_orders(m),
    )


def ics_unitaries(m: int) -> Tuple[Unitary, ...]:
    """2/3/4-ICS 协议使用的 U1..Um"""
    if m == 2:
        return (Unitary.identity(2, "U1"), Unitary(2, SIGMA_X.mat, "U2"))
    if m == 3:
        # U2: |i⟩→|i+1⟩，U3: |i⟩→|i−1⟩
        return tuple(Unitary(3, cyclic_shift(3, k).mat, f"U{n}") for n, k in ((1, 0), (2, 1), (3, 2)))
    if m == 4:
        # U2: |i⟩→|i+2⟩，U3: |i⟩→|i+1⟩，U4: |i⟩→|i−1⟩
        return tuple(Unitary(4, cyclic_shift(4, k).mat, f"U{n}") for n, k in ((1, 0), (2, 2), (3, 1), (4, 3)))
    raise ConfigError(f"no ICS unitary set for m={m}")


def ics_strategy(m: int, alice_targets: Sequence[int], bob_targets: Sequence[int]) -> SignalingStrategy:
    return ladder_strategy(ics_unitaries(m), alice_targets, bob_targets)


def two_party_strategy(u1: Unitary, u2: Unitary) -> SignalingStrategy:
    """无辅助系统的 2-ICS：Alice 持子系统 0，Bob 持子系统 1"""
    return ladder_strategy((u1, u2), (0,), (1,))


def strategy_to_dict(strategy: SignalingStrategy) -> Dict[str, Any]:
    return {
        "parties": {p: list(events) for p, events in strategy.local_events.items()},
        "unitaries": {label: pairs_from_matrix(u.mat) for label, u in strategy.registry.items()},
        "rules": {
            event: [
                {
                    "received": sorted(received),
                    "unitary": action.unitary,
                    "targets": list(action.targets),
                    "message": action.message,
                }
                for received, action in table.items()
            ]
            for event, table in strategy.rules.items()
        },
        "orders": [order.names() for order in strategy.orders],
    }


def strategy_from_dict(data: Dict[str, Any]) -> SignalingStrategy:
    """从 JSON 字典构造策略"""
    try:
        local_events = {p: tuple(events) for p, events in data["parties"].items()}
        parties = {e: p for p, events in local_events.items() for e in events}
        registry = {
            label: Unitary.from_matrix(matrix_from_pairs(rows), label)
            for label, rows in data["unitaries"].items()
        }
        rules = {
            event: {
                frozenset(entry.get("received", [])): Action(
                    entry["unitary"], tuple(entry["targets"]), entry.get("message")
                )
                for entry in entries
            }
            for event, entries in data["rules"].items()
        }
        orders = tuple(
            CausalOrder(order_label(names), tuple(Event(n, parties[n]) for n in names))
            for names in data["orders"]
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"Malformed strategy: {e}")
    return SignalingStrategy(local_events, rules, registry, orders)


def load_strategy(path: str) -> SignalingStrategy:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Cannot read strategy file {path}: {e}")
    return strategy_from_dict(data)


def save_strategy(strategy: SignalingStrategy, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(strategy_to_dict(strategy), f, indent=2)
