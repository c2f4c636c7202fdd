"""Causal orders over labelled party events."""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ...core.errors import StrategyIncompleteError
from ...core.orders import ALICE, BOB, BOB_EVENT, ladder_sequence, order_label


@dataclass(frozen=True)
class Event:
    name: str
    party: str


@dataclass(frozen=True)
class CausalOrder:
    """事件的一个全序"""

    label: str
    sequence: Tuple[Event, ...]

    def names(self) -> List[str]:
        return [e.name for e in self.sequence]

    def check_local_order(self, local_events: Dict[str, Sequence[str]]) -> None:
        """同一方的事件必须按其本地时间顺序出现"""
        for party, events in local_events.items():
            seen = [e.name for e in self.sequence if e.party == party]
            if seen != list(events):
                raise StrategyIncompleteError(
                    f"order {self.label} lists {party} events as {seen}, expected {list(events)}"
                )


def ladder_orders(m: int) -> Tuple[CausalOrder, ...]:
    """Y 依次插入 Alice 事件序列的 m 个因果序（索引 0 为 Y 最后）"""
    orders = []
    for index in range(m):
        names = ladder_sequence(m, index)
        events = tuple(Event(n, BOB if n == BOB_EVENT else ALICE) for n in names)
        orders.append(CausalOrder(order_label(names), events))
    return tuple(orders)
