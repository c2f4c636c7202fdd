"""Event naming shared by the branch engine and the spacetime validator."""

from typing import List

ALICE = "alice"
BOB = "bob"
BOB_EVENT = "Y"


def alice_events(m: int) -> List[str]:
    """Alice 的本地事件：m=2 时为 X，否则为 X1..X{m-1}"""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if m == 2:
        return ["X"]
    return [f"X{k}" for k in range(1, m)]


def ladder_sequence(m: int, index: int) -> List[str]:
    """
    第 index 个因果序：Y 之前有 m-1-index 个 Alice 事件

    index 0 为 Y 最后发生，index m-1 为 Y 最先发生。
    """
    if not 0 <= index < m:
        raise ValueError(f"order index {index} out of range for m={m}")
    alice = alice_events(m)
    split = m - 1 - index
    return alice[:split] + [BOB_EVENT] + alice[split:]


def order_label(sequence: List[str]) -> str:
    return "->".join(sequence)
