"""Common type aliases."""

from typing import Any, Dict, Literal, Tuple


ConfigDict = Dict[str, Any]

ClockLabel = Literal["A", "B"]
Direction = Literal["forward", "backward"]
Relation = Literal["X_before_Y", "Y_before_X", "spacelike"]

# (Charlie 结果, 测量方结果)
OutcomePair = Tuple[int, int]
CheckMap = Dict[str, Any]
