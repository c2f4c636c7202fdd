"""Correction tables, transcripts and protocol results."""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

import numpy as np

from ...core.constants import TOLERANCE
from ...core.errors import DimensionError
from ...core.types import OutcomePair
from ...utils.serialization import pairs_from_matrix, pairs_from_vector
from ..qcore import DensityState, PureState, Unitary

FinalState = Union[PureState, DensityState]


@dataclass(frozen=True)
class CorrectionTable:
    """(Charlie 结果, 发送方结果) → 接收方的修正幺正"""

    m: int
    d_prime: int
    entries: Mapping[OutcomePair, Unitary]

    def __post_init__(self):
        expected = {(c, i) for c in range(self.m) for i in range(self.d_prime)}
        if set(self.entries) != expected:
            missing = sorted(expected - set(self.entries))
            raise DimensionError(f"correction table is not total; missing {missing}")
        for pair, u in self.entries.items():
            if u.dim != self.d_prime:
                raise DimensionError(f"correction {pair} has dim {u.dim}, expected {self.d_prime}")

    def __getitem__(self, pair: OutcomePair) -> Unitary:
        return self.entries[pair]

    def pairs(self) -> List[OutcomePair]:
        return sorted(self.entries)

    def matches(self, other: "CorrectionTable", tol: float = TOLERANCE) -> bool:
        """逐项比较，忽略各项的全局相位"""
        if (self.m, self.d_prime) != (other.m, other.d_prime):
            return False
        return all(self[p].equals_up_to_phase(other[p], tol) for p in self.pairs())


@dataclass(frozen=True)
class TranscriptEntry:
    actor: str
    action: str
    outcome: Optional[str] = None
    probability: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        entry: Dict[str, Any] = {"actor": self.actor, "action": self.action}
        if self.outcome is not None:
            entry["outcome"] = self.outcome
        if self.probability is not None:
            entry["probability"] = round(self.probability, 15)
        return entry


@dataclass
class Transcript:
    """按时间顺序记录的经典通信与操作"""

    entries: List[TranscriptEntry] = field(default_factory=list)

    def add(self, actor: str, action: str, outcome: Optional[str] = None,
            probability: Optional[float] = None) -> "Transcript":
        self.entries.append(TranscriptEntry(actor, action, outcome, probability))
        return self

    def extend(self, other: "Transcript") -> "Transcript":
        self.entries.extend(other.entries)
        return self

    def copy(self) -> "Transcript":
        return Transcript(list(self.entries))

    def to_list(self) -> List[Dict[str, Any]]:
        return [e.to_dict() for e in self.entries]


@dataclass
class Branch:
    """一条结果路径"""

    outcomes: Tuple[str, ...]
    probability: float
    state: Optional[FinalState]
    fidelity: Optional[float]
    transcript: Transcript
    correction: str = ""
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def is_null(self) -> bool:
        return self.state is None

    def to_dict(self, include_state: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "outcomes": list(self.outcomes),
            "probability": round(self.probability, 15),
            "fidelity": None if self.fidelity is None else round(self.fidelity, 15),
            "correction": self.correction,
            "null": self.is_null,
        }
        data.update(self.extra)
        if include_state and isinstance(self.state, PureState):
            data["state"] = {"dims": list(self.state.dims), "amps": pairs_from_vector(self.state.amps)}
        elif include_state and isinstance(self.state, DensityState):
            data["state"] = {"dims": list(self.state.dims), "matrix": pairs_from_matrix(self.state.mat)}
        data["transcript"] = self.transcript.to_list()
        return data


@dataclass
class ProtocolResult:
    """协议的全部结果分支"""

    protocol: str
    branches: List[Branch]
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def live_branches(self) -> List[Branch]:
        return [b for b in self.branches if not b.is_null]

    @property
    def min_branch_fidelity(self) -> float:
        values = [b.fidelity for b in self.live_branches if b.fidelity is not None]
        return float(min(values)) if values else 0.0

    @property
    def probability_sum(self) -> float:
        return float(sum(b.probability for b in self.branches))

    def probabilities(self) -> Dict[Tuple[str, ...], float]:
        return {b.outcomes: b.probability for b in self.branches}

    def sample(self, seed: int) -> "ProtocolResult":
        """按分支概率抽取一条路径"""
        probs = np.array([b.probability for b in self.branches])
        rng = np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)
        index = int(rng.choice(len(self.branches), p=probs / probs.sum()))
        return replace(self, branches=[self.branches[index]], extra={**self.extra, "sampled_index": index})

    def to_dict(self, include_states: bool = False) -> Dict[str, Any]:
        return {
            "protocol": self.protocol,
            "min_branch_fidelity": round(self.min_branch_fidelity, 15),
            "probability_sum": round(self.probability_sum, 15),
            "branches": [b.to_dict(include_states) for b in self.branches],
            **self.extra,
        }
