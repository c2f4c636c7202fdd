"""Reduction of tripartite nonlocality-without-entanglement sets to bipartite ones."""

import json
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ...config.paths import get_default_corpus_path
from ...core.constants import TOLERANCE
from ...core.errors import CorpusError, ICausalError
from ...utils.logging import log
from ...utils.serialization import vector_from_pairs
from ..qcore import PureState, fidelity, permute, reduced_density, tensor_all
from .base import Branch, ProtocolResult
from .teleport import teleport_mics

# 传送后 (B', B, C) → (B, C, C')
REGROUP = [1, 2, 0]

DISCRIMINATOR_NOTE = (
    "global projective measurement onto the reduced set, in place of the LOCC procedure "
    "for 2⊗d orthogonal product states"
)


@dataclass(frozen=True)
class NlweCorpus:
    """一组三方正交乘积态"""

    name: str
    labels: List[str]
    states: List[PureState]


def corpus_from_dict(data: Dict[str, Any]) -> NlweCorpus:
    """
    解析态集 JSON：{"name", "states": [{"label", "factors": [[...], [...], [...]]}]}

    Raises:
        CorpusError: 格式错误，或态集不正交、不是乘积态
    """
    try:
        entries = data["states"]
        labels, states = [], []
        for n, entry in enumerate(entries):
            factors = [PureState.from_vector((len(f),), vector_from_pairs(f)) for f in entry["factors"]]
            labels.append(str(entry.get("label", n)))
            states.append(tensor_all(factors))
    except (KeyError, TypeError, ValueError, ICausalError) as e:
        raise CorpusError(f"Malformed corpus: {e}")
    validate_corpus(states)
    return NlweCorpus(str(data.get("name", "corpus")), labels, states)


def load_corpus(path: Optional[str] = None) -> NlweCorpus:
    """读取态集文件，默认取随包分发的 2⊗2⊗2 不可扩展乘积基"""
    path = path or get_default_corpus_path()
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise CorpusError(f"Cannot read corpus file {path}: {e}")
    return corpus_from_dict(data)


def gram_matrix(states: Sequence[PureState]) -> np.ndarray:
    """G[i, j] = ⟨s_i|s_j⟩"""
    vecs = np.array([s.amps for s in states])
    return vecs.conj() @ vecs.T


def is_product(state: PureState, tol: float = TOLERANCE) -> bool:
    """每个单体约化态都是纯态"""
    for k in range(state.n_subsystems):
        rho = reduced_density(state, [k])
        if abs(float(np.real(np.trace(rho @ rho))) - 1.0) > tol:
            return False
    return True


def validate_corpus(states: Sequence[PureState], tol: float = TOLERANCE) -> None:
    if not states:
        raise CorpusError("corpus is empty")
    dims = states[0].dims
    if len(dims) != 3 or dims[:2] != (2, 2):
        raise CorpusError(f"corpus states must have dims (2, 2, d), got {dims}")
    for n, s in enumerate(states):
        if s.dims != dims:
            raise CorpusError(f"state {n} has dims {s.dims}, expected {dims}")
        if not is_product(s, tol):
            raise CorpusError(f"state {n} is not a product across the three parties")
    error = float(np.max(np.abs(gram_matrix(states) - np.eye(len(states)))))
    if error > tol:
        raise CorpusError(f"corpus is not orthonormal (max Gram deviation {error:.3e})")


def _reduce_one(state: PureState) -> ProtocolResult:
    result = teleport_mics(state, 2, "forward")
    for branch in result.live_branches:
        branch.state = permute(branch.state, REGROUP)
    return result


def reduce_nlwe(states: Sequence[PureState]) -> List[PureState]:
    """
    把每个态中 Alice 的量子比特经 2-ICS 传送到 C 方的辅助比特 C'

    Args:
        states: 两两正交的乘积态，维度 (2, 2, d)

    Returns:
        维度 (2, d, 2) 的态，子系统顺序 (B, C, C')，B | (C, C') 二分

    Raises:
        CorpusError: 输入不正交或不是乘积态
    """
    validate_corpus(states)
    return [_reduce_one(s).live_branches[0].state for s in states]


def discriminate_global(reduced: Sequence[PureState]) -> np.ndarray:
    """
    以约化后的态为投影基做全局测量

    Returns:
        S[i, j] = 输入为第 i 个态时判为第 j 个的概率
    """
    return np.abs(gram_matrix(reduced).T) ** 2


def nlwe_result(corpus: NlweCorpus) -> ProtocolResult:
    """对整个态集做约化，报告每个传送分支与判别结果"""
    validate_corpus(corpus.states)
    branches: List[Branch] = []
    reduced = []
    for label, state in zip(corpus.labels, corpus.states):
        expected = permute(state, REGROUP)
        result = _reduce_one(state)
        for b in result.branches:
            value = None if b.is_null else fidelity(b.state, expected)
            branches.append(Branch(
                (label,) + b.outcomes, b.probability / len(corpus.states), b.state, value,
                b.transcript, b.correction,
            ))
        reduced.append(result.live_branches[0].state)

    before = float(np.max(np.abs(gram_matrix(corpus.states) - np.eye(len(reduced)))))
    after = float(np.max(np.abs(gram_matrix(reduced) - np.eye(len(reduced)))))
    success = discriminate_global(reduced)
    log(f"nlwe {corpus.name}: Gram deviation {before:.3e} -> {after:.3e}", level="debug")
    return ProtocolResult("nlwe", branches, {
        "corpus": corpus.name,
        "gram_deviation_before": before,
        "gram_deviation_after": after,
        "success_probability": float(np.mean(np.diag(success))),
        "discriminator": DISCRIMINATOR_NOTE,
    })
