"""JSON encoding of complex arrays and report payloads."""

import hashlib
import json
from typing import Any, List, Sequence

import numpy as np

from ..core.constants import REPORT_DIGITS


def _round(x: float) -> float:
    # 固定有效位数，保证报告逐字节可复现
    if x == 0.0:
        return 0.0
    return float(f"{x:.{REPORT_DIGITS}g}")


def complex_to_pair(z: complex) -> List[float]:
    return [_round(float(np.real(z))), _round(float(np.imag(z)))]


def pairs_from_vector(vec: np.ndarray) -> List[List[float]]:
    """复向量 → [[re, im], ...]"""
    return [complex_to_pair(z) for z in np.asarray(vec).ravel()]


def pairs_from_matrix(mat: np.ndarray) -> List[List[List[float]]]:
    """复矩阵 → 行优先的 [re, im] 二维数组"""
    return [pairs_from_vector(row) for row in np.asarray(mat)]


def vector_from_pairs(pairs: Sequence[Any]) -> np.ndarray:
    """[[re, im], ...] 或实数列表 → 复向量"""
    values = []
    for entry in pairs:
        if isinstance(entry, (list, tuple)):
            if len(entry) != 2:
                raise ValueError(f"complex entry must be [re, im], got {entry!r}")
            values.append(complex(float(entry[0]), float(entry[1])))
        else:
            values.append(complex(float(entry)))
    return np.array(values, dtype=complex)


def matrix_from_pairs(rows: Sequence[Sequence[Any]]) -> np.ndarray:
    """行优先 [re, im] 二维数组 → 复矩阵"""
    mat = [vector_from_pairs(row) for row in rows]
    if not mat or len({len(row) for row in mat}) != 1:
        raise ValueError("matrix rows must be nonempty and of equal length")
    return np.vstack(mat)


def digest(vec: np.ndarray) -> str:
    """输入振幅的 sha256 摘要"""
    payload = json.dumps(pairs_from_vector(vec), separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def to_json(payload: Any) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2, allow_nan=False)
