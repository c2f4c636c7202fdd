"""JSON files for states, unitaries and channels."""

import json
from typing import Any, Dict

from ...core.errors import ConfigError
from ...utils.serialization import matrix_from_pairs, pairs_from_matrix, pairs_from_vector, vector_from_pairs
from .operators import KrausChannel, Unitary
from .states import PureState


def _read(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Cannot read {path}: {e}")


def _write(path: str, payload: Any) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2)


def state_from_dict(data: Dict[str, Any]) -> PureState:
    """{"dims": [...], "amps": [[re, im], ...]}"""
    try:
        return PureState(tuple(data["dims"]), vector_from_pairs(data["amps"]))
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"Malformed state: {e}")


def state_to_dict(state: PureState) -> Dict[str, Any]:
    return {"dims": list(state.dims), "amps": pairs_from_vector(state.amps)}


def load_state(path: str) -> PureState:
    return state_from_dict(_read(path))


def save_state(state: PureState, path: str) -> None:
    _write(path, state_to_dict(state))


def load_unitary(path: str) -> Unitary:
    data = _read(path)
    try:
        if isinstance(data, dict):
            return Unitary.from_matrix(matrix_from_pairs(data["matrix"]), data.get("label", ""))
        return Unitary.from_matrix(matrix_from_pairs(data))
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"Malformed unitary file {path}: {e}")


def channel_from_dict(data: Dict[str, Any]) -> KrausChannel:
    """{"in_dim": n, "out_dim": n, "kraus": [matrix, ...]}"""
    try:
        kraus = tuple(matrix_from_pairs(k) for k in data["kraus"])
        return KrausChannel(int(data["in_dim"]), int(data["out_dim"]), kraus)
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"Malformed channel: {e}")


def channel_to_dict(channel: KrausChannel) -> Dict[str, Any]:
    return {
        "in_dim": channel.in_dim,
        "out_dim": channel.out_dim,
        "kraus": [pairs_from_matrix(k) for k in channel.kraus],
    }


def load_channel(path: str) -> KrausChannel:
    return channel_from_dict(_read(path))


def save_channel(channel: KrausChannel, path: str) -> None:
    _write(path, channel_to_dict(channel))