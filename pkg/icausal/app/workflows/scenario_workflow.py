"""Scenario workflow - parses a scenario, dispatches to a protocol and assembles the report."""

import io
import time
import traceback
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from ...config.defaults import DEFAULT_SPACETIME
from ...core.constants import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, TOLERANCE
from ...core.errors import ConfigError, DivergentThresholdError, ICausalError, PreconditionError
from ...core.types import ConfigDict
from ...domains.branch import fourier_mass_basis, standard_mass_basis
from ...domains.protocols import (
    ProtocolResult, bell_branches, channel_result, correction_table, entangle_result, load_corpus,
    nlwe_result, roundtrip, search_corrections, shift_unitaries, smolin_density, teleport_mics, unlock_smolin,
)
from ...domains.qcore import (
    I2, SIGMA_X, SIGMA_Y, SIGMA_Z, SWAP, KrausChannel, PureState, Unitary, bell_state, ket,
    load_channel, load_state, load_unitary, plus_state, random_channel, random_state, state_from_dict,
)
from ...domains.report import BranchTableExporter, Report, protocol_checks, write_report
from ...domains.spacetime import (
    EventSpec, Geometry, SpacetimeConfig, classify_order, definite_future_threshold, light_coordinate_time,
    light_coordinate_time_quadrature, tau_star_threshold, validate_mics,
)
from ...utils.logging import log
from ...utils.serialization import digest

PROTOCOLS = (
    "teleport", "backteleport", "roundtrip", "channel", "entangle", "bell", "smolin", "nlwe", "search", "spacetime",
)
PRESETS = ("B1", "B2", "B3", "B4", "smolin", "nlwe-default", "swap01")
GATES = {"I": I2, "X": SIGMA_X, "Y": SIGMA_Y, "Z": SIGMA_Z}
SINGLE_STATES = {"0": lambda: ket(2, 0), "1": lambda: ket(2, 1), "+": plus_state}
# 与标准 ICS 幺正对应的循环移位指数
ICS_POWERS = {2: [0, 1], 3: [0, 1, 2], 4: [0, 2, 1, 3]}


@dataclass
class ScenarioConfig:
    """一次运行的场景描述"""

    protocol: str
    input: Any = None
    preset: Optional[str] = None
    mode: str = "exhaustive"
    seed: Optional[int] = None
    m: int = 2
    d: int = 2
    direction: str = "forward"
    channel: Optional[str] = None
    u1: str = "I"
    u2: str = "X"
    psi: str = "0"
    phi: str = "0"
    powers: Optional[List[int]] = None
    basis: str = "standard"
    spacetime: Optional[Dict[str, Any]] = None
    geometries: Optional[List[Dict[str, Any]]] = None
    alice_times: Optional[List[float]] = None
    tolerance: float = TOLERANCE

    def __post_init__(self):
        if self.protocol not in PROTOCOLS:
            raise ConfigError(f"unknown protocol {self.protocol!r}; expected one of {', '.join(PROTOCOLS)}")
        if self.input is not None and self.preset is not None:
            raise ConfigError("give exactly one input source: input or preset")
        if self.preset is not None and self.preset not in PRESETS:
            raise ConfigError(f"unknown preset {self.preset!r}; expected one of {', '.join(PRESETS)}")
        if self.mode not in ("exhaustive", "sample"):
            raise ConfigError(f"mode must be exhaustive or sample, got {self.mode!r}")
        if self.mode == "sample" and self.seed is None:
            raise ConfigError("mode sample requires a seed")
        if self.direction not in ("forward", "backward"):
            raise ConfigError(f"direction must be forward or backward, got {self.direction!r}")
        if self.basis not in ("standard", "fourier"):
            raise ConfigError(f"basis must be standard or fourier, got {self.basis!r}")
        if self.seed is not None and not 0 <= int(self.seed) < 2 ** 64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.protocol in ("teleport", "backteleport", "roundtrip") and self.m not in (2, 3, 4):
            raise ConfigError(f"teleportation supports m = 2, 3 or 4, got {self.m}")

    @classmethod
    def from_dict(cls, data: ConfigDict) -> "ScenarioConfig":
        """从合并后的配置构造，忽略与场景无关的键"""
        known = set(cls.__dataclass_fields__)
        try:
            return cls(**{k: v for k, v in data.items() if k in known})
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Malformed scenario: {e}")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class Outcome:
    """协议分发的结果：报告内容、检查项、输入摘要、可选的分支表"""

    results: Dict[str, Any]
    checks: Dict[str, Any]
    input_digest: Optional[str] = None
    table: Optional[ProtocolResult] = field(default=None, repr=False)


def _seed(config: ScenarioConfig) -> int:
    # 未给种子时随机输入固定取 0，保证报告可复现
    return 0 if config.seed is None else int(config.seed)


def resolve_state(config: ScenarioConfig, dims: Tuple[int, ...]) -> PureState:
    """
    按场景解析输入纯态

    Raises:
        ConfigError: 输入来源无效或维度不符
    """
    try:
        if config.preset in ("B1", "B2", "B3", "B4"):
            state = bell_state(int(config.preset[1]))
        elif config.preset == "swap01":
            state = PureState.basis_state((2, 2), (0, 1))
        elif config.preset is not None:
            raise ConfigError(f"preset {config.preset!r} does not name a state")
        elif config.input is None or config.input == "random":
            state = random_state(dims, _seed(config))
        elif isinstance(config.input, dict) and "file" in config.input:
            state = load_state(config.input["file"])
        elif isinstance(config.input, dict):
            state = state_from_dict(config.input)
        elif isinstance(config.input, str):
            state = load_state(config.input)
        else:
            raise ConfigError(f"unsupported input {config.input!r}")
    except ConfigError:
        raise
    except ICausalError as e:
        raise ConfigError(f"invalid input state: {e}")
    if state.dims != tuple(dims):
        raise ConfigError(f"input dims {state.dims} do not match the expected {tuple(dims)}")
    return state


def resolve_channel(config: ScenarioConfig, dim: int) -> KrausChannel:
    name = config.channel or ("swap" if config.preset == "swap01" else "random")
    if name == "identity":
        return KrausChannel(dim, dim, (np.eye(dim),))
    if name == "swap":
        if dim != 4:
            raise ConfigError("the swap channel needs dims (2, 2)")
        return KrausChannel.from_unitary(SWAP)
    if name == "random":
        return random_channel(dim, 3, _seed(config) + 1)
    try:
        return load_channel(name)
    except ICausalError as e:
        raise ConfigError(f"invalid channel {name!r}: {e}")


def _protocol_outcome(config: ScenarioConfig, result: ProtocolResult, input_digest: Optional[str],
                      extra_checks: Optional[Dict[str, Any]] = None) -> Outcome:
    checks = protocol_checks(result, config.tolerance)
    checks.update(extra_checks or {})
    shown = result.sample(int(config.seed)) if config.mode == "sample" else result
    return Outcome(shown.to_dict(), checks, input_digest, shown)


def _run_teleport(config: ScenarioConfig) -> Outcome:
    state = resolve_state(config, (config.m, config.d))
    if config.protocol == "roundtrip":
        result = roundtrip(state, config.m)
    else:
        direction = "backward" if config.protocol == "backteleport" else config.direction
        result = teleport_mics(state, config.m, direction)
    n = (config.m * config.m) ** (2 if config.protocol == "roundtrip" else 1)
    per_branch = all(abs(b.probability - 1.0 / n) <= config.tolerance for b in result.branches)
    regenerated = all(b.extra.get("mass_regenerated", True) for b in result.live_branches)
    return _protocol_outcome(config, result, digest(state.amps), {
        "uniform_outcomes": per_branch,
        "mass_regenerated": regenerated,
    })


def _run_channel(config: ScenarioConfig) -> Outcome:
    state = resolve_state(config, (2, config.d))
    rho = state.density()
    channel = resolve_channel(config, rho.dim)
    result = channel_result(rho, channel)
    return _protocol_outcome(config, result, digest(state.amps), {
        "trace_distance_ok": bool(result.extra["trace_distance"] < config.tolerance),
    })


def resolve_gate(name: str) -> Unitary:
    """门名 I/X/Y/Z，或幺正 JSON 文件路径"""
    if name in GATES:
        return GATES[name]
    if name.endswith(".json"):
        return load_unitary(name)
    raise ConfigError(f"unknown gate {name!r}")


def _run_entangle(config: ScenarioConfig) -> Outcome:
    u1, u2 = resolve_gate(config.u1), resolve_gate(config.u2)
    try:
        psi, phi = SINGLE_STATES[config.psi](), SINGLE_STATES[config.phi]()
    except KeyError as e:
        raise ConfigError(f"unknown state name {e}")
    result = entangle_result(u1, u2, psi, phi)
    return _protocol_outcome(config, result, digest(np.kron(psi.amps, phi.amps)))


def _run_bell(config: ScenarioConfig) -> Outcome:
    preset = config.preset or "B1"
    if preset not in ("B1", "B2", "B3", "B4"):
        raise ConfigError(f"bell needs a preset B1..B4, got {preset!r}")
    secret = int(preset[1])
    result = bell_branches(secret)
    charlie = {b.outcomes[0] for b in result.live_branches}
    return _protocol_outcome(config, result, digest(bell_state(secret).amps), {
        "identified_all": all(b.extra["identified"] == secret for b in result.live_branches),
        "charlie_deterministic": len(charlie) == 1,
    })


def _run_smolin(config: ScenarioConfig) -> Outcome:
    result = unlock_smolin()
    checks = {f"ppt_{cut}": ok for cut, ok in result.extra["ppt"].items()}
    checks["identified_all"] = result.extra["identified_all"]
    checks["unlocked_ebit"] = bool(abs(result.extra["ebits"] - 1.0) <= config.tolerance)
    return _protocol_outcome(config, result, digest(smolin_density().mat), checks)


def _run_nlwe(config: ScenarioConfig) -> Outcome:
    path = None
    if isinstance(config.input, str) and config.input != "random":
        path = config.input
    elif isinstance(config.input, dict) and "file" in config.input:
        path = config.input["file"]
    corpus = load_corpus(path)
    result = nlwe_result(corpus)
    vectors = np.concatenate([s.amps for s in corpus.states])
    return _protocol_outcome(config, result, digest(vectors), {
        "orthogonality_preserved": bool(result.extra["gram_deviation_after"] <= config.tolerance),
        "discrimination_success": bool(abs(result.extra["success_probability"] - 1.0) <= config.tolerance),
    })


def _run_search(config: ScenarioConfig) -> Outcome:
    m = config.m
    powers = config.powers if config.powers is not None else ICS_POWERS.get(m, list(range(m)))
    unitaries = shift_unitaries(m, powers)
    basis = standard_mass_basis(m) if config.basis == "standard" else fourier_mass_basis(m)
    found = search_corrections(m, unitaries, basis, config.d)
    results: Dict[str, Any] = {"powers": list(powers), "basis": config.basis, **found.to_dict()}
    checks: Dict[str, Any] = {"found": found.found}
    table = None
    if found.found:
        # 用找到的修正表实际传送一次
        state = resolve_state(config, (m, config.d))
        table = teleport_mics(state, m, "forward", found.table, basis, unitaries)
        checks.update(protocol_checks(table, config.tolerance))
        results["verification"] = table.to_dict()
        if m in ICS_POWERS and config.basis == "standard" and list(powers) == ICS_POWERS[m]:
            checks["matches_published_table"] = found.table.matches(correction_table(m, "forward"))
    return Outcome(results, checks, None, table)


def _run_spacetime(config: ScenarioConfig) -> Outcome:
    block = {**DEFAULT_SPACETIME, **(config.spacetime or {})}
    cfg = SpacetimeConfig.from_dict(block)
    results: Dict[str, Any] = {"config": cfg.to_dict(), "schwarzschild_radius": cfg.schwarzschild_radius}
    try:
        threshold = tau_star_threshold(cfg)
    except DivergentThresholdError as e:
        log(f"Divergent threshold: {e}", level="warning")
        results["diagnostic"] = str(e)
        return Outcome(results, {"tau_star_finite": False})

    tau_star = float(block["tau_star"]) if block.get("tau_star") is not None else threshold
    if config.m >= 3 and not config.geometries:
        raise ConfigError(f"spacetime with m={config.m} needs per-order geometries")
    geometries = None
    if config.geometries:
        try:
            geometries = [
                Geometry(SpacetimeConfig.from_dict({**block, **g}), g.get("mass_near", "B"), g.get("label"))
                for g in config.geometries
            ]
        except (AttributeError, TypeError) as e:
            raise ConfigError(f"Malformed geometries: {e}")
    mics = validate_mics(cfg, tau_star, config.m, geometries, config.alice_times)

    verdicts = {}
    try:
        tilde = definite_future_threshold(tau_star, cfg)
    except PreconditionError as e:
        # 低于阈值时 τ̃ 无定义，报告照常输出
        log(f"No definite future: {e}", level="warning")
        tilde = None
    if tilde is not None:
        x = EventSpec("A", tau_star, "X")
        y = EventSpec("B", tilde, "Y'")
        verdicts = {near: classify_order(x, y, near, cfg) for near in ("A", "B")}

    closed = light_coordinate_time(cfg.R, cfg.R + cfg.h, cfg)
    quad = light_coordinate_time_quadrature(cfg.R, cfg.R + cfg.h, cfg)
    results.update({
        "tau_star_threshold": threshold,
        "tau_star": tau_star,
        "tau_tilde": tilde,
        "definite_order": {near: v.to_dict() for near, v in verdicts.items()} if verdicts else False,
        "mics": mics.to_dict(),
        "light_time": {"closed_form": closed, "quadrature": quad},
    })
    checks = {
        "tau_star_finite": True,
        "definite_order": bool(verdicts) and all(v.relation == "X_before_Y" for v in verdicts.values()),
        "mics_valid": mics.valid,
        "light_time_agrees": bool(abs(closed - quad) <= 1e-9 * abs(closed)),
    }
    return Outcome(results, checks)


DISPATCH: Dict[str, Callable[[ScenarioConfig], Outcome]] = {
    "teleport": _run_teleport,
    "backteleport": _run_teleport,
    "roundtrip": _run_teleport,
    "channel": _run_channel,
    "entangle": _run_entangle,
    "bell": _run_bell,
    "smolin": _run_smolin,
    "nlwe": _run_nlwe,
    "search": _run_search,
    "spacetime": _run_spacetime,
}


def run_scenario(config: ScenarioConfig) -> Report:
    """
    分发到对应协议并生成报告

    Raises:
        ConfigError: 场景格式错误
        ICausalError: 协议执行中的领域错误
    """
    log(f"Running scenario: {config.protocol}")
    started = time.perf_counter()
    outcome = DISPATCH[config.protocol](config)
    elapsed = time.perf_counter() - started
    report = Report(
        scenario=config.to_dict(),
        results=outcome.results,
        checks=outcome.checks,
        input_digest=outcome.input_digest,
        timing={"seconds": round(elapsed, 6)},
        branch_table=outcome.table,
    )
    return report


class ScenarioWorkflow:
    """场景工作流 - 运行、写出报告并给出退出码"""

    def __init__(self, exporter: Optional[BranchTableExporter] = None):
        self.exporter = exporter or BranchTableExporter()

    def execute(self, config: ConfigDict, out_path: Optional[str] = None,
                xlsx_path: Optional[str] = None) -> int:
        """
        执行一次场景

        Args:
            config: 合并后的配置（默认值 < 配置文件 < 命令行）
            out_path: 报告路径，为空时输出到标准输出
            xlsx_path: 可选的分支表导出路径

        Returns:
            0 全部检查通过，1 检查失败或领域错误，2 配置错误
        """
        try:
            scenario = ScenarioConfig.from_dict(config)
            report = run_scenario(scenario)
            write_report(report, out_path)
            if xlsx_path and report.branch_table is not None:
                self.exporter.export(report.branch_table, xlsx_path)
            if not report.passed:
                log(f"Checks failed: {', '.join(report.failed_checks)}", level="warning")
                return EXIT_CHECK_FAILED
            log(f"Scenario {scenario.protocol} passed")
            return EXIT_OK
        except ConfigError as e:
            log(f"Config error: {e}", level="error")
            return EXIT_USAGE
        except ICausalError as e:
            log(f"{type(e).__name__}: {e}", level="error")
            return EXIT_CHECK_FAILED
        except Exception:
            # 记录详细错误
            error_details = io.StringIO()
            traceback.print_exc(file=error_details)
            log(error_details.getvalue(), level="error")
            return EXIT_CHECK_FAILED
