"""JSON report assembly with deterministic serialization."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ...core.constants import SCHEMA_VERSION, TOLERANCE
from ...core.errors import ReportError
from ...core.types import CheckMap
from ...utils.logging import log
from ...utils.serialization import to_json
from ..protocols import ProtocolResult


@dataclass
class Report:
    """一次场景运行的报告"""

    scenario: Dict[str, Any]
    results: Dict[str, Any]
    checks: CheckMap = field(default_factory=dict)
    input_digest: Optional[str] = None
    timing: Dict[str, float] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION
    branch_table: Optional[ProtocolResult] = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        """所有布尔检查项均为 True"""
        return all(v for v in self.checks.values() if isinstance(v, bool))

    @property
    def failed_checks(self) -> list:
        return [k for k, v in self.checks.items() if isinstance(v, bool) and not v]

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema_version": self.schema_version,
            "scenario": self.scenario,
            "input_digest": self.input_digest,
            "checks": self.checks,
            "results": self.results,
        }
        if include_timing:
            data["timing"] = self.timing
        return data

    def to_json(self, include_timing: bool = True) -> str:
        return to_json(self.to_dict(include_timing))


def protocol_checks(result: ProtocolResult, tol: float = TOLERANCE) -> CheckMap:
    """
    协议运行的标准检查项

    Returns:
        min_branch_fidelity 与 probability_sum 数值，以及对应的布尔判定
    """
    fidelity = result.min_branch_fidelity
    total = result.probability_sum
    return {
        "min_branch_fidelity": round(fidelity, 15),
        "probability_sum": round(total, 15),
        "fidelity_ok": bool(fidelity >= 1.0 - tol),
        "probability_ok": bool(abs(total - 1.0) <= tol),
    }


def write_report(report: Report, path: Optional[str]) -> None:
    """
    写出报告；path 为空时打印到标准输出

    Raises:
        ReportError: 写文件失败
    """
    text = report.to_json()
    if not path:
        print(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
            f.write("\n")
        log(f"Report written to: {path}")
    except OSError as e:
        raise ReportError(f"Cannot write report {path}: {e}")
