"""Scenario reports: JSON assembly and XLSX branch tables."""

from .json_report import Report, protocol_checks, write_report
from .xlsx import BranchTableExporter, branch_rows

__all__ = ["Report", "protocol_checks", "write_report", "BranchTableExporter", "branch_rows"]
