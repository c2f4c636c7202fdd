"""XLSX export of protocol branch tables."""

from typing import List

from openpyxl import Workbook
from openpyxl.styles import Alignment, Font, PatternFill
from openpyxl.utils import get_column_letter

from ...core.errors import ReportError
from ...utils.logging import log
from ..protocols import ProtocolResult

HEADER = ["outcomes", "probability", "fidelity", "correction"]


def branch_rows(result: ProtocolResult) -> List[List[object]]:
    """表头 + 每个分支一行"""
    rows: List[List[object]] = [list(HEADER)]
    for b in result.branches:
        rows.append([
            ", ".join(b.outcomes),
            round(b.probability, 15),
            "null" if b.fidelity is None else round(b.fidelity, 15),
            b.correction,
        ])
    return rows


class BranchTableExporter:
    """分支表导出器 - 生成 XLSX 文件"""

    @staticmethod
    def export(result: ProtocolResult, output_path: str) -> str:
        """
        把协议结果的分支表写入 XLSX

        Args:
            result: 协议结果
            output_path: 输出文件路径

        Returns:
            输出文件路径

        Raises:
            ReportError: 写入失败
        """
        try:
            wb = Workbook()
            ws = wb.active
            ws.title = result.protocol[:31] or "branches"

            rows = branch_rows(result)
            header_fill = PatternFill(start_color="D3D3D3", end_color="D3D3D3", fill_type="solid")
            for row_idx, row_data in enumerate(rows, start=1):
                for col_idx, value in enumerate(row_data, start=1):
                    cell = ws.cell(row=row_idx, column=col_idx, value=value)
                    # 第一行应用表头样式
                    if row_idx == 1:
                        cell.fill = header_fill
                        cell.font = Font(bold=True)
                    cell.alignment = Alignment(horizontal="center", vertical="center")

            # 自动调整列宽（最小10，最大50）
            for col_idx in range(1, len(HEADER) + 1):
                width = max(len(str(ws.cell(row=r, column=col_idx).value or "")) for r in range(1, len(rows) + 1))
                ws.column_dimensions[get_column_letter(col_idx)].width = min(max(width + 2, 10), 50)

            wb.save(output_path)
            log(f"Successfully generated XLSX: {output_path}")
            return output_path
        except Exception as e:
            log(f"Failed to generate XLSX: {e}", level="error")
            raise ReportError(f"生成 XLSX 文件失败: {e}")
