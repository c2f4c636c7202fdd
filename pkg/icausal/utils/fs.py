"""File system utilities."""

import os
import pathlib
import re
from datetime import datetime


def ensure_dir(path: str) -> None:
    """确保目录存在"""
    pathlib.Path(path).mkdir(parents=True, exist_ok=True)


def safe_stem(name: str, max_length: int = 64) -> str:
    """把场景名变成可用的文件名片段"""
    stem = re.sub(r"[^\w.-]+", "_", name).strip("._")
    return stem[:max_length] or "report"


def generate_output_path(output_dir: str, scenario_name: str, ext: str = "json") -> str:
    """
    为场景报告生成不冲突的输出路径

    形如 <场景>_<时间戳>.json，同一秒内重复时追加序号。

    Args:
        output_dir: 输出目录，不存在时创建
        scenario_name: 场景名（协议名）
        ext: 文件扩展名

    Returns:
        完整路径
    """
    ensure_dir(output_dir)
    base = f"{safe_stem(scenario_name)}_{datetime.now().strftime('%Y%m%d_%H%M%S')}"
    path = os.path.join(output_dir, f"{base}.{ext}")
    n = 1
    while os.path.exists(path):
        path = os.path.join(output_dir, f"{base}_{n}.{ext}")
        n += 1
    return path
