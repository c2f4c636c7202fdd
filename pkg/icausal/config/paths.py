"""Resource and file path management."""

import os
import sys


PACKAGE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def resource_path(relative_path: str) -> str:
    """随包分发的资源文件"""
    return os.path.join(PACKAGE_DIR, "resources", relative_path)


def get_user_data_dir() -> str:
    """获取用户数据目录（跨平台）"""
    if sys.platform == "win32":
        return os.path.join(os.environ.get("APPDATA", os.path.expanduser("~")), "icausal")
    return os.path.join(os.path.expanduser("~"), ".icausal")


def ensure_user_data_dir() -> str:
    """确保用户数据目录存在"""
    data_dir = get_user_data_dir()
    os.makedirs(data_dir, exist_ok=True)
    return data_dir


def get_config_path() -> str:
    """获取配置文件路径（不创建目录）"""
    return os.path.join(get_user_data_dir(), "config.json")


def get_log_path() -> str:
    """获取日志文件路径"""
    return os.path.join(ensure_user_data_dir(), "icausal.log")


def get_default_corpus_path() -> str:
    """默认 NLWE 态集（2⊗2⊗2 不可扩展乘积基）"""
    return resource_path("upb_shifts.json")
