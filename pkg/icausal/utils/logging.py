"""Unified logging functionality."""

import logging
import sys

from ..config.paths import get_log_path

LOGGER_NAME = "icausal"
_FORMAT = "[%(asctime)s] %(message)s"
_DATEFMT = "%Y-%m-%d %H:%M:%S"

logger = logging.getLogger(LOGGER_NAME)
logger.addHandler(logging.NullHandler())


def configure_logging(level: str = "WARNING", to_file: bool = False) -> None:
    """安装 stderr 处理器，必要时追加文件处理器"""
    logger.setLevel(logging.DEBUG)
    for handler in list(logger.handlers):
        if not isinstance(handler, logging.NullHandler):
            logger.removeHandler(handler)
            handler.close()

    formatter = logging.Formatter(_FORMAT, datefmt=_DATEFMT)
    stream = logging.StreamHandler(sys.stderr)
    stream.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
    stream.setFormatter(formatter)
    logger.addHandler(stream)

    if to_file:
        try:
            file_handler = logging.FileHandler(get_log_path(), encoding="utf-8")
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except Exception:
            # 日志文件不可写时静默处理，避免递归错误
            pass


def log(message: str, level: str = "info") -> None:
    """记录日志"""
    try:
        logger.log(getattr(logging, level.upper(), logging.INFO), message)
    except Exception:
        pass
