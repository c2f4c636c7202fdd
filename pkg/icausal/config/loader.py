"""Configuration loading and saving."""

import copy
import json
import os
from typing import Optional

from .defaults import DEFAULT_CONFIG
from .paths import ensure_user_data_dir, get_config_path
from ..core.constants import TOLERANCE_ENV
from ..core.types import ConfigDict
from ..core.errors import ConfigError
from ..utils.logging import log


class ConfigLoader:
    """配置加载器"""

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path or get_config_path()
        self.explicit = config_path is not None

    def load(self) -> ConfigDict:
        """加载配置文件，合并默认值并应用环境变量覆盖"""
        config = copy.deepcopy(DEFAULT_CONFIG)

        if os.path.exists(self.config_path):
            try:
                with open(self.config_path, "r", encoding="utf-8") as f:
                    user_config = json.load(f)
                if not isinstance(user_config, dict):
                    raise ValueError("top-level JSON value must be an object")
                merge_config(config, user_config)
            except Exception as e:
                log(f"Load config error: {e}", level="error")
                raise ConfigError(f"Failed to load config: {e}")
        elif self.explicit:
            raise ConfigError(f"Config file not found: {self.config_path}")

        # 测试专用的容差覆盖
        override = os.environ.get(TOLERANCE_ENV)
        if override:
            try:
                config["tolerance"] = float(override)
            except ValueError:
                raise ConfigError(f"{TOLERANCE_ENV} must be a float, got {override!r}")

        config["output_dir"] = os.path.expanduser(os.path.expandvars(config["output_dir"]))
        return config

    def save(self, config: ConfigDict) -> None:
        """保存配置文件"""
        try:
            if not self.explicit:
                ensure_user_data_dir()
            with open(self.config_path, "w", encoding="utf-8") as f:
                json.dump(config, f, ensure_ascii=False, indent=2)
        except Exception as e:
            log(f"Save config error: {e}", level="error")
            raise ConfigError(f"Failed to save config: {e}")


def merge_config(base: ConfigDict, overrides: ConfigDict) -> ConfigDict:
    """将 overrides 合并到 base，嵌套字典逐键合并"""
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            merge_config(base[key], value)
        else:
            base[key] = value
    return base
