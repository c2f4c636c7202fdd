"""Application entry point and initialization."""

import sys
from typing import List, Optional

from .. import __version__
from ..config.loader import merge_config
from ..core.constants import EXIT_CHECK_FAILED, EXIT_USAGE
from ..core.errors import ConfigError
from ..presentation.cli import build_parser, scenario_overrides, verbosity_level
from ..utils.fs import generate_output_path
from ..utils.logging import configure_logging, log
from .wiring import Container


def main(argv: Optional[List[str]] = None) -> int:
    """
    应用程序主入口点

    Returns:
        退出码：0 通过，1 检查失败，2 用法或配置错误
    """
    args = build_parser().parse_args(argv)
    configure_logging("WARNING")
    try:
        # 1. 加载配置（默认值 < 配置文件）
        container = Container(args.config)
        config = container.load_config()
        configure_logging(verbosity_level(args.verbose, config["log_level"]), bool(config["log_to_file"]))
        log(f"icausal {__version__}: {args.command}", level="debug")

        # 2. 验收套件
        if args.command == "accept":
            workers = args.workers or int(config["workers"])
            return container.get_acceptance_workflow().execute(args.filter, workers, float(config["tolerance"]))

        # 3. 单个场景（命令行参数优先）
        merged = merge_config(config, scenario_overrides(args))
        out_path = args.out
        if out_path is None and args.save:
            out_path = generate_output_path(config["output_dir"], args.command)
        return container.get_scenario_workflow().execute(merged, out_path, args.xlsx)

    except ConfigError as e:
        log(f"Config error: {e}", level="error")
        return EXIT_USAGE
    except KeyboardInterrupt:
        log("Interrupted by user", level="warning")
        return EXIT_CHECK_FAILED
    except Exception as e:
        log(f"Fatal error: {e}", level="error")
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
