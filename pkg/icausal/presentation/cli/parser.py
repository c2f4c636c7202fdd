"""Argument parser for the icausal subcommands."""

import argparse
from typing import Any, Dict, List, Optional

from ... import __app_name__, __version__
from ...core.errors import ConfigError

SCENARIO_COMMANDS = {
    "teleport": "teleport Alice's factor to Bob through an m-ICS",
    "backteleport": "teleport a (B', B) state back to (A, B)",
    "roundtrip": "teleport forward then back and check every path",
    "channel": "implement a channel on a shared (A, B) state locally",
    "entangle": "generate entanglement from two local states",
    "bell": "discriminate a Bell state with local measurements",
    "smolin": "unlock the Smolin bound-entangled state",
    "nlwe": "reduce a tripartite NLWE set to a bipartite one",
    "search": "search corrections for a cyclic-shift ladder strategy",
    "spacetime": "validate causal orders in Schwarzschild geometry",
}


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="scenario/config JSON file (flags override it)")
    sub.add_argument("--out", help="write the JSON report here instead of stdout")
    sub.add_argument("--save", action="store_true", help="write the report into output_dir under a unique name")
    sub.add_argument("--xlsx", help="also export the branch table to this XLSX file")
    sub.add_argument("--seed", type=int, help="64-bit seed for random inputs and sample mode")
    sub.add_argument("--mode", choices=["exhaustive", "sample"])
    sub.add_argument("--m", type=int, choices=[2, 3, 4, 5, 6], help="number of superposed causal orders")
    sub.add_argument("--d", type=int, help="dimension of Bob's other subsystem")
    sub.add_argument("--preset", help="named input: B1..B4, swap01, smolin, nlwe-default")
    sub.add_argument("--input", help="input state JSON file, or 'random'")
    sub.add_argument("--direction", choices=["forward", "backward"])
    sub.add_argument("--channel", help="identity, swap, random, or a channel JSON file")
    sub.add_argument("--powers", help="comma-separated shift powers for search, e.g. 0,2,1,3")
    sub.add_argument("--basis", choices=["standard", "fourier"])
    sub.add_argument("--M", dest="mass", type=float, help="spacetime mass")
    sub.add_argument("--tau-star", dest="tau_star", type=float, help="proper time of X and Y")
    sub.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=__app_name__,
        description="Simulator for quantum protocols on indefinite causal structures.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, help_text in SCENARIO_COMMANDS.items():
        _add_common(subparsers.add_parser(name, help=help_text))

    accept = subparsers.add_parser("accept", help="run the acceptance suite")
    accept.add_argument("filter", nargs="?", help="only criteria whose name starts with this prefix")
    accept.add_argument("--workers", type=int, help="worker threads")
    accept.add_argument("--config", help="config JSON file")
    accept.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def _parse_powers(text: str) -> List[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ConfigError(f"--powers must be comma-separated integers, got {text!r}")


def scenario_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """把命令行参数转换为场景配置覆盖项（只包含显式给出的参数）"""
    overrides: Dict[str, Any] = {"protocol": args.command}
    for key in ("seed", "mode", "m", "d", "preset", "direction", "channel", "basis"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    if args.input is not None:
        overrides["input"] = args.input
    if args.powers is not None:
        overrides["powers"] = _parse_powers(args.powers)
    spacetime: Dict[str, Optional[float]] = {}
    if args.mass is not None:
        spacetime["M"] = args.mass
    if args.tau_star is not None:
        spacetime["tau_star"] = args.tau_star
    if spacetime:
        overrides["spacetime"] = spacetime
    return overrides


def verbosity_level(count: int, default: str) -> str:
    if count >= 2:
        return "DEBUG"
    if count == 1:
        return "INFO"
    return default

