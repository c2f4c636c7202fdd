"""Command-line front end."""

from .parser import build_parser, scenario_overrides, verbosity_level

__all__ = ["build_parser", "scenario_overrides", "verbosity_level"]
