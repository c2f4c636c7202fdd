"""icausal - protocols over indefinite causal structures, simulated to machine precision."""

__version__ = "0.1.0"
__app_name__ = "icausal"
