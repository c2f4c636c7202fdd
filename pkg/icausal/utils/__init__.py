"""Utility functions: logging, file paths, JSON encoding."""
