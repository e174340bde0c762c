"""Python bindings for the cycleprefix C++ library."""

from ._core import Error, Network, run_cli

__all__ = ["Error", "Network", "run_cli"]
