"""Quantum invariants of framed links, 3-manifolds and 4-manifolds."""

from ._core import *  # noqa: F401,F403
from ._core import Diagram, Error

__all__ = [name for name in dir() if not name.startswith("_")]
