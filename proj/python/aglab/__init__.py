"""Finite AG-groupoid laboratory: tables, ideals, grade assignments."""

try:
    from ._aglab import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _aglab import *  # noqa: F401,F403  (build-tree layout)

__version__ = "0.1.0"
