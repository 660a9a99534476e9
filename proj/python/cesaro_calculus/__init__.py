"""Hausdorff operators, the Cesaro operator and its functional calculus."""

from ._core import *  # noqa: F401,F403
from ._core import CesaroError, Domain, SymbolSource

__version__ = "0.1.0"
