"""Linear patterns on numerical semigroups."""

from ._nsgp import *  # noqa: F401,F403
from ._nsgp import NsgpError, NumericalSemigroup, Pattern

__all__ = [name for name in dir() if not name.startswith("_")]
