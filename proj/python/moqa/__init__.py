"""Measure-only quantum finite automata and the languages they recognize."""

from ._moqa import *  # noqa: F401,F403
from ._moqa import __doc__  # noqa: F401

__version__ = "0.1.0"
