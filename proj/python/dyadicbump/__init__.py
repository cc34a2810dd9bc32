"""Numerical checks for two-weight bump inequalities on dyadic model domains."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
