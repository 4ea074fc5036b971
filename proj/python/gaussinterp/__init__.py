"""Gaussian interpolation of bandlimited functions on Riesz-basis node sets."""

from ._core import *  # noqa: F401,F403
from ._core import Error, __doc__  # noqa: F401
