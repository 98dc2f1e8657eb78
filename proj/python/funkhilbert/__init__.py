"""Funk and Hilbert metrics on convex bodies in Euclidean, spherical and hyperbolic space."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
