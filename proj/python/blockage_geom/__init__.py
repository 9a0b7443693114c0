"""Python bindings for the blockage-geom C++ core."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
