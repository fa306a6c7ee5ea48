"""Numerical spectral geometry on planar domains.

Thin wrapper over the C++ core; everything lives in ``weyl_lab._core``.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
