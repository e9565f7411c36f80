"""Speed-limit bounds for open quantum systems coupled to thermal baths.

Thin wrapper over the compiled extension; all computations live in C++.
"""

from qslbath._core import *  # noqa: F401,F403
from qslbath._core import __version__  # noqa: F401
