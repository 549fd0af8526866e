"""Budgeted convex optimization with interval-valued evaluations.

The compiled core exposes the optimizer, the simulated environments, the
protocol runner with regret accounting, and the explicit regret bound.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
