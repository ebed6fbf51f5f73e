"""Skew Schur expansions, supports, and Schur-positivity posets."""

from ._schurkit import *  # noqa: F401,F403
from ._schurkit import __doc__  # noqa: F401
