"""Exception types shared across the package.

Both errors mean "the computation was cut off", not "the answer is wrong":
callers that see them should raise a cap, loosen a tolerance, or shrink the
request.
"""

from __future__ import annotations

__all__ = ["ResourceCapError", "ConvergenceError"]


class ResourceCapError(RuntimeError):
    """A computation would exceed a configured resource cap (lines, terms, nodes)."""


class ConvergenceError(RuntimeError):
    """An iterative approximation failed to reach its tolerance within its budget."""
