"""Exception types raised by the rankproduct package."""

from __future__ import annotations


class RankProductError(Exception):
    """Base class for all package-specific errors."""


class DuplicateElementError(RankProductError, KeyError):
    """An element id was inserted twice."""

    def __str__(self) -> str:
        # KeyError would render just the repr of the id
        return f"element id {self.args[0]} is already present" if self.args else "duplicate element id"


class ElementNotFoundError(RankProductError, KeyError):
    """An operation referenced an element id that is not present."""

    def __str__(self) -> str:
        return f"no element with id {self.args[0]}" if self.args else "element not found"


class RankRangeError(RankProductError, ValueError):
    """An integer input falls outside the documented supported range."""


class StaleCellError(RankProductError, RuntimeError):
    """A cell marked dirty was queried before being rebuilt."""


class DegenerateSiteError(RankProductError, ValueError):
    """Two engine sites share an x or y coordinate, which engine
    preconditions exclude (ranks are distinct by construction)."""
