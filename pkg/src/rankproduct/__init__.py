"""Dynamic 2D point set reporting extreme products of ranks."""

from __future__ import annotations

from .config import Config
from .errors import (
    DegenerateSiteError,
    DuplicateElementError,
    ElementNotFoundError,
    RankProductError,
    RankRangeError,
    StaleCellError,
)

__version__ = "0.1.0"

__all__ = [
    "Config",
    "DegenerateSiteError",
    "DuplicateElementError",
    "DynamicRankProduct",
    "ElementNotFoundError",
    "RankProductError",
    "RankRangeError",
    "StaleCellError",
    "__version__",
]


def __getattr__(name: str):
    # DynamicRankProduct pulls in the whole structure; import lazily so
    # light-weight uses (errors, config) stay cheap.
    if name == "DynamicRankProduct":
        from .dynamic import DynamicRankProduct

        return DynamicRankProduct
    raise AttributeError(name)
