"""Exact geometric engines for extremal products over fixed point sets.

A cell of the dynamic structure freezes its members' global ranks at
build time and afterwards answers "which member minimises (or maximises)
(x - a)(y - b)" for integer offset pairs (a, b).  The machinery lives in
three layers:

- :mod:`.lifting`: the product-to-linear-function reduction, bisector
  lines, and the convex-hull / maximal-point filters.
- :mod:`.envelope`: exact rational primitives, randomized incremental
  diagram construction, and the point-location indexes.
- :mod:`.engines`: the query-facing engine objects.
"""

from .engines import MaxEngine, MinEngine, ScanEngine, build_max_engine, build_min_engine
from .lifting import LiftedPoint, eval_product, lift

__all__ = [
    "LiftedPoint",
    "MaxEngine",
    "MinEngine",
    "ScanEngine",
    "build_max_engine",
    "build_min_engine",
    "eval_product",
    "lift",
]
