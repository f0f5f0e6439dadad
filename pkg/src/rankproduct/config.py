"""Tunables shared across the package.

All randomness in the package flows from a single 64-bit seed so that
repeated runs over the same input produce identical structures, identical
query answers and identical telemetry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

# Supported universe: at most 2**30 - 1 live elements.  Ranks then fit in
# 31 bits and every intermediate the engines form (rank products, bisector
# coefficients, diagram vertex numerators) fits comfortably in Python ints.
MAX_ELEMENTS = 1 << 30

# Absolute bound accepted by eval_product for ranks and offsets.  Inputs
# beyond this are rejected rather than silently computed.
COORD_LIMIT = 1 << 31

# Worst-case predicate budget for an engine query is
# PREDICATE_DEPTH_C * log2(m) + PREDICATE_DEPTH_C, where m is the number
# of points the engine was built over.  The minimum engine meets this as a
# hard bound (slab search is two nested binary searches); the maximum
# engine meets it in expectation (history DAG descent).
PREDICATE_DEPTH_C = 16

# Cells with at most this many members answer queries by direct scan
# instead of building diagrams.  A scan costs 2m - 1 predicate
# evaluations, and 2m - 1 <= PREDICATE_DEPTH_C * (log2(m) + 1) holds for
# every m up to and including this value (54 is the largest such m for
# c = 16), so scan engines satisfy the same hard depth bound.  Below ~50
# sites a scan is also simply faster than walking an exact-arithmetic
# diagram.
SCAN_ENGINE_MAX_SITES = 54

# Half-width of the clipping box in offset space.  Every diagram vertex is
# the intersection of two bisector lines whose coefficients are bounded by
# rank differences (< 2**31) and lifted-value differences (< 2**61), so
# vertex coordinates are rationals with magnitude well below 2**100.  The
# box therefore never clips real structure; it only makes all cells
# bounded polygons.
BOX_HALF_WIDTH = 1 << 100


def default_subset_target(n: int) -> int:
    """Ceiling of sqrt(n * log2(n)), clamped to at least 1."""
    if n <= 1:
        return 1
    return max(1, math.ceil(math.sqrt(n * math.log2(n))))


@dataclass
class Config:
    """Runtime configuration for DynamicRankProduct.

    seed drives every derived RNG (max-engine build order, treap
    priorities).  f_const, when set, replaces the sqrt(n log n) subset
    target with a constant; the tests use small constants to force
    frequent partition maintenance.  maintain_min / maintain_max disable
    engine upkeep for one side, halving rebuild work when only one query
    kind is needed.  debug_linear_engines swaps both engines for plain
    scans over the raw cell members, isolating geometry bugs from index
    bugs in differential runs.
    """

    seed: int = 0
    f_const: Optional[int] = None
    maintain_min: bool = True
    maintain_max: bool = True
    debug_linear_engines: bool = False
    # Cells up to this size use scan engines; 0 forces diagram engines
    # everywhere (slow, used by differential tests).
    scan_engine_max_sites: int = SCAN_ENGINE_MAX_SITES

    def subset_target(self, n: int) -> int:
        if self.f_const is not None:
            return max(1, self.f_const)
        return default_subset_target(n)


def derive_seed(master: int, *salts: int) -> int:
    """Deterministic 63-bit stream split (splitmix-style, no hashing)."""
    acc = (master * 0x9E3779B97F4A7C15 + 0x2545F4914F6CDD1D) & ((1 << 64) - 1)
    for salt in salts:
        acc ^= (salt & ((1 << 64) - 1)) * 0xBF58476D1CE4E5B9 & ((1 << 64) - 1)
        acc = (acc ^ (acc >> 31)) * 0x94D049BB133111EB & ((1 << 64) - 1)
    return acc >> 1
