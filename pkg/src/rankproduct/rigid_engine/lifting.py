"""Lifting rank pairs to a product-to-linear reduction.

A point with positive ranks (x, y) is stored together with z = x * y.
For an offset pair (a, b) the shifted product expands to

    (x - a)(y - b) = a*b + (z - a*y - b*x),

so once the common a*b term is dropped, comparing shifted products
between points reduces to comparing values of the linear function
z - a*y - b*x.  Everything downstream (bisectors, envelopes, the point
location indexes) works with that linear form and exact integers.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from ..config import COORD_LIMIT
from ..errors import DegenerateSiteError, RankRangeError


class LiftedPoint(NamedTuple):
    x: int
    y: int
    z: int
    ident: int


def lift(x: int, y: int, ident: int) -> LiftedPoint:
    """Attach the product coordinate to a rank pair.

    Ranks must be positive and below the supported coordinate limit;
    anything else is a caller bug and is rejected loudly.
    """
    if not (1 <= x < COORD_LIMIT and 1 <= y < COORD_LIMIT):
        raise RankRangeError(f"rank pair ({x}, {y}) outside [1, {COORD_LIMIT})")
    return LiftedPoint(x, y, x * y, ident)


def linear_part(p: LiftedPoint, a: int, b: int) -> int:
    # z - a*y - b*x; offset by the constant a*b this is the shifted product.
    return p.z - a * p.y - b * p.x


def eval_product(p: LiftedPoint, a: int, b: int) -> int:
    """Shifted product (x - a)(y - b), computed through the linear form.

    Offsets may be any integers in the supported range, including ones
    that place the point outside the positive quadrant; the identity
    holds regardless.
    """
    if not (-COORD_LIMIT < a < COORD_LIMIT and -COORD_LIMIT < b < COORD_LIMIT):
        raise RankRangeError(f"offset pair ({a}, {b}) outside supported range")
    return a * b + linear_part(p, a, b)


class Bisector(NamedTuple):
    """Locus of offset pairs where two lifted points tie.

    The line A*a + B*b = C with A = y_i - y_j, B = x_i - x_j and
    C = z_i - z_j.  It always passes through the two integer corner
    points (x_i, y_j) and (x_j, y_i) of the sites' bounding box, which
    are returned alongside the coefficients.
    """

    a_coef: int
    b_coef: int
    rhs: int
    corner1: tuple[int, int]
    corner2: tuple[int, int]


def bisector(p: LiftedPoint, q: LiftedPoint) -> Bisector:
    """Tie line of two sites; rejects pairs sharing a coordinate.

    A shared x or y makes the line vertical or horizontal in offset
    space and never arises between distinct rank pairs, so it is treated
    as data corruption.
    """
    a_coef = p.y - q.y
    b_coef = p.x - q.x
    if a_coef == 0 or b_coef == 0:
        raise DegenerateSiteError(
            f"sites ({p.x}, {p.y}) and ({q.x}, {q.y}) share a coordinate"
        )
    return Bisector(a_coef, b_coef, p.z - q.z, (p.x, q.y), (q.x, p.y))


def _cross(o: LiftedPoint, u: LiftedPoint, v: LiftedPoint) -> int:
    return (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x)


def hull_filter_min(points: Sequence[LiftedPoint]) -> list[LiftedPoint]:
    """Strict convex hull vertices, as a CCW cycle from the leftmost point.

    Input must be sorted by x with pairwise distinct x and y.  Points
    interior to the hull or interior to a hull edge can never attain the
    minimum shifted product for offsets keeping all coordinates positive,
    so only the returned cycle matters for minimum queries.  Collinear
    edge-interior points are dropped (strict turns only).
    """
    m = len(points)
    if m <= 2:
        return list(points)
    lower: list[LiftedPoint] = []
    for p in points:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[LiftedPoint] = []
    for p in reversed(points):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    # Each chain ends where the other begins; drop the duplicated endpoints.
    return lower[:-1] + upper[:-1]


def filter_maximal(points: Sequence[LiftedPoint]) -> list[LiftedPoint]:
    """Points not strictly dominated in both coordinates, in x order.

    Input must be sorted by x with pairwise distinct x and y.  The
    result is the descending staircase: x increasing, y decreasing.
    Only these can attain the maximum shifted product for offsets
    keeping all coordinates positive.
    """
    kept: list[LiftedPoint] = []
    best_y = None
    for p in reversed(points):
        if best_y is None or p.y > best_y:
            kept.append(p)
            best_y = p.y
    kept.reverse()
    return kept
