"""Query-facing engines answering extremal shifted products exactly.

An engine freezes a set of lifted points and afterwards answers, for
integer offsets (a, b) keeping every member's adjusted coordinates
positive, which member extremizes (x - a)(y - b).  Ties are broken
toward the smallest ident, identically to a brute-force scan.

The minimum engine only ever needs the strict convex hull vertices of
its points and locates queries in a static slab index; the maximum
engine only needs the undominated staircase and walks a history DAG of
trap decompositions recorded during its randomized incremental build.
Corner queries that tie several cells at once resolve through a
precomputed smallest-ident map, which keeps the predicate budget hard
rather than proportional to the tie multiplicity.
"""

from __future__ import annotations

from typing import Sequence

from ..config import COORD_LIMIT
from ..errors import DegenerateSiteError, RankRangeError
from .envelope import (
    build_diagram,
    build_slab_index,
    line_side,
    slab_query,
    vertex_tie_map,
)
from .lifting import LiftedPoint, eval_product, filter_maximal, hull_filter_min


def _check_sites(points: Sequence[LiftedPoint]) -> list[LiftedPoint]:
    pts = list(points)
    if not pts:
        raise ValueError("an engine needs at least one point")
    if len({p.x for p in pts}) != len(pts) or len({p.y for p in pts}) != len(pts):
        raise DegenerateSiteError("engine points must have pairwise distinct coordinates")
    if any(pts[i].x >= pts[i + 1].x for i in range(len(pts) - 1)):
        raise ValueError("engine points must arrive sorted by x")
    return pts


class ScanEngine:
    """Plain scan over the members; exact, and fastest for small cells.

    A query spends one evaluation per member plus one comparison per
    member beyond the first: 2m - 1 predicates.
    """

    __slots__ = ("points", "want_max", "last_query_predicates")

    def __init__(self, points: Sequence[LiftedPoint], want_max: bool):
        self.points = list(points)
        if not self.points:
            raise ValueError("an engine needs at least one point")
        self.want_max = want_max
        self.last_query_predicates = 0

    def __len__(self) -> int:
        return len(self.points)

    def query(self, a: int, b: int) -> tuple[int, int]:
        if not (-COORD_LIMIT < a < COORD_LIMIT and -COORD_LIMIT < b < COORD_LIMIT):
            raise RankRangeError(f"offset pair ({a}, {b}) outside supported range")
        want_max = self.want_max
        best = best_id = None
        preds = 0
        ab = a * b
        for p in self.points:
            # eval_product inlined; the offsets were range-checked above
            v = ab + p.z - a * p.y - b * p.x
            preds += 1
            if best is None:
                best, best_id = v, p.ident
                continue
            preds += 1
            if (
                (v > best if want_max else v < best)
                or (v == best and p.ident < best_id)
            ):
                best, best_id = v, p.ident
        self.last_query_predicates = preds
        return best_id, best


class MinEngine:
    """Exact minimum-product engine with a hard per-query depth bound."""

    __slots__ = (
        "points_by_id",
        "size",
        "diagram",
        "slabs",
        "ties",
        "last_query_predicates",
    )

    def __init__(self, points: Sequence[LiftedPoint], seed: int = 0):
        pts = _check_sites(points)
        self.points_by_id = {p.ident: p for p in pts}
        self.size = len(pts)
        hull = hull_filter_min(pts)
        self.diagram = build_diagram(
            hull, sign=1, seed=seed, closed=True, with_traps=False
        )
        self.slabs = build_slab_index(self.diagram.cells)
        self.ties = vertex_tie_map(self.diagram.cells)
        self.last_query_predicates = 0

    def __len__(self) -> int:
        return self.size

    def query(self, a: int, b: int) -> tuple[int, int]:
        preds = 1
        winner = self.ties.get((a, b, 1))
        if winner is None:
            site, tied, spent = slab_query(self.slabs, a, b)
            preds += spent
            winner = site
            if tied is not None:
                preds += 1
                if tied < winner:
                    winner = tied
        self.last_query_predicates = preds
        return winner, eval_product(self.points_by_id[winner], a, b)


class MaxEngine:
    """Exact maximum-product engine; depth bound holds in expectation."""

    __slots__ = (
        "points_by_id",
        "size",
        "diagram",
        "ties",
        "last_query_predicates",
    )

    def __init__(self, points: Sequence[LiftedPoint], seed: int = 0):
        pts = _check_sites(points)
        self.points_by_id = {p.ident: p for p in pts}
        self.size = len(pts)
        stairs = filter_maximal(pts)
        self.diagram = build_diagram(
            stairs, sign=-1, seed=seed, closed=False, with_traps=True
        )
        self.ties = vertex_tie_map(self.diagram.cells)
        self.last_query_predicates = 0

    def __len__(self) -> int:
        return self.size

    @property
    def structural_work(self) -> int:
        return self.diagram.structural_work

    def query(self, a: int, b: int) -> tuple[int, int]:
        preds = 1
        winner = self.ties.get((a, b, 1))
        if winner is None:
            leaf, spent = self.diagram.locate_trap(a, b)
            preds += spent
            p = (a, b, 1)
            winner = leaf.site
            preds += 1
            if line_side(leaf.bot_line, p) == 0:
                if leaf.bot_label is not None and leaf.bot_label < winner:
                    winner = leaf.bot_label
            else:
                preds += 1
                if line_side(leaf.top_line, p) == 0:
                    if leaf.top_label is not None and leaf.top_label < winner:
                        winner = leaf.top_label
        self.last_query_predicates = preds
        return winner, eval_product(self.points_by_id[winner], a, b)


def build_min_engine(points: Sequence[LiftedPoint], seed: int = 0) -> MinEngine:
    return MinEngine(points, seed)


def build_max_engine(points: Sequence[LiftedPoint], seed: int = 0) -> MaxEngine:
    return MaxEngine(points, seed)
