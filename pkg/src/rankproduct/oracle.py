"""Slow reference implementations.

Everything here recomputes answers from scratch using sorting and
exhaustive scans.  The fast structures are tested against these, so this
module must stay independent of them: no treaps, no partitions, no
geometric indexes.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

ElementRow = Tuple[int, object, object]  # (ident, xkey, ykey)
Site = Tuple[int, int, int]  # (x, y, ident)


def rank_pairs(elements: Iterable[ElementRow]) -> Dict[int, Tuple[int, int]]:
    """Current 1-based ranks of every element in both orders."""
    rows = list(elements)
    by_x = sorted((xkey, ident) for ident, xkey, _ in rows)
    by_y = sorted((ykey, ident) for ident, _, ykey in rows)
    rank_x = {ident: r for r, (_, ident) in enumerate(by_x, start=1)}
    rank_y = {ident: r for r, (_, ident) in enumerate(by_y, start=1)}
    return {ident: (rank_x[ident], rank_y[ident]) for ident, _, _ in rows}


def extreme_element(
    elements: Iterable[ElementRow], want_max: bool = False
) -> Optional[Tuple[int, int]]:
    """(ident, product) of the element with the smallest (or largest)
    product of ranks; ties go to the smallest ident.  None when empty."""
    ranks = rank_pairs(elements)
    best: Optional[Tuple[int, int]] = None
    for ident in sorted(ranks):
        rx, ry = ranks[ident]
        product = rx * ry
        if best is None:
            best = (ident, product)
        elif want_max and product > best[1]:
            best = (ident, product)
        elif not want_max and product < best[1]:
            best = (ident, product)
    return best


def scan_best_site(
    sites: Iterable[Site], a: int, b: int, want_max: bool = False
) -> Optional[Tuple[int, int]]:
    """(ident, product) minimising or maximising (x - a) * (y - b) by
    direct scan; ties go to the smallest ident."""
    best: Optional[Tuple[int, int]] = None
    for x, y, ident in sorted(sites, key=lambda s: s[2]):
        product = (x - a) * (y - b)
        if best is None:
            best = (ident, product)
        elif want_max and product > best[1]:
            best = (ident, product)
        elif not want_max and product < best[1]:
            best = (ident, product)
    return best


def minimal_sites(sites: Sequence[Site]) -> List[Site]:
    """Sites with no other site strictly below-left of them."""
    out = []
    for x, y, ident in sites:
        if not any(ox < x and oy < y for ox, oy, oi in sites if oi != ident):
            out.append((x, y, ident))
    return out


def maximal_sites(sites: Sequence[Site]) -> List[Site]:
    """Sites with no other site strictly above-right of them."""
    out = []
    for x, y, ident in sites:
        if not any(ox > x and oy > y for ox, oy, oi in sites if oi != ident):
            out.append((x, y, ident))
    return out


def _orient(ox: int, oy: int, ax: int, ay: int, bx: int, by: int) -> int:
    cross = (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)
    return (cross > 0) - (cross < 0)


def _on_segment(px: int, py: int, ax: int, ay: int, bx: int, by: int) -> bool:
    if _orient(ax, ay, bx, by, px, py) != 0:
        return False
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def in_convex_hull(
    px: int, py: int, points: Sequence[Tuple[int, int]]
) -> bool:
    """Whether (px, py) lies in the convex hull of the given points
    (boundary counts).  Checked straight from the definition through
    Caratheodory: containment in some point, segment or triangle."""
    pts = list(points)
    for ax, ay in pts:
        if (px, py) == (ax, ay):
            return True
    m = len(pts)
    for i in range(m):
        for j in range(i + 1, m):
            if _on_segment(px, py, *pts[i], *pts[j]):
                return True
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                d1 = _orient(*pts[i], *pts[j], px, py)
                d2 = _orient(*pts[j], *pts[k], px, py)
                d3 = _orient(*pts[k], *pts[i], px, py)
                if d1 == d2 == d3 != 0:
                    return True
    return False


def strict_hull_vertices(points: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Points not contained in the hull of the remaining ones."""
    out = []
    for idx, p in enumerate(points):
        rest = [q for j, q in enumerate(points) if j != idx]
        if not in_convex_hull(p[0], p[1], rest):
            out.append(p)
    return out
