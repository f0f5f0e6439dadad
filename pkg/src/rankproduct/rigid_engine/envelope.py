"""Exact offset-space diagrams for extremal linear parts.

For a frozen set of lifted points, offset space (integer pairs (a, b))
splits into convex cells: the cell of a point is the region where its
linear part z - a*y - b*x is smallest (sign +1) or largest (sign -1)
among all points.  Cells are produced by randomized incremental
insertion along a precomputed adjacency order (hull cycle for minima,
staircase path for maxima): a preparatory pass deletes sites in random
order from a linked list and records a surviving list neighbor for
each, then sites are reinserted in reverse with the recorded neighbor's
cell as the flood seed.  Consecutive sites in the adjacency order have
adjacent cells in the diagram of every subset, which is what makes the
seeds valid; a fallback full scan covers the (never observed) case of a
seed that lost no area, and a counter exposes it.

All coordinates are homogeneous integer triples (px, py, w) with w > 0,
kept gcd-reduced, so every predicate is an exact integer sign.  The
diagram is clipped to a huge axis-aligned box; true diagram vertices
have coordinates far below the box scale, so clipping never hides a
vertex or an adjacency.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Iterator, Optional

from ..config import BOX_HALF_WIDTH
from .lifting import LiftedPoint

# Homogeneous point (px, py, w), w > 0, gcd-reduced.
HPoint = tuple[int, int, int]
# Line A*a + B*b = C, stored as (A, B, C).
Line = tuple[int, int, int]

_M = BOX_HALF_WIDTH


def make_hpoint(px: int, py: int, w: int) -> HPoint:
    if w < 0:
        px, py, w = -px, -py, -w
    g = gcd(gcd(abs(px), abs(py)), w)
    if g > 1:
        px //= g
        py //= g
        w //= g
    return (px, py, w)


def line_side(line: Line, p: HPoint) -> int:
    return line[0] * p[0] + line[1] * p[1] - line[2] * p[2]


def bisector_line(p: LiftedPoint, q: LiftedPoint) -> Line:
    # side > 0 exactly where p's linear part is strictly below q's.
    return (p.y - q.y, p.x - q.x, p.z - q.z)


def _line_through(p: HPoint, q: HPoint) -> Line:
    a = p[1] * q[2] - p[2] * q[1]
    b = p[2] * q[0] - p[0] * q[2]
    c = p[1] * q[0] - p[0] * q[1]
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    if g > 1:
        a //= g
        b //= g
        c //= g
    return (a, b, c)


def _edge_crossing(line: Line, u: HPoint, v: HPoint) -> HPoint:
    su = line_side(line, u)
    sv = line_side(line, v)
    return make_hpoint(
        sv * u[0] - su * v[0],
        sv * u[1] - su * v[1],
        sv * u[2] - su * v[2],
    )


def _box_polygon() -> tuple[list[HPoint], list[Optional[int]]]:
    verts = [(-_M, -_M, 1), (_M, -_M, 1), (_M, _M, 1), (-_M, _M, 1)]
    return verts, [None, None, None, None]


class Cell:
    """Convex CCW polygon of one site, with per-edge neighbor labels.

    labels[i] names the site whose cell borders the edge from verts[i]
    to verts[i + 1], or None for a box edge.  Consecutive collinear
    edges are legitimate: one geometric side can border several cells.
    """

    __slots__ = ("site", "verts", "labels", "traps")

    def __init__(self, site: int, verts: list[HPoint], labels: list[Optional[int]]):
        self.site = site
        self.verts = verts
        self.labels = labels
        self.traps: Optional[list[Trap]] = None


def clip_cell(
    verts: list[HPoint],
    labels: list[Optional[int]],
    line: Line,
    keep_sign: int,
    cut_label: Optional[int],
) -> tuple[list[HPoint], list[Optional[int]]]:
    """Part of a CCW cell with keep_sign * side >= 0.

    The freshly cut edge gets cut_label; surviving pieces keep theirs.
    Returns empty lists when nothing full-dimensional survives.
    """
    n = len(verts)
    sides = [keep_sign * line_side(line, v) for v in verts]
    if all(s >= 0 for s in sides):
        return list(verts), list(labels)
    out_v: list[HPoint] = []
    out_l: list[Optional[int]] = []
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        si, sj = sides[i], sides[j]
        if si >= 0:
            out_v.append(verts[i])
            out_l.append(labels[i])
            if sj < 0:
                if si > 0:
                    out_v.append(_edge_crossing(line, verts[i], verts[j]))
                    out_l.append(cut_label)
                else:
                    # the vertex sits on the line; the cut starts here
                    out_l[-1] = cut_label
        elif sj > 0:
            out_v.append(_edge_crossing(line, verts[i], verts[j]))
            out_l.append(labels[i])
        # si < 0, sj == 0: the edge only reaches the line at verts[j],
        # which the next iteration emits with its own label.
    m = len(out_v)
    if m >= 2:
        kept = [i for i in range(m) if out_v[i] != out_v[(i + 1) % m]]
        if len(kept) != m:
            out_v = [out_v[i] for i in kept]
            out_l = [out_l[i] for i in kept]
    if len(out_v) < 3:
        return [], []
    return out_v, out_l


# --- rational helpers for vertical-slab bookkeeping ---------------------


def _afrac(p: HPoint) -> tuple[int, int]:
    num, den = p[0], p[2]
    g = gcd(abs(num), den)
    if g > 1:
        num //= g
        den //= g
    return (num, den)


def _frac_cmp(f1: tuple[int, int], f2: tuple[int, int]) -> int:
    d = f1[0] * f2[1] - f2[0] * f1[1]
    return (d > 0) - (d < 0)


def _frac_cmp_int(f: tuple[int, int], a: int) -> int:
    d = f[0] - a * f[1]
    return (d > 0) - (d < 0)


def _b_cmp(p: HPoint, q: HPoint) -> int:
    d = p[1] * q[2] - q[1] * p[2]
    return (d > 0) - (d < 0)


# (a_start, a_end, line, label) with a_start < a_end.
_ChainEdge = tuple[tuple[int, int], tuple[int, int], Line, Optional[int]]


def _monotone_chains(
    verts: list[HPoint], labels: list[Optional[int]]
) -> tuple[list[_ChainEdge], list[_ChainEdge]]:
    """Lower and upper boundary chains, both ordered left to right.

    Vertical box edges (the only vertical edges possible) carry no
    horizontal extent and are dropped.
    """
    n = len(verts)
    afr = [_afrac(v) for v in verts]
    i_min = 0
    i_end = 0
    for i in range(1, n):
        fi = afr[i]
        fm = afr[i_min]
        d = fi[0] * fm[1] - fm[0] * fi[1]
        if d < 0 or (
            d == 0 and verts[i][1] * verts[i_min][2] < verts[i_min][1] * verts[i][2]
        ):
            i_min = i
        fe = afr[i_end]
        d = fi[0] * fe[1] - fe[0] * fi[1]
        if d > 0 or (
            d == 0 and verts[i][1] * verts[i_end][2] < verts[i_end][1] * verts[i][2]
        ):
            i_end = i
    lower: list[_ChainEdge] = []
    i = i_min
    while i != i_end:
        j = i + 1 if i + 1 < n else 0
        lower.append((afr[i], afr[j], _line_through(verts[i], verts[j]), labels[i]))
        i = j
    upper: list[_ChainEdge] = []
    i = i_end
    while i != i_min:
        j = i + 1 if i + 1 < n else 0
        fi, fj = afr[i], afr[j]
        if fi[0] * fj[1] != fj[0] * fi[1]:
            upper.append((fj, fi, _line_through(verts[i], verts[j]), labels[i]))
        i = j
    upper.reverse()
    return lower, upper


class Trap:
    """Vertical-slab piece of one cell in the history DAG.

    Bounded by two breakpoint abscissas and one edge line of the cell
    on each of the bottom and top; inside is where sign * side >= 0 for
    the stored signs.  Dead traps hold the replacement traps that cover
    them; live traps have no children.
    """

    __slots__ = (
        "site",
        "alo",
        "ahi",
        "bot_line",
        "bot_sign",
        "bot_label",
        "top_line",
        "top_sign",
        "top_label",
        "children",
    )

    def __init__(
        self,
        site: int,
        alo: tuple[int, int],
        ahi: tuple[int, int],
        bot_line: Line,
        bot_label: Optional[int],
        top_line: Line,
        top_label: Optional[int],
    ):
        self.site = site
        self.alo = alo
        self.ahi = ahi
        self.bot_line = bot_line
        self.bot_sign = 1 if bot_line[1] > 0 else -1
        self.bot_label = bot_label
        self.top_line = top_line
        self.top_sign = -1 if top_line[1] > 0 else 1
        self.top_label = top_label
        self.children: list[Trap] = []


def decompose_cell(cell: Cell) -> list[Trap]:
    """Split a cell into traps at the abscissas of its own vertices."""
    lower, upper = _monotone_chains(cell.verts, cell.labels)
    # Chain endpoints arrive sorted, so a merge beats a comparison sort.
    bps: list[tuple[int, int]] = []
    la = [lower[0][0]] + [e[1] for e in lower]
    ua = [upper[0][0]] + [e[1] for e in upper]
    li2 = ui2 = 0
    while li2 < len(la) or ui2 < len(ua):
        if li2 == len(la):
            f = ua[ui2]
            ui2 += 1
        elif ui2 == len(ua):
            f = la[li2]
            li2 += 1
        else:
            f1, f2 = la[li2], ua[ui2]
            d = f1[0] * f2[1] - f2[0] * f1[1]
            if d <= 0:
                f = f1
                li2 += 1
                if d == 0:
                    ui2 += 1
            else:
                f = f2
                ui2 += 1
        if not bps or bps[-1] != f:
            bps.append(f)
    traps: list[Trap] = []
    li = ui = 0
    for k in range(len(bps) - 1):
        alo, ahi = bps[k], bps[k + 1]
        while lower[li][1][0] * alo[1] - alo[0] * lower[li][1][1] <= 0:
            li += 1
        while upper[ui][1][0] * alo[1] - alo[0] * upper[ui][1][1] <= 0:
            ui += 1
        traps.append(
            Trap(cell.site, alo, ahi, lower[li][2], lower[li][3], upper[ui][2], upper[ui][3])
        )
    return traps


def _mid_y(line: Line, an: int, ad: int) -> tuple[int, int]:
    # value of the edge line at abscissa an/ad, as (num, den) with den > 0
    num = line[2] * ad - line[0] * an
    den = line[1] * ad
    if den < 0:
        num, den = -num, -den
    return num, den


def _positive_overlap(t: Trap, c: Trap) -> bool:
    """Whether two traps share interior area.

    Grazing contact along a slab boundary or an edge line does not
    count; any query point on such shared boundaries is always covered
    by some positively overlapping trap as well, so descent stays
    complete while child lists stay short.
    """
    if _frac_cmp(t.ahi, c.alo) <= 0 or _frac_cmp(c.ahi, t.alo) <= 0:
        return False
    lo = t.alo if _frac_cmp(t.alo, c.alo) >= 0 else c.alo
    hi = t.ahi if _frac_cmp(t.ahi, c.ahi) <= 0 else c.ahi
    an = lo[0] * hi[1] + hi[0] * lo[1]
    ad = 2 * lo[1] * hi[1]
    tb = _mid_y(t.bot_line, an, ad)
    tt = _mid_y(t.top_line, an, ad)
    cb = _mid_y(c.bot_line, an, ad)
    ct = _mid_y(c.top_line, an, ad)
    return tb[0] * ct[1] < ct[0] * tb[1] and cb[0] * tt[1] < tt[0] * cb[1]


def _link_children(dead: list[Trap], pools: tuple[list[Trap], list[Trap]]) -> None:
    """Fill the children of freshly dead traps from their replacements.

    Equivalent to testing _positive_overlap all-pairs, but every list
    runs left to right in slab order, so one monotone start index per
    pool suffices and only traps inside the a-window pay the midline
    test.
    """
    for pool in pools:
        i = 0
        pn = len(pool)
        for t in dead:
            tlo = t.alo
            thi = t.ahi
            tba, tbb, tbc = t.bot_line
            tta, ttb, ttc = t.top_line
            while i < pn:
                chi = pool[i].ahi
                if chi[0] * tlo[1] <= tlo[0] * chi[1]:
                    i += 1
                else:
                    break
            j = i
            while j < pn:
                c = pool[j]
                clo = c.alo
                if clo[0] * thi[1] >= thi[0] * clo[1]:
                    break
                lo = tlo if tlo[0] * clo[1] >= clo[0] * tlo[1] else clo
                chi = c.ahi
                hi = thi if thi[0] * chi[1] <= chi[0] * thi[1] else chi
                an = lo[0] * hi[1] + hi[0] * lo[1]
                ad = 2 * lo[1] * hi[1]
                tbn = tbc * ad - tba * an
                tbd = tbb * ad
                if tbd < 0:
                    tbn, tbd = -tbn, -tbd
                cta, ctb, ctc = c.top_line
                ctn = ctc * ad - cta * an
                ctd = ctb * ad
                if ctd < 0:
                    ctn, ctd = -ctn, -ctd
                if tbn * ctd < ctn * tbd:
                    cba, cbb, cbc = c.bot_line
                    cbn = cbc * ad - cba * an
                    cbd = cbb * ad
                    if cbd < 0:
                        cbn, cbd = -cbn, -cbd
                    ttn = ttc * ad - tta * an
                    ttd = ttb * ad
                    if ttd < 0:
                        ttn, ttd = -ttn, -ttd
                    if cbn * ttd < ttn * cbd:
                        t.children.append(c)
                j += 1


class Diagram:
    """All cells of one extremal diagram, plus construction counters.

    sign +1 builds minimum cells, -1 maximum cells.  When with_traps is
    set, every cell keeps a trap decomposition and dead traps form a
    history DAG rooted at the very first (whole box) trap, which later
    serves point location.
    """

    __slots__ = (
        "sign",
        "sites",
        "cells",
        "with_traps",
        "root_trap",
        "edges_created",
        "edges_removed",
        "traps_created",
        "traps_destroyed",
        "seed_misses",
    )

    def __init__(self, sign: int, with_traps: bool):
        self.sign = sign
        self.sites: dict[int, LiftedPoint] = {}
        self.cells: dict[int, Cell] = {}
        self.with_traps = with_traps
        self.root_trap: Optional[Trap] = None
        self.edges_created = 0
        self.edges_removed = 0
        self.traps_created = 0
        self.traps_destroyed = 0
        self.seed_misses = 0

    @property
    def structural_work(self) -> int:
        return (
            self.edges_created
            + self.edges_removed
            + self.traps_created
            + self.traps_destroyed
        )

    def _steal_line(self, s: LiftedPoint, uid: int, cache: dict[int, Line]) -> Line:
        line = cache.get(uid)
        if line is None:
            line = bisector_line(s, self.sites[uid])
            cache[uid] = line
        return line

    def _loses_area(self, line: Line, cell: Cell) -> bool:
        # A vertex strictly on the new site's side is equivalent to the
        # cell losing a full-dimensional piece, because the cell is the
        # convex hull of its vertices.
        la, lb, lc = line
        if self.sign > 0:
            for v in cell.verts:
                if la * v[0] + lb * v[1] > lc * v[2]:
                    return True
        else:
            for v in cell.verts:
                if la * v[0] + lb * v[1] < lc * v[2]:
                    return True
        return False

    def insert(self, s: LiftedPoint, seed_id: int) -> None:
        sign = self.sign
        cells = self.cells
        self.sites[s.ident] = s
        bis: dict[int, Line] = {}

        affected: list[int] = []
        seen = {seed_id}
        stack = [seed_id]
        while stack:
            uid = stack.pop()
            if not self._loses_area(self._steal_line(s, uid, bis), cells[uid]):
                continue
            affected.append(uid)
            for lab in cells[uid].labels:
                if lab is not None and lab not in seen:
                    seen.add(lab)
                    stack.append(lab)
        if not affected:
            # The adjacency-order seed should always lose area; scan
            # everything rather than trust it with correctness.
            self.seed_misses += 1
            affected = [
                uid
                for uid in cells
                if self._loses_area(self._steal_line(s, uid, bis), cells[uid])
            ]
        assert affected, "a new site must claim area from someone"

        with_traps = self.with_traps
        nverts, nlabels = _box_polygon()
        dead_pool: list[tuple[Cell, list[Trap]]] = []
        for uid in affected:
            line = bis[uid]
            u = cells[uid]
            kept_v, kept_l = clip_cell(u.verts, u.labels, line, -sign, s.ident)
            assert kept_v, "an existing cell lost all of its area"
            self.edges_removed += len(u.verts)
            self.edges_created += len(kept_v)
            if with_traps:
                assert u.traps is not None
                dead_pool.append((u, u.traps))
                self.traps_destroyed += len(u.traps)
            u.verts, u.labels = kept_v, kept_l
            nverts, nlabels = clip_cell(nverts, nlabels, line, sign, uid)
            assert nverts, "the new cell vanished during assembly"
        fresh = Cell(s.ident, nverts, nlabels)
        cells[s.ident] = fresh
        self.edges_created += len(nverts)
        if with_traps:
            s_traps = decompose_cell(fresh)
            fresh.traps = s_traps
            self.traps_created += len(s_traps)
            for u, dead in dead_pool:
                u_traps = decompose_cell(u)
                u.traps = u_traps
                self.traps_created += len(u_traps)
                _link_children(dead, (u_traps, s_traps))

    def locate_trap(self, a: int, b: int) -> tuple[Trap, int]:
        """Live trap containing (a, b), with the predicate count spent.

        Slab abscissas and edge lines recur heavily between the traps
        met during one descent, so each distinct exact sign is computed
        (and counted) once per query.
        """
        node = self.root_trap
        assert node is not None
        p = (a, b, 1)
        fcmp_memo: dict[tuple[int, int], int] = {}
        side_memo: dict[Line, int] = {}
        preds = 0

        def fcmp(f: tuple[int, int]) -> int:
            nonlocal preds
            r = fcmp_memo.get(f)
            if r is None:
                d = f[0] - a * f[1]
                r = (d > 0) - (d < 0)
                fcmp_memo[f] = r
                preds += 1
            return r

        def sideval(line: Line) -> int:
            nonlocal preds
            r = side_memo.get(line)
            if r is None:
                r = line_side(line, p)
                side_memo[line] = r
                preds += 1
            return r

        while node.children:
            found = None
            for c in node.children:
                if fcmp(c.alo) > 0:
                    continue
                if fcmp(c.ahi) < 0:
                    continue
                if sideval(c.bot_line) * c.bot_sign < 0:
                    continue
                if sideval(c.top_line) * c.top_sign < 0:
                    continue
                found = c
                break
            assert found is not None, "history DAG descent fell through"
            node = found
        return node, preds


def build_diagram(
    ordered: list[LiftedPoint],
    *,
    sign: int,
    seed: int,
    closed: bool,
    with_traps: bool,
) -> Diagram:
    """Randomized incremental build over sites in adjacency order.

    ordered lists the sites along their structural adjacency (a cycle
    when closed, otherwise a path); the build deletes sites uniformly
    at random down to one, then reinserts in reverse, seeding each
    insertion's flood with the cell of a linked-list neighbor recorded
    at deletion time.
    """
    m = len(ordered)
    assert m >= 1
    dg = Diagram(sign, with_traps)
    rng = random.Random(seed)

    nxt: list[Optional[int]] = [i + 1 for i in range(m)]
    prv: list[Optional[int]] = [i - 1 for i in range(m)]
    if closed and m > 1:
        nxt[m - 1] = 0
        prv[0] = m - 1
    else:
        nxt[m - 1] = None
        prv[0] = None
    live = list(range(m))
    deletions: list[tuple[int, int]] = []
    for _ in range(m - 1):
        k = rng.randrange(len(live))
        pos = live[k]
        live[k] = live[-1]
        live.pop()
        before, after = prv[pos], nxt[pos]
        seed_pos = before if before is not None and before != pos else after
        assert seed_pos is not None and seed_pos != pos
        deletions.append((pos, seed_pos))
        if before is not None:
            nxt[before] = after
        if after is not None:
            prv[after] = before

    base = ordered[live[0]]
    dg.sites[base.ident] = base
    bverts, blabels = _box_polygon()
    cell0 = Cell(base.ident, bverts, blabels)
    dg.cells[base.ident] = cell0
    dg.edges_created += len(bverts)
    if with_traps:
        cell0.traps = decompose_cell(cell0)
        dg.traps_created += len(cell0.traps)
        dg.root_trap = cell0.traps[0]
    for pos, seed_pos in reversed(deletions):
        dg.insert(ordered[pos], ordered[seed_pos].ident)
    return dg


def vertex_tie_map(cells: dict[int, Cell]) -> dict[HPoint, int]:
    """Smallest site id incident to each cell corner.

    At a corner shared by several cells, exactly the incident cells'
    sites tie for the extremum, so the map answers corner queries in
    one dictionary probe.
    """
    ties: dict[HPoint, int] = {}
    for uid, cell in cells.items():
        for v in cell.verts:
            cur = ties.get(v)
            if cur is None or uid < cur:
                ties[v] = uid
    return ties


# --- static slab index (minimum-side point location) --------------------


class SlabEntry:
    __slots__ = ("bot_line", "bot_sign", "site", "bot_label")

    def __init__(self, bot_line: Line, site: int, bot_label: Optional[int]):
        self.bot_line = bot_line
        self.bot_sign = 1 if bot_line[1] > 0 else -1
        self.site = site
        self.bot_label = bot_label


class SlabIndex:
    """Cells of each vertical slab, sorted bottom to top.

    Slab boundaries are the abscissas of all diagram vertices, so
    within one slab every boundary chain is a single straight edge and
    two binary searches locate a query exactly.
    """

    __slots__ = ("bps", "slabs")

    def __init__(self, bps: list[tuple[int, int]], slabs: list[list[SlabEntry]]):
        self.bps = bps
        self.slabs = slabs


def build_slab_index(cells: dict[int, Cell]) -> SlabIndex:
    all_a: set[tuple[int, int]] = set()
    lowers: list[tuple[int, list[_ChainEdge]]] = []
    for uid, cell in cells.items():
        lower, _ = _monotone_chains(cell.verts, cell.labels)
        lowers.append((uid, lower))
        for v in cell.verts:
            all_a.add(_afrac(v))
    bps = sorted(all_a, key=cmp_to_key(_frac_cmp))
    index_of = {f: i for i, f in enumerate(bps)}
    slabs: list[list[SlabEntry]] = [[] for _ in range(len(bps) - 1)]
    for uid, lower in lowers:
        for a0, a1, line, label in lower:
            for k in range(index_of[a0], index_of[a1]):
                slabs[k].append(SlabEntry(line, uid, label))
    for k, entries in enumerate(slabs):
        an = bps[k][0] * bps[k + 1][1] + bps[k + 1][0] * bps[k][1]
        ad = 2 * bps[k][1] * bps[k + 1][1]
        entries.sort(
            key=lambda e: Fraction(
                e.bot_line[2] * ad - e.bot_line[0] * an, e.bot_line[1] * ad
            )
        )
    return SlabIndex(bps, slabs)


def slab_query(idx: SlabIndex, a: int, b: int) -> tuple[int, Optional[int], int]:
    """(site, tied neighbor or None, predicates spent) at offset (a, b)."""
    bps = idx.bps
    lo, hi = 0, len(bps) - 1
    preds = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        preds += 1
        if _frac_cmp_int(bps[mid], a) <= 0:
            lo = mid
        else:
            hi = mid - 1
    k = min(lo, len(idx.slabs) - 1)
    entries = idx.slabs[k]
    p = (a, b, 1)
    lo2, hi2 = 0, len(entries) - 1
    while lo2 < hi2:
        mid = (lo2 + hi2 + 1) // 2
        e = entries[mid]
        preds += 1
        if line_side(e.bot_line, p) * e.bot_sign >= 0:
            lo2 = mid
        else:
            hi2 = mid - 1
    e = entries[lo2]
    preds += 1
    if line_side(e.bot_line, p) == 0 and e.bot_label is not None:
        return e.site, e.bot_label, preds
    return e.site, None, preds


# --- test support -------------------------------------------------------


def cell_area2(cell: Cell) -> Fraction:
    """Twice the signed area; positive confirms CCW full-dimensional."""
    total = Fraction(0)
    verts = cell.verts
    n = len(verts)
    for i in range(n):
        px, py, w = verts[i]
        qx, qy, qw = verts[(i + 1) % n]
        total += Fraction(px * qy - qx * py, w * qw)
    return total


def iter_cell_corners(cell: Cell) -> Iterator[tuple[Fraction, Fraction]]:
    for px, py, w in cell.verts:
        yield Fraction(px, w), Fraction(py, w)
