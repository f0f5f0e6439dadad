"""Product grid of the two axis partitions, with engine bookkeeping.

A cell groups the elements that share both their x-axis subset and
their y-axis subset.  Cells hold the frozen extreme-point engines; the
grid decides, after each update, which cells can keep their engines
(rigid: every member's rank moved by the same amount on each axis) and
which must rebuild.

Dirty after an update are exactly the cells of the two subsets
containing the update position (their internal rank gaps changed) and
the cells of any subsets created by partition restructuring.  Cells of
destroyed subsets are dropped, never rebuilt.  Since one update touches
at most four axis subsets in total, the dirty set stays within four
columns/rows worth of cells, which the grid asserts.

Ranks are recovered from the partitions themselves: position of the
subset (a prefix sum over subset sizes, refreshed per update) plus the
member's offset inside it.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass, field
from typing import Any, Optional

from .config import Config, derive_seed
from .errors import StaleCellError
from .partition1d import ChangeReport, Partition1D
from .rigid_engine import LiftedPoint, build_max_engine, build_min_engine
from .rigid_engine.engines import ScanEngine

Token = tuple  # (key, id) on one axis

NON_RIGID = "non_rigid"
REPLACED = "replaced"


class Cell:
    """Members shared by one x-subset and one y-subset, plus engines."""

    __slots__ = (
        "col",
        "row",
        "x_sorted",
        "min_engine",
        "max_engine",
        "build_rank",
        "rep",
        "rep_build",
        "dirty",
        "builds",
    )

    def __init__(self, col: int, row: int, x_sorted: list[Token]) -> None:
        self.col = col
        self.row = row
        self.x_sorted = x_sorted  # (xkey, id), ascending
        self.min_engine = None
        self.max_engine = None
        self.build_rank: dict[int, tuple[int, int]] = {}
        self.rep: Optional[int] = None
        self.rep_build: Optional[tuple[int, int]] = None
        self.dirty = True
        self.builds = 0

    @property
    def key(self) -> tuple[int, int]:
        return (self.col, self.row)

    def __len__(self) -> int:
        return len(self.x_sorted)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Cell({self.col},{self.row},m={len(self.x_sorted)})"


@dataclass
class DirtySet:
    """Cells to rebuild this update, keyed by cell identity."""

    reasons: dict[tuple[int, int], str] = field(default_factory=dict)
    cells: dict[tuple[int, int], Cell] = field(default_factory=dict)

    def add(self, cell: Cell, reason: str) -> None:
        if cell.key not in self.reasons:
            self.reasons[cell.key] = reason
            self.cells[cell.key] = cell
        cell.dirty = True

    def __len__(self) -> int:
        return len(self.cells)

    def member_total(self) -> int:
        return sum(len(c) for c in self.cells.values())


@dataclass
class RebuildStats:
    cells: int = 0
    members: int = 0


class GridPartition:
    """Owns the cell grid over two Partition1D instances.

    elements maps id -> (xkey, ykey) and is shared with the caller,
    which must keep it current before apply_update runs.
    """

    def __init__(
        self,
        xpart: Partition1D,
        ypart: Partition1D,
        elements: dict[int, tuple[Any, Any]],
        config: Config,
    ) -> None:
        self.xpart = xpart
        self.ypart = ypart
        self.elements = elements
        self.config = config
        self._columns: dict[int, dict[int, Cell]] = {}
        self._rows: dict[int, dict[int, Cell]] = {}
        self._home: dict[int, tuple[int, int]] = {}
        self._column_cache: dict[int, list[Cell]] = {}
        self._x_pos: dict[int, int] = {}
        self._y_pos: dict[int, int] = {}
        self._x_prefix: dict[int, int] = {}
        self._y_prefix: dict[int, int] = {}
        self._x_order: list[int] = []
        self._y_order: list[int] = []
        self._refresh_index()

    # -- index over the current partitions ------------------------------

    def _refresh_index(self) -> None:
        for part, pos, prefix, order in (
            (self.xpart, self._x_pos, self._x_prefix, self._x_order),
            (self.ypart, self._y_pos, self._y_prefix, self._y_order),
        ):
            pos.clear()
            prefix.clear()
            order.clear()
            running = 0
            for i, s in enumerate(part.subsets_in_order()):
                pos[s.sid] = i
                prefix[s.sid] = running
                running += s.size
                order.append(s.sid)

    def rank_x(self, ident: int) -> int:
        xkey, _ = self.elements[ident]
        token = (xkey, ident)
        s = self.xpart.subset_of(xkey, ident)
        return self._x_prefix[s.sid] + bisect_left(s.members, token) + 1

    def rank_y(self, ident: int) -> int:
        _, ykey = self.elements[ident]
        token = (ykey, ident)
        s = self.ypart.subset_of(ykey, ident)
        return self._y_prefix[s.sid] + bisect_left(s.members, token) + 1

    # -- cell bookkeeping ------------------------------------------------

    def _put_cell(self, cell: Cell) -> None:
        self._columns.setdefault(cell.col, {})[cell.row] = cell
        self._rows.setdefault(cell.row, {})[cell.col] = cell
        self._column_cache.pop(cell.col, None)
        for xkey, ident in cell.x_sorted:
            self._home[ident] = cell.key

    def _drop_cell(self, cell: Cell) -> None:
        col = self._columns.get(cell.col)
        if col is not None and col.get(cell.row) is cell:
            del col[cell.row]
            if not col:
                del self._columns[cell.col]
        row = self._rows.get(cell.row)
        if row is not None and row.get(cell.col) is cell:
            del row[cell.col]
            if not row:
                del self._rows[cell.row]
        self._column_cache.pop(cell.col, None)

    def _drop_column(self, xsid: int) -> None:
        for cell in list(self._columns.get(xsid, {}).values()):
            self._drop_cell(cell)

    def _drop_row(self, ysid: int) -> None:
        for cell in list(self._rows.get(ysid, {}).values()):
            self._drop_cell(cell)

    def cell(self, xsid: int, ysid: int) -> Optional[Cell]:
        return self._columns.get(xsid, {}).get(ysid)

    def cell_of(self, ident: int) -> Cell:
        key = self._home[ident]
        found = self.cell(*key)
        assert found is not None, "home points at a missing cell"
        return found

    def column_cells(self, xsid: int) -> list[Cell]:
        """Nonempty cells of one column, ascending by row position."""
        cached = self._column_cache.get(xsid)
        if cached is None:
            ypos = self._y_pos
            cached = sorted(
                self._columns.get(xsid, {}).values(), key=lambda c: ypos[c.row]
            )
            self._column_cache[xsid] = cached
        return cached

    def x_subset_ids(self) -> list[int]:
        return list(self._x_order)

    def y_subset_ids(self) -> list[int]:
        return list(self._y_order)

    def y_position(self, ysid: int) -> int:
        return self._y_pos[ysid]

    # -- the update step -------------------------------------------------

    def apply_update(
        self,
        xrep: ChangeReport,
        yrep: ChangeReport,
        ident: int,
        kind: str,
    ) -> DirtySet:
        dirty = DirtySet()

        if kind == "delete":
            old = self._home.pop(ident)
            cell = self.cell(*old)
            if cell is not None:
                token = (self.elements[ident][0], ident)
                at = bisect_left(cell.x_sorted, token)
                assert cell.x_sorted[at] == token
                cell.x_sorted.pop(at)
                if len(cell) == 0:
                    self._drop_cell(cell)
                # a surviving cell is picked up below through the
                # membership column and row

        for sid in xrep.destroyed:
            self._drop_column(sid)
        for sid in yrep.destroyed:
            self._drop_row(sid)

        self._refresh_index()

        for sid in xrep.created:
            for row_sid, members in self._group_by_row(
                self.xpart.subset(sid).members
            ).items():
                cell = Cell(sid, row_sid, members)
                self._put_cell(cell)
                dirty.add(cell, REPLACED)
        for sid in yrep.created:
            for col_sid, members in self._group_by_col(
                self.ypart.subset(sid).members
            ).items():
                if self.cell(col_sid, sid) is not None:
                    continue  # built by the column pass just above
                cell = Cell(col_sid, sid, members)
                self._put_cell(cell)
                dirty.add(cell, REPLACED)

        if kind == "insert" and ident not in self._home:
            xkey, ykey = self.elements[ident]
            xs = self.xpart.subset_of(xkey, ident).sid
            ys = self.ypart.subset_of(ykey, ident).sid
            cell = self.cell(xs, ys)
            if cell is None:
                cell = Cell(xs, ys, [(xkey, ident)])
                self._put_cell(cell)
                dirty.add(cell, NON_RIGID)
            else:
                insort(cell.x_sorted, (xkey, ident))
                self._home[ident] = cell.key

        if xrep.membership_changed is not None:
            for cell in self._columns.get(xrep.membership_changed, {}).values():
                dirty.add(cell, NON_RIGID)
        if yrep.membership_changed is not None:
            for cell in self._rows.get(yrep.membership_changed, {}).values():
                dirty.add(cell, NON_RIGID)

        cap_cells, cap_members = self._touch_caps()
        assert len(dirty) <= 4 * cap_cells, "dirty cell bound exceeded"
        assert dirty.member_total() <= 4 * cap_members, "dirty member bound exceeded"
        return dirty

    def _group_by_row(self, members: list[Token]) -> dict[int, list[Token]]:
        grouped: dict[int, list[Token]] = {}
        for xkey, ident in members:
            _, ykey = self.elements[ident]
            row_sid = self.ypart.subset_of(ykey, ident).sid
            grouped.setdefault(row_sid, []).append((xkey, ident))
        return grouped

    def _group_by_col(self, members: list[Token]) -> dict[int, list[Token]]:
        grouped: dict[int, list[Token]] = {}
        for _, ident in members:
            xkey, _ = self.elements[ident]
            col_sid = self.xpart.subset_of(xkey, ident).sid
            grouped.setdefault(col_sid, []).append((xkey, ident))
        for tokens in grouped.values():
            tokens.sort()
        return grouped

    def _touch_caps(self) -> tuple[int, int]:
        cells = 1
        for col in self._columns.values():
            cells = max(cells, len(col))
        for row in self._rows.values():
            cells = max(cells, len(row))
        size = 1
        for part in (self.xpart, self.ypart):
            for s in part.subsets_in_order():
                size = max(size, s.size)
        return cells, size

    # -- rebuilding ------------------------------------------------------

    def rebuild_dirty(self, dirty: DirtySet) -> RebuildStats:
        stats = RebuildStats()
        for key in sorted(dirty.cells):
            cell = dirty.cells[key]
            if self.cell(*key) is not cell:
                continue  # destroyed after being marked
            self._rebuild(cell)
            stats.cells += 1
            stats.members += len(cell)
        return stats

    def _rebuild(self, cell: Cell) -> None:
        cfg = self.config
        points = []
        build_rank: dict[int, tuple[int, int]] = {}
        # every member lives in x-subset cell.col and y-subset cell.row,
        # so the subset and prefix lookups hoist out of the loop
        xmem = self.xpart.subset(cell.col).members
        ymem = self.ypart.subset(cell.row).members
        xbase = self._x_prefix[cell.col]
        ybase = self._y_prefix[cell.row]
        elements = self.elements
        for xkey, ident in cell.x_sorted:
            rx = xbase + bisect_left(xmem, (xkey, ident)) + 1
            ry = ybase + bisect_left(ymem, (elements[ident][1], ident)) + 1
            build_rank[ident] = (rx, ry)
            # lift() inlined; ranks are 1..n by construction, inside range
            points.append(LiftedPoint(rx, ry, rx * ry, ident))
        cell.build_rank = build_rank
        rep = cell.x_sorted[0][1]
        cell.rep = rep
        cell.rep_build = build_rank[rep]
        cell.builds += 1

        m = len(points)
        use_scan = cfg.debug_linear_engines or m <= cfg.scan_engine_max_sites
        if cfg.maintain_min:
            if use_scan:
                cell.min_engine = ScanEngine(points, want_max=False)
            else:
                seed = derive_seed(cfg.seed, cell.col, cell.row, cell.builds, 0)
                cell.min_engine = build_min_engine(points, seed=seed)
        if cfg.maintain_max:
            if use_scan:
                cell.max_engine = ScanEngine(points, want_max=True)
            else:
                seed = derive_seed(cfg.seed, cell.col, cell.row, cell.builds, 1)
                cell.max_engine = build_max_engine(points, seed=seed)
        cell.dirty = False

    # -- offsets and auditing -------------------------------------------

    def offsets_for(self, cell: Cell) -> tuple[int, int]:
        if cell.dirty:
            raise StaleCellError(cell.key)
        rep = cell.rep
        assert rep is not None and cell.rep_build is not None
        # a clean cell's representative still lives in the cell's own
        # subsets, so its current ranks come from direct bisects
        xkey, ykey = self.elements[rep]
        rx = self._x_prefix[cell.col] + bisect_left(
            self.xpart.subset(cell.col).members, (xkey, rep)
        ) + 1
        ry = self._y_prefix[cell.row] + bisect_left(
            self.ypart.subset(cell.row).members, (ykey, rep)
        ) + 1
        return cell.rep_build[0] - rx, cell.rep_build[1] - ry

    def audit(self) -> list[str]:
        """Brute-force consistency check; returns violations."""
        out: list[str] = []
        xrank = {
            ident: i + 1
            for i, (_, ident) in enumerate(
                sorted((xkey, ident) for ident, (xkey, _) in self.elements.items())
            )
        }
        yrank = {
            ident: i + 1
            for i, (_, ident) in enumerate(
                sorted((ykey, ident) for ident, (_, ykey) in self.elements.items())
            )
        }

        seen: set[int] = set()
        for col_sid, col in self._columns.items():
            for row_sid, cell in col.items():
                if (
                    self._rows.get(row_sid, {}).get(col_sid) is not cell
                    or cell.col != col_sid
                    or cell.row != row_sid
                ):
                    out.append(f"cell {col_sid},{row_sid} misindexed")
                if len(cell) == 0:
                    out.append(f"cell {cell.key} empty but alive")
                for xkey, ident in cell.x_sorted:
                    if ident in seen:
                        out.append(f"element {ident} in two cells")
                    seen.add(ident)
                    if self._home.get(ident) != cell.key:
                        out.append(f"element {ident} home mismatch")
                if cell.dirty:
                    out.append(f"cell {cell.key} left dirty")
                    continue
                offsets = set()
                for xkey, ident in cell.x_sorted:
                    bx, by = cell.build_rank[ident]
                    offsets.add((bx - xrank[ident], by - yrank[ident]))
                if len(offsets) != 1:
                    out.append(f"cell {cell.key} not rigid: offsets {offsets}")
                    continue
                a, b = next(iter(offsets))
                if self.offsets_for(cell) != (a, b):
                    out.append(f"cell {cell.key} offsets_for disagrees")
                for ident in cell.build_rank:
                    bx, by = cell.build_rank[ident]
                    if bx - a < 1 or by - b < 1:
                        out.append(f"cell {cell.key} member {ident} shifted below 1")
        if seen != set(self.elements):
            out.append("cells do not tile the element set")

        for xsid in self._x_order:
            cells = self.column_cells(xsid)
            pos = [self._y_pos[c.row] for c in cells]
            if pos != sorted(pos):
                out.append(f"column {xsid} cache out of order")
            grouped = self._group_by_row(self.xpart.subset(xsid).members)
            if {c.row for c in cells} != set(grouped):
                out.append(f"column {xsid} cells disagree with partitions")
            else:
                for c in cells:
                    if c.x_sorted != sorted(grouped[c.row]):
                        out.append(f"cell {c.key} members disagree with partitions")
        return out
