"""Cell selection along a monotone grid path.

For a min query only the minimal elements (nobody strictly below-left)
can win, and for a max query only the maximal ones.  Both frontiers are
descending staircases, so a path of cells that hugs the right frontier
catches every candidate while touching O(#columns + #rows) cells.

The min walk sweeps columns left to right with a running row that
starts at the top.  When a column's lowest nonempty cell sits at or
below the running row, the walk descends to it; otherwise the column
contributes just the running-row cell.  Any nonempty cell the walk
skips lies strictly above and to the right of a selected nonempty cell,
so all its elements are dominated and cannot be minimal.  The max walk
is the same sweep rotated a half turn: right to left, bottom up, keyed
on each column's highest nonempty cell.

Skipped rows of empty columns keep a placeholder entry so the size
accounting stays the simple bound; placeholders carry no cell and are
never queried.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

MIN_DIRECTION = "min"
MAX_DIRECTION = "max"


class PathCell(NamedTuple):
    col: int
    row: int
    cell: Optional[object]  # grid.Cell when the slot is occupied


@dataclass
class PathSelection:
    """Ordered walk output for one direction."""

    direction: str
    entries: list[PathCell]

    def __len__(self) -> int:
        return len(self.entries)

    def nonempty(self) -> Iterator[PathCell]:
        for entry in self.entries:
            if entry.cell is not None:
                yield entry

    def keys(self) -> set[tuple[int, int]]:
        return {(e.col, e.row) for e in self.entries}


def select_min_cells(grid) -> PathSelection:
    cols = grid.x_subset_ids()
    rows = grid.y_subset_ids()
    entries: list[PathCell] = []
    if not cols or not rows:
        return PathSelection(MIN_DIRECTION, entries)
    r = len(rows) - 1
    for col in cols:
        cells = grid.column_cells(col)
        low = grid.y_position(cells[0].row) if cells else None
        if low is not None and low <= r:
            for p in range(r, low - 1, -1):
                entries.append(PathCell(col, rows[p], grid.cell(col, rows[p])))
            r = low
        else:
            entries.append(PathCell(col, rows[r], grid.cell(col, rows[r])))
    assert len(entries) <= len(cols) + len(rows)
    return PathSelection(MIN_DIRECTION, entries)


def select_max_cells(grid) -> PathSelection:
    cols = grid.x_subset_ids()
    rows = grid.y_subset_ids()
    entries: list[PathCell] = []
    if not cols or not rows:
        return PathSelection(MAX_DIRECTION, entries)
    r = 0
    for col in reversed(cols):
        cells = grid.column_cells(col)
        high = grid.y_position(cells[-1].row) if cells else None
        if high is not None and high >= r:
            for p in range(r, high + 1):
                entries.append(PathCell(col, rows[p], grid.cell(col, rows[p])))
            r = high
        else:
            entries.append(PathCell(col, rows[r], grid.cell(col, rows[r])))
    assert len(entries) <= len(cols) + len(rows)
    return PathSelection(MAX_DIRECTION, entries)
