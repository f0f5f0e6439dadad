"""Tests for the two-axis cell grid."""

from __future__ import annotations

import random

import pytest

from rankproduct.config import Config
from rankproduct.errors import StaleCellError
from rankproduct.grid import NON_RIGID, REPLACED, GridPartition
from rankproduct.partition1d import Partition1D, merge_reports


class Driver:
    """Update pipeline sized down to what grid tests need.

    Runs both axis partitions with deferred maintenance and grants at
    most one queue repair per update, alternating the preferred axis,
    splits allowed only while the other axis sat still.
    """

    def __init__(self, config=None):
        self.config = config or Config()
        target = self.config.subset_target
        self.x = Partition1D(target)
        self.y = Partition1D(target)
        self.elements = {}
        self.grid = GridPartition(self.x, self.y, self.elements, self.config)
        self.updates = 0

    def _run(self, ident, kind):
        xkey, ykey = self.elements[ident]
        if kind == "insert":
            xrep = self.x.insert(xkey, ident, maintain=False)
            yrep = self.y.insert(ykey, ident, maintain=False)
        else:
            xrep = self.x.delete(xkey, ident, maintain=False)
            yrep = self.y.delete(ykey, ident, maintain=False)
        lanes = [(self.x, xrep, yrep), (self.y, yrep, xrep)]
        if self.updates % 2:
            lanes.reverse()
        for part, rep, other in lanes:
            if rep.structural:
                continue
            extra = part.global_repair(allow_split=not other.structural)
            if extra is not None:
                merge_reports(rep, extra)
                break
        dirty = self.grid.apply_update(xrep, yrep, ident, kind)
        stats = self.grid.rebuild_dirty(dirty)
        self.updates += 1
        return dirty, stats

    def insert(self, ident, xkey, ykey):
        self.elements[ident] = (xkey, ykey)
        return self._run(ident, "insert")

    def delete(self, ident):
        dirty, stats = self._run(ident, "delete")
        del self.elements[ident]
        return dirty, stats


def fconst(t, **kw):
    return Config(f_const=t, **kw)


def staircase_driver():
    d = Driver(fconst(2))
    for v in (10, 20, 30, 40, 50):
        d.insert(v, v, v)
    # ascending inserts at t=2 split into x-subsets {10,20,30} {40,50},
    # same on y, leaving two diagonal cells
    assert sorted(len(c) for col in d.grid._columns.values() for c in col.values()) == [2, 3]
    return d


def test_first_insert_single_dirty_cell():
    d = Driver(fconst(2))
    dirty, stats = d.insert(1, 5, 7)
    assert len(dirty) == 1 and stats.cells == 1 and stats.members == 1
    cell = d.grid.cell_of(1)
    assert d.grid.offsets_for(cell) == (0, 0)
    assert d.grid.audit() == []


def test_offsets_track_insert_below_everything():
    d = staircase_driver()
    upper = d.grid.cell_of(40)
    assert d.grid.offsets_for(upper) == (0, 0)
    dirty, _ = d.insert(5, 5, 5)
    assert upper.key not in dirty.reasons
    assert d.grid.offsets_for(upper) == (-1, -1)
    assert d.grid.audit() == []


def test_offsets_after_deleting_above():
    d = staircase_driver()
    lower = d.grid.cell_of(10)
    d.delete(50)
    assert d.grid.offsets_for(lower) == (0, 0)
    assert d.grid.audit() == []


def test_engine_answers_use_offsets():
    d = staircase_driver()
    d.insert(5, 5, 5)
    upper = d.grid.cell_of(40)
    a, b = d.grid.offsets_for(upper)
    ident, product = upper.min_engine.query(a, b)
    assert (ident, product) == (40, 25)  # ranks of 40 are (5, 5) now
    ident, product = upper.max_engine.query(a, b)
    assert (ident, product) == (50, 36)


def test_plain_update_dirties_exactly_membership_column_and_row():
    d = staircase_driver()
    dirty, _ = d.insert(35, 35, 35)  # joins the upper subsets, no split
    xs = d.x.subset_of(35, 35).sid
    ys = d.y.subset_of(35, 35).sid
    expect = {c.key for c in d.grid._columns[xs].values()}
    expect |= {c.key for c in d.grid._rows[ys].values()}
    assert set(dirty.reasons) == expect
    assert set(dirty.reasons.values()) == {NON_RIGID}


def test_split_replaces_column_cells():
    d = Driver(fconst(2))
    for v in (10, 20, 30, 40):
        d.insert(v, v, v)
    before = set(d.grid._columns)
    dirty, _ = d.insert(50, 50, 50)  # pushes the lone x-subset past cap
    after = set(d.grid._columns)
    assert before.isdisjoint(after)
    assert set(dirty.reasons.values()) == {REPLACED}
    assert d.grid.audit() == []


def test_stale_cell_rejected():
    d = staircase_driver()
    cell = d.grid.cell_of(10)
    cell.dirty = True
    with pytest.raises(StaleCellError):
        d.grid.offsets_for(cell)


def test_rebuild_idempotent():
    d = staircase_driver()
    cell = d.grid.cell_of(10)
    a, b = d.grid.offsets_for(cell)
    answers = (cell.min_engine.query(a, b), cell.max_engine.query(a, b))
    d.grid._rebuild(cell)
    assert d.grid.offsets_for(cell) == (a, b)
    assert (cell.min_engine.query(a, b), cell.max_engine.query(a, b)) == answers


def test_engines_follow_maintain_flags():
    d = Driver(fconst(2, maintain_max=False))
    d.insert(1, 5, 7)
    cell = d.grid.cell_of(1)
    assert cell.min_engine is not None and cell.max_engine is None
    d2 = Driver(fconst(2, maintain_min=False))
    d2.insert(1, 5, 7)
    cell2 = d2.grid.cell_of(1)
    assert cell2.min_engine is None and cell2.max_engine is not None


def test_column_view_orders_rows():
    d = Driver(fconst(2))
    # one x-subset, two y-subsets: x keys tight, y keys spread
    for ident, (xv, yv) in enumerate([(1, 10), (2, 20), (3, 30), (4, 40), (5, 50)]):
        d.insert(ident, xv, yv)
    grid = d.grid
    for xsid in grid.x_subset_ids():
        cells = grid.column_cells(xsid)
        pos = [grid.y_position(c.row) for c in cells]
        assert pos == sorted(pos)
        if cells:
            assert cells[0] is min(cells, key=lambda c: grid.y_position(c.row))
            assert cells[-1] is max(cells, key=lambda c: grid.y_position(c.row))
    assert grid.audit() == []


def mixed_updates(d, count, seed, key_span=10_000):
    rng = random.Random(seed)
    live = []
    fresh = 1
    for _ in range(count):
        if live and rng.random() < 0.4:
            d.delete(live.pop(rng.randrange(len(live))))
        else:
            d.insert(fresh, rng.randrange(key_span), rng.randrange(key_span))
            live.append(fresh)
            fresh += 1
    return live


@pytest.mark.parametrize("config", [Config(), fconst(3)])
def test_rigidity_audit_random_workload(config):
    d = Driver(config)
    mixed_updates(d, 260, seed=3)
    assert d.grid.audit() == []


def test_audit_runs_every_step_through_oscillation():
    d = Driver(fconst(2))
    for v in range(30):
        d.insert(v, v * 3 % 30, v * 7 % 30)
        assert d.grid.audit() == []
    for _ in range(3):
        for v in range(29, 9, -1):
            d.delete(v)
            assert d.grid.audit() == []
        for v in range(10, 30):
            d.insert(v, v * 3 % 30, v * 7 % 30)
            assert d.grid.audit() == []


def test_grid_answers_match_scan_oracle():
    d = Driver(fconst(4))
    live = mixed_updates(d, 180, seed=8)
    grid = d.grid
    sites = []
    for ident in live:
        sites.append((grid.rank_x(ident), grid.rank_y(ident), ident))
    best_min = None
    best_max = None
    for xsid in grid.x_subset_ids():
        for cell in grid.column_cells(xsid):
            a, b = grid.offsets_for(cell)
            got_min = cell.min_engine.query(a, b)
            got_max = cell.max_engine.query(a, b)
            members = [s for s in sites if s[2] in cell.build_rank]
            want_min = min((x * y, i) for x, y, i in members)
            want_max = max(
                ((x * y, -i) for x, y, i in members), key=lambda p: (p[0], p[1])
            )
            assert got_min == (want_min[1], want_min[0])
            assert got_max == (-want_max[1], want_max[0])
            if best_min is None or got_min[1] < best_min:
                best_min = got_min[1]
            if best_max is None or got_max[1] > best_max:
                best_max = got_max[1]
    want = min((x * y) for x, y, _ in sites)
    assert best_min == want
    assert best_max == max((x * y) for x, y, _ in sites)


def test_identical_runs_identical_state():
    def snapshot(d):
        grid = d.grid
        out = []
        for xsid in grid.x_subset_ids():
            for cell in grid.column_cells(xsid):
                out.append(
                    (cell.key, tuple(cell.x_sorted), grid.offsets_for(cell), cell.builds)
                )
        return out

    a, b = Driver(Config(seed=5)), Driver(Config(seed=5))
    for d in (a, b):
        mixed_updates(d, 150, seed=21)
    assert snapshot(a) == snapshot(b)
