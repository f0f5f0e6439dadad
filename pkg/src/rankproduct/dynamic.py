"""Top-level structure: updates on one side, extreme products on the other.

Composition per update: the two treap orders absorb the key, each axis
partition places it and reports any restructuring, at most one queued
partition repair runs (axes alternate priority, a split is allowed only
while the other axis sat still this update), the grid turns the reports
into a dirty cell set and rebuilds those engines, and finally both
query answers are recomputed through the staircase walk and cached.

The treaps are not on the rank hot path (the grid reads ranks off the
partitions directly) but they are updated every operation and the audit
replays every element's rank through them, so the two rank routes stay
cross-checked.

Counters record, per update and cumulatively, how much rebuilding and
querying happened and how deep engine predicate evaluation went.  The
minimum engine's depth budget is hard; the maximum engine's holds in
expectation, so its spend is tracked against the summed budget instead
of per query.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Optional

from .config import MAX_ELEMENTS, PREDICATE_DEPTH_C, Config, derive_seed
from .errors import (
    DuplicateElementError,
    ElementNotFoundError,
    RankProductError,
    RankRangeError,
)
from .grid import GridPartition
from .partition1d import ChangeReport, Partition1D, merge_reports
from .ranked_set import RankedOrder
from .staircase import select_max_cells, select_min_cells

QueryResult = Optional[tuple[int, int]]  # (ident, product)


@dataclass
class UpdateCounters:
    """Telemetry for one update."""

    n: int = 0
    dirty_cells: int = 0
    rebuilt_members: int = 0
    cells_queried_min: int = 0
    cells_queried_max: int = 0
    max_pred_depth: int = 0


@dataclass
class TotalCounters:
    updates: int = 0
    dirty_cells: int = 0
    rebuilt_members: int = 0
    cells_queried_min: int = 0
    cells_queried_max: int = 0
    # queries whose predicate count broke the hard per-query budget
    min_depth_violations: int = 0
    # expected-depth side: spent predicates versus summed budget
    max_depth_spent: int = 0
    max_depth_budget: float = 0.0


@dataclass
class AuditReport:
    hard: list[str] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.hard


def depth_budget(engine_size: int) -> float:
    return PREDICATE_DEPTH_C * (math.log2(engine_size) + 1.0)


class DynamicRankProduct:
    """Set of (id, xkey, ykey); reports extreme products of ranks."""

    def __init__(self, config: Optional[Config] = None) -> None:
        self.config = config or Config()
        cfg = self.config
        self.elements: dict[int, tuple[Any, Any]] = {}
        self.xorder = RankedOrder(derive_seed(cfg.seed, 1))
        self.yorder = RankedOrder(derive_seed(cfg.seed, 2))
        self.xpart = Partition1D(cfg.subset_target)
        self.ypart = Partition1D(cfg.subset_target)
        self.grid = GridPartition(self.xpart, self.ypart, self.elements, cfg)
        self.last = UpdateCounters()
        self.totals = TotalCounters()
        self._cached_min: QueryResult = None
        self._cached_max: QueryResult = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def n(self) -> int:
        return len(self.elements)

    # -- updates ---------------------------------------------------------

    def insert(self, ident: int, xkey: Any, ykey: Any) -> None:
        if ident in self.elements:
            raise DuplicateElementError(ident)
        if len(self.elements) + 1 >= MAX_ELEMENTS:
            raise RankRangeError(f"element count cap is {MAX_ELEMENTS - 1}")
        self.elements[ident] = (xkey, ykey)
        self.xorder.insert(xkey, ident)
        self.yorder.insert(ykey, ident)
        xrep = self.xpart.insert(xkey, ident, maintain=False)
        yrep = self.ypart.insert(ykey, ident, maintain=False)
        self._finish_update(xrep, yrep, ident, "insert")

    def delete(self, ident: int) -> None:
        if ident not in self.elements:
            raise ElementNotFoundError(ident)
        xkey, ykey = self.elements[ident]
        self.xorder.remove(xkey, ident)
        self.yorder.remove(ykey, ident)
        xrep = self.xpart.delete(xkey, ident, maintain=False)
        yrep = self.ypart.delete(ykey, ident, maintain=False)
        self._finish_update(xrep, yrep, ident, "delete")
        del self.elements[ident]

    def _finish_update(
        self,
        xrep: ChangeReport,
        yrep: ChangeReport,
        ident: int,
        kind: str,
    ) -> None:
        # one queued repair per update at most, so structural churn per
        # update stays within four subsets across both axes
        lanes = [(self.xpart, xrep, yrep), (self.ypart, yrep, xrep)]
        if self.totals.updates % 2:
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

        counters = UpdateCounters(
            n=len(self.xpart),
            dirty_cells=len(dirty),
            rebuilt_members=stats.members,
        )
        self._refresh_answers(counters)
        self.last = counters
        totals = self.totals
        totals.updates += 1
        totals.dirty_cells += counters.dirty_cells
        totals.rebuilt_members += counters.rebuilt_members
        totals.cells_queried_min += counters.cells_queried_min
        totals.cells_queried_max += counters.cells_queried_max

    # -- queries ---------------------------------------------------------

    def _refresh_answers(self, counters: UpdateCounters) -> None:
        cfg = self.config
        totals = self.totals
        self._cached_min = None
        self._cached_max = None
        if counters.n == 0:
            return
        deepest = 0

        if cfg.maintain_min:
            best: Optional[tuple[int, int]] = None  # (product, ident)
            for entry in select_min_cells(self.grid).nonempty():
                cell = entry.cell
                a, b = self.grid.offsets_for(cell)
                engine = cell.min_engine
                got_id, got = engine.query(a, b)
                counters.cells_queried_min += 1
                spent = engine.last_query_predicates
                deepest = max(deepest, spent)
                if spent > depth_budget(len(engine)):
                    totals.min_depth_violations += 1
                if best is None or (got, got_id) < best:
                    best = (got, got_id)
            assert best is not None
            self._cached_min = (best[1], best[0])

        if cfg.maintain_max:
            best = None
            for entry in select_max_cells(self.grid).nonempty():
                cell = entry.cell
                a, b = self.grid.offsets_for(cell)
                engine = cell.max_engine
                got_id, got = engine.query(a, b)
                counters.cells_queried_max += 1
                spent = engine.last_query_predicates
                deepest = max(deepest, spent)
                totals.max_depth_spent += spent
                totals.max_depth_budget += depth_budget(len(engine))
                if best is None or got > best[0] or (got == best[0] and got_id < best[1]):
                    best = (got, got_id)
            assert best is not None
            self._cached_max = (best[1], best[0])

        counters.max_pred_depth = deepest

    def query_min(self) -> QueryResult:
        if not self.config.maintain_min:
            raise RankProductError("minimum side disabled by configuration")
        return self._cached_min

    def query_max(self) -> QueryResult:
        if not self.config.maintain_max:
            raise RankProductError("maximum side disabled by configuration")
        return self._cached_max

    # -- consistency -----------------------------------------------------

    def audit(self) -> AuditReport:
        report = AuditReport()
        for label, part in (("x", self.xpart), ("y", self.ypart)):
            hard, findings = part.check_invariants()
            report.hard += [f"{label}: {v}" for v in hard]
            report.findings += [f"{label}: {v}" for v in findings]
            if len(part) != len(self.elements):
                report.hard.append(f"{label}: partition size {len(part)} != n")
        report.hard += self.grid.audit()

        for order in (self.xorder, self.yorder):
            order.check()
        if len(self.xorder) != len(self.elements) or len(self.yorder) != len(
            self.elements
        ):
            report.hard.append("treap sizes disagree with the element map")
        for ident, (xkey, ykey) in self.elements.items():
            if self.xorder.rank(xkey, ident) != self.grid.rank_x(ident):
                report.hard.append(f"x rank of {ident} differs between routes")
            if self.yorder.rank(ykey, ident) != self.grid.rank_y(ident):
                report.hard.append(f"y rank of {ident} differs between routes")
        return report
