"""Ordered partition of one axis into contiguous subsets of tunable size.

The partition tracks all elements of one coordinate order, grouped into
consecutive runs.  A target function t(n) (think sqrt(n log n), but any
positive concave shape works) controls the granularity: subsets stay
within a constant factor of t(n) elements, and each update restructures
O(1) of them.

Two regimes steer maintenance.  The structure is "growing" if the most
recent change of t(n) was an increase, "shrinking" otherwise.  The hard
rules, checked after every update:

  - every subset has size at most 2t+2; at most 2t while growing;
  - no two consecutive subsets both have size below t-1; below t while
    shrinking.

The stricter halves of those rules exist so that when t steps by one,
the relaxed forms still hold with the new value.  An update repairs its
own subset immediately (split on overflow, merge on a small pair) and
may additionally perform one queue-driven repair elsewhere to burn down
debt before the next change of t: while growing, merge some adjacent
pair whose sizes are both at most t-1; while shrinking, split some
subset larger than 2t.  Both queues are lazy heaps keyed for
determinism (smallest pair first, largest subset first, leftmost on
ties).
"""

from __future__ import annotations

import heapq
from bisect import bisect_right, insort
from dataclasses import dataclass, field
from itertools import count
from typing import Any, Callable, Iterator, Optional

from .errors import ElementNotFoundError

Token = tuple  # (key, id): lexicographic position on this axis

GROWING = "growing"
SHRINKING = "shrinking"


class Subset1D:
    """One contiguous run of the axis order.

    The id is a stable handle: it is never reused, and survives only
    while the run itself does (splits and merges mint fresh ids).
    """

    __slots__ = ("sid", "members")

    def __init__(self, sid: int, members: list[Token]) -> None:
        self.sid = sid
        self.members = members  # sorted (key, id) tokens

    @property
    def size(self) -> int:
        return len(self.members)

    def first(self) -> Token:
        return self.members[0]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Subset1D(sid={self.sid}, size={self.size})"


@dataclass
class ChangeReport:
    """Which subsets one update touched.

    membership_changed is the surviving subset that gained or lost the
    element, or None when that subset was itself destroyed (its
    replacements then appear in created).  created and destroyed list
    ids; together they never exceed three entries.
    """

    created: list[int] = field(default_factory=list)
    destroyed: list[int] = field(default_factory=list)
    membership_changed: Optional[int] = None

    def touched(self) -> int:
        return len(self.created) + (1 if self.membership_changed is not None else 0)

    @property
    def structural(self) -> bool:
        return bool(self.created or self.destroyed)


def merge_reports(into: ChangeReport, extra: Optional[ChangeReport]) -> None:
    """Fold a repair report into an update report, fixing membership."""
    if extra is None:
        return
    into.created += extra.created
    into.destroyed += extra.destroyed
    if into.membership_changed in extra.destroyed:
        into.membership_changed = None


class Partition1D:
    """Maintains the subset decomposition of one axis under updates.

    target(n) must return the integer granularity t >= 1 for a
    partition currently holding n elements.  insert and delete perform
    the mandatory repair of the updated subset themselves; the optional
    queue-driven repair runs inside them by default (maintain=True) but
    can be deferred to an explicit global_repair() call when a caller
    coordinates several partitions against a shared touch budget.
    """

    def __init__(self, target: Callable[[int], int]) -> None:
        self._target = target
        self._subsets: list[Subset1D] = []
        self._by_id: dict[int, Subset1D] = {}
        self._pos: dict[int, int] = {}
        self._ids = count(1)
        self._n = 0
        self._t = max(1, target(0))
        self._mode = GROWING
        # cached [s.first() for s in _subsets]; rebuilt lazily after any
        # mutation that can change a subset's first member
        self._firsts: list[Token] = []
        self._firsts_stale = True
        # lazy repair queues; entries are validated against live state
        # when popped and dropped if stale
        self._pair_heap: list[tuple[int, Token, int, int]] = []
        self._big_heap: list[tuple[int, Token, int]] = []

    # -- read-only views ------------------------------------------------

    def __len__(self) -> int:
        return self._n

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def granularity(self) -> int:
        return self._t

    def subsets_in_order(self) -> list[Subset1D]:
        return list(self._subsets)

    def subset(self, sid: int) -> Subset1D:
        return self._by_id[sid]

    def subset_of(self, key: Any, ident: int) -> Subset1D:
        """The subset containing a stored element."""
        i = self._containing_index((key, ident))
        if i is None:
            raise ElementNotFoundError(ident)
        return self._subsets[i]

    def __iter__(self) -> Iterator[Token]:
        for s in self._subsets:
            yield from s.members

    # -- updates --------------------------------------------------------

    def insert(self, key: Any, ident: int, *, maintain: bool = True) -> ChangeReport:
        token = (key, ident)
        report = ChangeReport()
        if not self._subsets:
            made = self._make_subset([token], 0)
            report.created.append(made.sid)
            self._n = 1
            self._refresh_granularity()
            return report

        s = self._subsets[self._receiving_index(token)]
        insort(s.members, token)
        if s.members[0] == token:
            self._firsts_stale = True
        self._n += 1
        self._refresh_granularity()

        cap = 2 * self._t if self._mode == GROWING else 2 * self._t + 2
        if s.size > cap:
            left, right = self._split(s)
            report.destroyed.append(s.sid)
            report.created += [left.sid, right.sid]
        else:
            self._note_subset(s)
            report.membership_changed = s.sid
            if maintain:
                self._merge_reports(report, self.global_repair())
        return report

    def delete(self, key: Any, ident: int, *, maintain: bool = True) -> ChangeReport:
        token = (key, ident)
        i = self._containing_index(token)
        if i is None:
            raise ElementNotFoundError(ident)
        s = self._subsets[i]
        at = bisect_right(s.members, token) - 1
        s.members.pop(at)
        if at == 0:
            self._firsts_stale = True
        self._n -= 1
        self._refresh_granularity()

        report = ChangeReport()
        if s.size == 0:
            self._destroy(s)
            report.destroyed.append(s.sid)
            return report

        low = self._t - 1 if self._mode == GROWING else self._t
        i = self._pos[s.sid]
        prev = self._subsets[i - 1] if i > 0 else None
        nxt = self._subsets[i + 1] if i + 1 < len(self._subsets) else None
        if s.size < low and prev is not None and prev.size < low:
            pair = (prev, s)
        elif s.size < low and nxt is not None and nxt.size < low:
            pair = (s, nxt)
        else:
            pair = None

        if pair is not None:
            merged = self._merge(*pair)
            report.destroyed += [pair[0].sid, pair[1].sid]
            report.created.append(merged.sid)
        else:
            self._note_subset(s)
            report.membership_changed = s.sid
            if maintain:
                self._merge_reports(report, self.global_repair())
        return report

    def global_repair(self, *, allow_split: bool = True) -> Optional[ChangeReport]:
        """At most one queue-driven merge or split, if one is due.

        Callers deferring this out of insert/delete must only invoke it
        for updates whose own report had no created or destroyed
        subsets; otherwise the per-update touch bound breaks.
        """
        if self._mode == GROWING:
            return self._repair_small_pair()
        if allow_split:
            return self._repair_big_subset()
        return None

    # -- invariant checking --------------------------------------------

    def check_invariants(self) -> tuple[list[str], list[str]]:
        """(hard violations, small-n findings) for the current state.

        The relaxed size and pair rules are always hard.  Their
        mode-strict variants degrade to findings while n < 16, where
        the granularity can step on consecutive updates and repair debt
        cannot always be burned in time.
        """
        hard: list[str] = []
        findings: list[str] = []
        t = self._t
        subs = self._subsets

        total = sum(s.size for s in subs)
        if total != self._n:
            hard.append(f"size bookkeeping: {total} members vs n={self._n}")
        for s in subs:
            if s.size == 0:
                hard.append(f"empty subset {s.sid} survived")
            if s.members != sorted(s.members):
                hard.append(f"subset {s.sid} not sorted")
        for a, b in zip(subs, subs[1:]):
            if a.members and b.members and not a.members[-1] < b.members[0]:
                hard.append(f"subsets {a.sid},{b.sid} out of order")

        strict = self._mode == GROWING
        for s in subs:
            if s.size > 2 * t + 2:
                hard.append(f"subset {s.sid} size {s.size} > {2 * t + 2}")
            elif strict and s.size > 2 * t:
                msg = f"growing subset {s.sid} size {s.size} > {2 * t}"
                (hard if self._n >= 16 else findings).append(msg)
        low_strict = self._mode == SHRINKING
        for a, b in zip(subs, subs[1:]):
            if a.size < t - 1 and b.size < t - 1:
                hard.append(f"pair {a.sid},{b.sid} sizes {a.size},{b.size} < {t - 1}")
            elif low_strict and a.size < t and b.size < t:
                msg = f"shrinking pair {a.sid},{b.sid} sizes {a.size},{b.size} < {t}"
                (hard if self._n >= 16 else findings).append(msg)

        if t >= 2 and len(subs) > 2 * self._n / (t - 1) + 2:
            hard.append(f"{len(subs)} subsets exceeds 2n/(t-1)+2")
        return hard, findings

    # -- internals ------------------------------------------------------

    def _refresh_granularity(self) -> None:
        t = max(1, self._target(self._n))
        if t != self._t:
            self._mode = GROWING if t > self._t else SHRINKING
            self._t = t

    def _receiving_index(self, token: Token) -> int:
        """Index of the subset an inserted token joins.

        A token landing strictly between two subsets joins the one
        after it; a token before everything joins the first subset.
        """
        i = bisect_right(self._firsts_view(), token) - 1
        if i < 0:
            return 0
        s = self._subsets[i]
        if token > s.members[-1] and i + 1 < len(self._subsets):
            return i + 1
        return i

    def _firsts_view(self) -> list[Token]:
        if self._firsts_stale:
            self._firsts = [s.members[0] for s in self._subsets]
            self._firsts_stale = False
        return self._firsts

    def _containing_index(self, token: Token) -> Optional[int]:
        i = bisect_right(self._firsts_view(), token) - 1
        if i < 0:
            return None
        members = self._subsets[i].members
        j = bisect_right(members, token) - 1
        if j < 0 or members[j] != token:
            return None
        return i

    def _reindex(self, start: int = 0) -> None:
        for i in range(start, len(self._subsets)):
            self._pos[self._subsets[i].sid] = i

    def _make_subset(self, members: list[Token], index: int) -> Subset1D:
        made = Subset1D(next(self._ids), members)
        self._subsets.insert(index, made)
        self._firsts_stale = True
        self._by_id[made.sid] = made
        self._reindex(index)
        self._note_subset(made)
        return made

    def _destroy(self, s: Subset1D) -> None:
        index = self._pos.pop(s.sid)
        del self._by_id[s.sid]
        self._subsets.pop(index)
        self._firsts_stale = True
        self._reindex(index)
        if 0 < index < len(self._subsets):
            # the former neighbors are adjacent now
            self._note_pair(self._subsets[index - 1], self._subsets[index])

    def _split(self, s: Subset1D) -> tuple[Subset1D, Subset1D]:
        index = self._pos.pop(s.sid)
        del self._by_id[s.sid]
        half = (s.size + 1) // 2
        left = Subset1D(next(self._ids), s.members[:half])
        right = Subset1D(next(self._ids), s.members[half:])
        self._subsets[index : index + 1] = [left, right]
        self._firsts_stale = True
        self._by_id[left.sid] = left
        self._by_id[right.sid] = right
        self._reindex(index)
        self._note_subset(left)
        self._note_subset(right)
        return left, right

    def _merge(self, left: Subset1D, right: Subset1D) -> Subset1D:
        index = self._pos.pop(left.sid)
        self._pos.pop(right.sid)
        del self._by_id[left.sid]
        del self._by_id[right.sid]
        merged = Subset1D(next(self._ids), left.members + right.members)
        self._subsets[index : index + 2] = [merged]
        self._firsts_stale = True
        self._by_id[merged.sid] = merged
        self._reindex(index)
        self._note_subset(merged)
        return merged

    def _note_subset(self, s: Subset1D) -> None:
        heapq.heappush(self._big_heap, (-s.size, s.first(), s.sid))
        i = self._pos[s.sid]
        if i > 0:
            self._note_pair(self._subsets[i - 1], s)
        if i + 1 < len(self._subsets):
            self._note_pair(s, self._subsets[i + 1])

    def _note_pair(self, left: Subset1D, right: Subset1D) -> None:
        key = max(left.size, right.size)
        heapq.heappush(self._pair_heap, (key, left.first(), left.sid, right.sid))

    def _repair_small_pair(self) -> Optional[ChangeReport]:
        heap = self._pair_heap
        limit = self._t - 1
        while heap:
            key, first, lsid, rsid = heap[0]
            left = self._by_id.get(lsid)
            right = self._by_id.get(rsid)
            current = (
                left is not None
                and right is not None
                and self._pos[lsid] + 1 == self._pos[rsid]
                and left.first() == first
                and max(left.size, right.size) == key
            )
            if not current:
                heapq.heappop(heap)
                continue
            if key > limit:
                return None  # heap minimum is ineligible; nothing is due
            heapq.heappop(heap)
            merged = self._merge(left, right)
            return ChangeReport(created=[merged.sid], destroyed=[lsid, rsid])
        return None

    def _repair_big_subset(self) -> Optional[ChangeReport]:
        heap = self._big_heap
        limit = 2 * self._t
        while heap:
            negsize, first, sid = heap[0]
            s = self._by_id.get(sid)
            current = s is not None and s.first() == first and s.size == -negsize
            if not current:
                heapq.heappop(heap)
                continue
            if -negsize <= limit:
                return None
            heapq.heappop(heap)
            left, right = self._split(s)
            return ChangeReport(created=[left.sid, right.sid], destroyed=[sid])
        return None

    _merge_reports = staticmethod(merge_reports)
