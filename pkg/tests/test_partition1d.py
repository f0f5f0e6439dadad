"""Tests for the one-axis subset partition."""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankproduct.config import default_subset_target
from rankproduct.errors import ElementNotFoundError
from rankproduct.partition1d import GROWING, SHRINKING, Partition1D


def tok(v):
    return (v, v)


def force(sizes, *, t, mode, gap=100):
    """Whitebox: a partition in an explicit state, queues primed."""
    part = Partition1D(lambda n: t)
    key = 0
    for index, size in enumerate(sizes):
        members = [tok(key + j * gap) for j in range(size)]
        key += size * gap
        part._make_subset(members, index)
    part._n = sum(sizes)
    part._t = t
    part._mode = mode
    return part


def sizes_of(part):
    return [s.size for s in part.subsets_in_order()]


def assert_clean(part, *, allow_findings=False):
    hard, findings = part.check_invariants()
    assert hard == []
    if not allow_findings:
        assert findings == []


def test_first_insert_makes_single_subset():
    part = Partition1D(lambda n: 2)
    report = part.insert(10, 1)
    assert sizes_of(part) == [1]
    assert len(report.created) == 1
    assert report.destroyed == []
    assert report.membership_changed is None


def test_delete_only_member_destroys_subset():
    part = Partition1D(lambda n: 2)
    part.insert(10, 1)
    report = part.delete(10, 1)
    assert sizes_of(part) == []
    assert len(report.destroyed) == 1
    assert report.created == []


def test_delete_absent_rejected():
    part = Partition1D(lambda n: 2)
    part.insert(10, 1)
    with pytest.raises(ElementNotFoundError):
        part.delete(11, 2)
    with pytest.raises(ElementNotFoundError):
        Partition1D(lambda n: 2).delete(10, 1)


def test_isolated_small_pair_is_legal_at_t2():
    # pair rule forbids both sizes < t-1 = 1; two singletons are fine,
    # though the growing step still merges them to pre-empt the next
    # granularity bump
    part = force([3, 1, 1, 3], t=2, mode=GROWING)
    assert_clean(part)
    assert part.global_repair() is not None
    assert sizes_of(part) == [3, 2, 3]
    assert_clean(part)


def test_small_pair_at_t3_merges_to_two():
    part = force([1, 1], t=3, mode=GROWING)
    hard, _ = part.check_invariants()
    assert hard  # both below t-1 = 2
    report = part.global_repair()
    assert report is not None
    assert sizes_of(part) == [2]
    assert_clean(part)


def test_shrinking_oversize_splits_evenly():
    part = force([6, 2], t=2, mode=SHRINKING)
    report = part.global_repair()
    assert report is not None
    assert len(report.created) == 2 and len(report.destroyed) == 1
    assert sizes_of(part) == [3, 3, 2]


def test_growing_merges_exactly_the_small_pair():
    part = force([2, 2, 3], t=3, mode=GROWING)
    report = part.global_repair()
    assert report is not None
    assert sizes_of(part) == [4, 3]


def test_shrinking_split_prefers_ceiling_left():
    part = force([5], t=2, mode=SHRINKING)
    part.global_repair()
    assert sizes_of(part) == [3, 2]


def test_no_repair_when_none_due():
    part = force([3, 2, 3], t=2, mode=GROWING)
    assert part.global_repair() is None
    part._mode = SHRINKING
    assert part.global_repair() is None


def test_repair_picks_leftmost_on_ties():
    part = force([2, 2, 5, 2, 2], t=3, mode=GROWING)
    part.global_repair()
    assert sizes_of(part) == [4, 5, 2, 2]
    big = force([5, 5], t=2, mode=SHRINKING)
    big.global_repair()
    assert sizes_of(big) == [3, 2, 5]


def test_insert_between_subsets_joins_successor():
    part = force([2, 2], t=2, mode=GROWING, gap=10)
    # members are 0,10 and 20,30; 15 falls in the gap
    part.insert(15, 15)
    assert part.subset_of(15, 15).members[0] == tok(15)
    assert [s.members for s in part.subsets_in_order()] == [
        [tok(0), tok(10)],
        [tok(15), tok(20), tok(30)],
    ]


def test_insert_before_everything_joins_first():
    part = force([2, 2], t=2, mode=GROWING, gap=10)
    part.insert(-5, -5)
    assert part.subsets_in_order()[0].members[0] == tok(-5)


def test_insert_after_everything_joins_last():
    part = force([2, 2], t=2, mode=GROWING, gap=10)
    part.insert(99, 99)
    assert part.subsets_in_order()[-1].members[-1] == tok(99)


def test_subset_of_minimum_is_first():
    part = force([3, 3], t=3, mode=GROWING)
    assert part.subset_of(0, 0) is part.subsets_in_order()[0]


def test_overflow_split_on_insert():
    part = Partition1D(lambda n: 2)
    for v in range(5):
        report = part.insert(v, v)
    # fifth insert pushed the lone subset past the growing cap of 4
    assert sizes_of(part) == [3, 2]
    assert len(report.created) == 2 and len(report.destroyed) == 1
    assert report.membership_changed is None


def test_ten_ascending_inserts_tile_in_order():
    part = Partition1D(lambda n: 2)
    for v in range(1, 11):
        part.insert(v, v)
        assert_clean(part)
    assert list(part) == [tok(v) for v in range(1, 11)]
    assert all(1 <= s <= 6 for s in sizes_of(part))


def test_membership_cleared_when_global_merge_eats_subset():
    part = force([1, 2, 5], t=3, mode=GROWING)
    report = part.insert(-1, -1)  # lands in the leading singleton
    # the post-insert pair (2, 2) has both sizes <= t-1, so the global
    # step merges it away; membership must not point at a dead id
    assert sizes_of(part) == [4, 5]
    assert report.membership_changed is None
    assert len(report.created) == 1 and len(report.destroyed) == 2


def run_workload(updates, target, *, check_every=True):
    part = Partition1D(target)
    live = []
    rng = random.Random(99)
    findings = []
    for op, value in updates:
        if op == "I":
            report = part.insert(value, value)
            live.append(value)
        else:
            report = part.delete(value, value)
            live.remove(value)
        assert len(report.created) + len(report.destroyed) <= 3
        if check_every:
            hard, found = part.check_invariants()
            assert hard == [], f"after {op} {value}: {hard}"
            if found:
                assert len(part) < 16
                findings += found
    assert sorted(tok(v) for v in live) == list(part)
    return part, findings


def ascending(n):
    return [("I", v) for v in range(n)]


def descending(n):
    return [("I", v) for v in range(n, 0, -1)]


def random_mixed(n, seed):
    rng = random.Random(seed)
    live = []
    fresh = 0
    out = []
    for _ in range(n):
        if live and rng.random() < 0.4:
            v = live.pop(rng.randrange(len(live)))
            out.append(("D", v))
        else:
            out.append(("I", fresh))
            live.append(fresh)
            fresh += 1
    return out


def sawtooth(cycles, low, high):
    out = [("I", v) for v in range(high)]
    for _ in range(cycles):
        out += [("D", v) for v in range(high - 1, low - 1, -1)]
        out += [("I", v) for v in range(low, high)]
    return out


@pytest.mark.parametrize("t_const", [2, 3, 4])
def test_invariants_under_workloads_fixed_t(t_const):
    target = lambda n: t_const
    for updates in (
        ascending(120),
        descending(120),
        random_mixed(400, seed=5),
        sawtooth(4, 10, 40),
    ):
        run_workload(updates, target)


def test_invariants_under_workloads_real_f():
    for updates in (
        ascending(300),
        descending(300),
        random_mixed(900, seed=6),
        sawtooth(3, 20, 90),
    ):
        part, _ = run_workload(updates, default_subset_target)
        n = len(part)
        t = part.granularity
        if n and t >= 2:
            assert len(part.subsets_in_order()) <= 2 * n / (t - 1) + 2


def test_mode_replays_from_granularity_trajectory():
    part = Partition1D(default_subset_target)
    expected_mode = GROWING
    last_t = part.granularity
    rng = random.Random(17)
    live = []
    fresh = 0
    for _ in range(800):
        if live and rng.random() < 0.45:
            v = live.pop(rng.randrange(len(live)))
            part.delete(v, v)
        else:
            part.insert(fresh, fresh)
            live.append(fresh)
            fresh += 1
        t = part.granularity
        if t != last_t:
            expected_mode = GROWING if t > last_t else SHRINKING
            last_t = t
        assert part.mode == expected_mode


def test_deferred_global_repair_matches_inline():
    def drive(deferred):
        part = Partition1D(lambda n: 3)
        trace = []
        for op, v in random_mixed(300, seed=12):
            if op == "I":
                report = part.insert(v, v, maintain=not deferred)
            else:
                report = part.delete(v, v, maintain=not deferred)
            if deferred and not report.created and not report.destroyed:
                part.global_repair()
            trace.append(sizes_of(part))
        return trace

    assert drive(False) == drive(True)


def test_global_repair_split_can_be_vetoed():
    part = force([6, 2], t=2, mode=SHRINKING)
    assert part.global_repair(allow_split=False) is None
    assert sizes_of(part) == [6, 2]


@settings(max_examples=60, deadline=None)
@given(
    ops=st.lists(
        st.tuples(st.sampled_from("ID"), st.integers(min_value=0, max_value=30)),
        max_size=60,
    ),
    t_const=st.integers(min_value=1, max_value=4),
)
def test_random_op_soup_keeps_invariants(ops, t_const):
    part = Partition1D(lambda n: t_const)
    live = set()
    for op, v in ops:
        if op == "I" and v not in live:
            part.insert(v, v)
            live.add(v)
        elif op == "D" and v in live:
            part.delete(v, v)
            live.remove(v)
        hard, _ = part.check_invariants()
        assert hard == []
    assert list(part) == sorted(tok(v) for v in live)
