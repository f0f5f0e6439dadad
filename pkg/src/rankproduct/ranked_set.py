"""Order maintenance for one coordinate axis.

A RankedOrder stores (key, id) pairs in lexicographic order and answers
1-based rank queries.  Keys are opaque: the structure only ever compares
them, never does arithmetic on them.  Ties between equal keys are broken
by id, so every stored pair has a distinct rank.

Implemented as a treap with subtree sizes.  All walks are iterative; the
structure stays safe even for adversarial priorities (which a seeded RNG
will not produce, but recursion limits should not be a failure mode).
"""

from __future__ import annotations

import random
from typing import Any, Iterator, Optional, Tuple

from .errors import DuplicateElementError, ElementNotFoundError

Entry = Tuple[Any, int]  # (key, id)


class _Node:
    __slots__ = ("entry", "prio", "left", "right", "size")

    def __init__(self, entry: Entry, prio: int) -> None:
        self.entry = entry
        self.prio = prio
        self.left: Optional[_Node] = None
        self.right: Optional[_Node] = None
        self.size = 1


def _size(node: Optional[_Node]) -> int:
    return node.size if node is not None else 0


def _refresh(node: _Node) -> None:
    node.size = 1 + _size(node.left) + _size(node.right)


class RankedOrder:
    """Sorted multiset of (key, id) pairs with rank and selection queries."""

    def __init__(self, seed: int) -> None:
        self._rng = random.Random(seed)
        self._root: Optional[_Node] = None

    def __len__(self) -> int:
        return _size(self._root)

    def insert(self, key: Any, ident: int) -> None:
        entry = (key, ident)
        path: list[tuple[_Node, bool]] = []
        node = self._root
        while node is not None:
            if entry == node.entry:
                raise DuplicateElementError(ident)
            went_right = entry > node.entry
            path.append((node, went_right))
            node = node.right if went_right else node.left
        cur = _Node(entry, self._rng.getrandbits(60))
        while path:
            parent, went_right = path.pop()
            if cur.prio < parent.prio:
                if went_right:
                    parent.right = cur.left
                    cur.left = parent
                else:
                    parent.left = cur.right
                    cur.right = parent
                _refresh(parent)
                _refresh(cur)
            else:
                if went_right:
                    parent.right = cur
                else:
                    parent.left = cur
                _refresh(parent)
                cur = parent
        self._root = cur

    def remove(self, key: Any, ident: int) -> None:
        entry = (key, ident)
        path: list[tuple[_Node, bool]] = []
        node = self._root
        while node is not None and node.entry != entry:
            went_right = entry > node.entry
            path.append((node, went_right))
            node = node.right if went_right else node.left
        if node is None:
            raise ElementNotFoundError(ident)

        def relink(top: Optional[_Node]) -> None:
            if path:
                parent, went_right = path[-1]
                if went_right:
                    parent.right = top
                else:
                    parent.left = top
            else:
                self._root = top

        while node.left is not None and node.right is not None:
            if node.left.prio < node.right.prio:
                pivot = node.left
                node.left = pivot.right
                pivot.right = node
                relink(pivot)
                path.append((pivot, True))
            else:
                pivot = node.right
                node.right = pivot.left
                pivot.left = node
                relink(pivot)
                path.append((pivot, False))
        relink(node.left if node.left is not None else node.right)
        for parent, _ in reversed(path):
            _refresh(parent)

    def count_less(self, key: Any, ident: int) -> int:
        """Number of stored pairs strictly below (key, ident)."""
        entry = (key, ident)
        node = self._root
        below = 0
        while node is not None:
            if node.entry < entry:
                below += _size(node.left) + 1
                node = node.right
            else:
                node = node.left
        return below

    def rank(self, key: Any, ident: int) -> int:
        """1-based rank of a stored pair (also meaningful for absent ones:
        the rank it would receive if inserted now)."""
        return self.count_less(key, ident) + 1

    def select(self, rank: int) -> Entry:
        """The pair with the given 1-based rank."""
        if not 1 <= rank <= len(self):
            raise IndexError(rank)
        node = self._root
        remaining = rank
        while node is not None:
            left = _size(node.left)
            if remaining <= left:
                node = node.left
            elif remaining == left + 1:
                return node.entry
            else:
                remaining -= left + 1
                node = node.right
        raise AssertionError("size bookkeeping is inconsistent")

    def __iter__(self) -> Iterator[Entry]:
        stack: list[_Node] = []
        node = self._root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            yield node.entry
            node = node.right

    def check(self) -> None:
        """Validate ordering, heap and size invariants (tests only)."""
        entries = list(self)
        assert entries == sorted(entries), "in-order traversal not sorted"
        assert len(entries) == len(self)

        stack = [(self._root, None)]
        while stack:
            node, parent_prio = stack.pop()
            if node is None:
                continue
            assert node.size == 1 + _size(node.left) + _size(node.right)
            if parent_prio is not None:
                assert node.prio >= parent_prio, "heap order violated"
            stack.append((node.left, node.prio))
            stack.append((node.right, node.prio))
