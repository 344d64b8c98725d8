"""Balanced-tree building blocks for the dynamic height machinery.

Two treap variants: an order-statistics tree with parent pointers (stable
cells, rank lookups, subtree opener counts) and a positional tree over
character heights with subtree minima and a lazy additive offset.
"""
from __future__ import annotations

import random
from typing import Optional

_rng = random.Random(0x5EED)


class ONode:
    """Cell of an order-statistics treap; payload in ``val``."""

    __slots__ = ("left", "right", "parent", "pri", "size", "nopen", "val", "val_open")

    def __init__(self, val, val_open):
        self.left = None
        self.right = None
        self.parent = None
        self.pri = _rng.random()
        self.size = 1
        self.val = val
        self.val_open = val_open
        self.nopen = val_open


def _osize(n):
    return n.size if n is not None else 0


def _onopen(n):
    return n.nopen if n is not None else 0


class OrderTree:
    """Sequence of stable cells supporting positional insert/delete and
    rank queries from a cell reference (via parent pointers)."""

    def __init__(self):
        self.root: Optional[ONode] = None

    def __len__(self):
        return _osize(self.root)

    @staticmethod
    def _pull(n: ONode):
        n.size = 1 + _osize(n.left) + _osize(n.right)
        n.nopen = n.val_open + _onopen(n.left) + _onopen(n.right)

    def _merge(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        if a.pri > b.pri:
            r = self._merge(a.right, b)
            a.right = r
            if r is not None:
                r.parent = a
            self._pull(a)
            return a
        l = self._merge(a, b.left)
        b.left = l
        if l is not None:
            l.parent = b
        self._pull(b)
        return b

    def _split(self, n, k):
        """(first k cells, rest)."""
        if n is None:
            return None, None
        if _osize(n.left) >= k:
            a, b = self._split(n.left, k)
            n.left = b
            if b is not None:
                b.parent = n
            self._pull(n)
            if a is not None:
                a.parent = None
            return a, n
        a, b = self._split(n.right, k - _osize(n.left) - 1)
        n.right = a
        if a is not None:
            a.parent = n
        self._pull(n)
        if b is not None:
            b.parent = None
        return n, b

    def insert_at(self, pos: int, val, val_open: int = 0) -> ONode:
        node = ONode(val, val_open)
        a, b = self._split(self.root, pos)
        self.root = self._merge(self._merge(a, node), b)
        self.root.parent = None
        return node

    def append(self, val, val_open: int = 0) -> ONode:
        return self.insert_at(len(self), val, val_open)

    def rank(self, node: ONode) -> int:
        r = _osize(node.left)
        cur = node
        while cur.parent is not None:
            if cur is cur.parent.right:
                r += _osize(cur.parent.left) + 1
            cur = cur.parent
        return r

    def select(self, pos: int) -> ONode:
        n = self.root
        if not 0 <= pos < _osize(n):
            raise IndexError(pos)
        while True:
            ls = _osize(n.left)
            if pos < ls:
                n = n.left
            elif pos == ls:
                return n
            else:
                pos -= ls + 1
                n = n.right

    def delete_node(self, node: ONode):
        pos = self.rank(node)
        a, b = self._split(self.root, pos)
        mid, b = self._split(b, 1)
        assert mid is node
        self.root = self._merge(a, b)
        if self.root is not None:
            self.root.parent = None
        node.parent = node.left = node.right = None

    def insert_after(self, node: ONode, val, val_open: int = 0) -> ONode:
        return self.insert_at(self.rank(node) + 1, val, val_open)

    def set_open(self, node: ONode, val_open: int):
        if node.val_open == val_open:
            return
        node.val_open = val_open
        cur = node
        while cur is not None:
            self._pull(cur)
            cur = cur.parent

    def nopen_prefix(self, pos: int) -> int:
        """Number of opener cells among the first ``pos`` cells."""
        n = self.root
        acc = 0
        while n is not None and pos > 0:
            ls = _osize(n.left)
            if pos <= ls:
                n = n.left
            else:
                acc += _onopen(n.left) + n.val_open
                pos -= ls + 1
                n = n.right
        return acc

    def __iter__(self):
        stack = []
        n = self.root
        while stack or n is not None:
            while n is not None:
                stack.append(n)
                n = n.left
            n = stack.pop()
            yield n
            n = n.right

    def values(self):
        return [n.val for n in self]


class HNodeT:
    __slots__ = ("left", "right", "pri", "size", "h", "minh", "lazy")

    def __init__(self, h):
        self.left = None
        self.right = None
        self.pri = _rng.random()
        self.size = 1
        self.h = h
        self.minh = h
        self.lazy = 0


def _hsize(n):
    return n.size if n is not None else 0


_INF = float("inf")


def _hmin(n):
    return n.minh if n is not None else _INF


class MinHeightRangeTree:
    """Character heights under positional edits, subtree minima, and a lazy
    additive offset for suffix height shifts."""

    def __init__(self):
        self.root: Optional[HNodeT] = None

    def __len__(self):
        return _hsize(self.root)

    @staticmethod
    def _apply(n: HNodeT, d: int):
        if n is not None and d:
            n.h += d
            n.minh += d
            n.lazy += d

    def _push(self, n: HNodeT):
        if n.lazy:
            self._apply(n.left, n.lazy)
            self._apply(n.right, n.lazy)
            n.lazy = 0

    @staticmethod
    def _pull(n: HNodeT):
        n.size = 1 + _hsize(n.left) + _hsize(n.right)
        m = n.h
        if n.left is not None and n.left.minh < m:
            m = n.left.minh
        if n.right is not None and n.right.minh < m:
            m = n.right.minh
        n.minh = m

    def _merge(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        if a.pri > b.pri:
            self._push(a)
            a.right = self._merge(a.right, b)
            self._pull(a)
            return a
        self._push(b)
        b.left = self._merge(a, b.left)
        self._pull(b)
        return b

    def _split(self, n, k):
        if n is None:
            return None, None
        self._push(n)
        if _hsize(n.left) >= k:
            a, b = self._split(n.left, k)
            n.left = b
            self._pull(n)
            return a, n
        a, b = self._split(n.right, k - _hsize(n.left) - 1)
        n.right = a
        self._pull(n)
        return n, b

    def insert_at(self, pos: int, h: int):
        a, b = self._split(self.root, pos)
        self.root = self._merge(self._merge(a, HNodeT(h)), b)

    def delete_at(self, pos: int):
        a, b = self._split(self.root, pos)
        _, b = self._split(b, 1)
        self.root = self._merge(a, b)

    def add_suffix(self, pos: int, delta: int):
        """Add ``delta`` to every height at position >= pos."""
        if delta == 0 or pos >= len(self):
            return
        a, b = self._split(self.root, pos)
        self._apply(b, delta)
        self.root = self._merge(a, b)

    def height_at(self, pos: int) -> int:
        n = self.root
        if not 0 <= pos < _hsize(n):
            raise IndexError(pos)
        while True:
            self._push(n)
            ls = _hsize(n.left)
            if pos < ls:
                n = n.left
            elif pos == ls:
                return n.h
            else:
                pos -= ls + 1
                n = n.right

    def min_in(self, i: int, j: int):
        """Minimum height over positions [i..j), or None when empty."""
        i = max(i, 0)
        j = min(j, len(self))
        if i >= j:
            return None
        a, b = self._split(self.root, i)
        mid, c = self._split(b, j - i)
        res = mid.minh
        self.root = self._merge(a, self._merge(mid, c))
        return res

    # -- threshold searches -------------------------------------------------

    def first_leq(self, i: int, h) -> Optional[int]:
        """Smallest position p >= i with height(p) <= h (fast descent)."""

        def rec(n, off, i):
            if n is None or n.minh > h:
                return None
            self._push(n)
            ls = _hsize(n.left)
            if i < off + ls:
                r = rec(n.left, off, i)
                if r is not None:
                    return r
            p = off + ls
            if p >= i and n.h <= h:
                return p
            return rec(n.right, off + ls + 1, max(i, p + 1))

        return rec(self.root, 0, i)

    def last_leq(self, i: int, h) -> Optional[int]:
        """Largest position p <= i with height(p) <= h."""

        def rec(n, off, i):
            if n is None or n.minh > h:
                return None
            self._push(n)
            ls = _hsize(n.left)
            p = off + ls
            if p + 1 <= i:
                r = rec(n.right, p + 1, i)
                if r is not None:
                    return r
            if p <= i and n.h <= h:
                return p
            return rec(n.left, off, min(i, p - 1))

        return rec(self.root, 0, i)

    def range_query(self, i: int, h, fast: bool = False):
        """Maximal range [i..e] whose heights all exceed h; None if empty.

        The default walks the tree combining per-node subranges; the fast
        path locates the first offending position directly.  Both answer
        identically.
        """
        n = len(self)
        if not 0 <= i < n:
            raise IndexError(i)
        if fast:
            j = self.first_leq(i, h)
            if j == i:
                return None
            e = (j - 1) if j is not None else n - 1
            return (i, e)
        rng = self._get_min_range(self.root, 0, i, h)
        if rng is None:
            return None
        return rng

    def _get_min_range(self, node, off, i, h):
        """The maximal run of >h heights starting at max(off, i) inside this
        subtree, or None when that run is empty; runs are combined across
        child subtrees exactly when they abut."""
        if node is None:
            return None
        hi = off + node.size - 1
        if hi < i:
            return None
        if off >= i and node.minh > h:
            return (off, hi)
        self._push(node)
        p = off + _hsize(node.left)
        s0 = max(off, i)
        if s0 < p:
            left_res = self._get_min_range(node.left, off, i, h)
            if left_res is None or left_res[1] < p - 1 or node.h <= h:
                return left_res
            cur = (left_res[0], p)
        elif s0 == p:
            if node.h <= h:
                return None
            cur = (p, p)
        else:
            return self._get_min_range(node.right, p + 1, i, h)
        right_res = self._get_min_range(node.right, p + 1, i, h)
        if right_res is not None and right_res[0] == p + 1:
            cur = (cur[0], right_res[1])
        return cur

    def heights(self):
        out = []

        def rec(n, lazy):
            if n is None:
                return
            lz = lazy + n.lazy
            rec(n.left, lz)
            out.append(n.h + lazy)
            rec(n.right, lz)

        rec(self.root, 0)
        return out
