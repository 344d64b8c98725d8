"""Handle-based persistent string collection.

Internals: height-balanced concatenation trees whose nodes carry a
Karp-Rabin fingerprint, so content equality is a fingerprint comparison
(collision probability below 2**-60 per comparison at the scales used
here).  Handles are persistent: split and concat return new handles and
never invalidate old ones.

Parenthesis-content handles additionally keep a mirrored tree holding the
transpose, and every node carries a monotone-run summary so longest
monotone prefix queries need no second collection.
"""
from __future__ import annotations

import os
import random
from typing import NamedTuple, Optional, Sequence

from .paren import ParenSymbol

_PRIME = (1 << 61) - 1


class _Node:
    __slots__ = (
        "left",
        "right",
        "sym",
        "length",
        "height",
        "fp",
        "rpow",
        "first_kind",
        "prefix_run",
        "all_same",
    )

    def __init__(self, left, right, sym, length, height, fp, rpow, first_kind, prefix_run, all_same):
        self.left = left
        self.right = right
        self.sym = sym
        self.length = length
        self.height = height
        self.fp = fp
        self.rpow = rpow
        self.first_kind = first_kind
        self.prefix_run = prefix_run
        self.all_same = all_same


def _kind(sym):
    return sym.is_open if isinstance(sym, ParenSymbol) else None


class StrHandle:
    """Opaque reference to one immutable string in a collection."""

    __slots__ = ("coll", "node", "tnode", "uid")

    def __init__(self, coll, node, tnode, uid):
        self.coll = coll
        self.node = node
        self.tnode = tnode
        self.uid = uid

    def __len__(self):
        return self.node.length if self.node is not None else 0

    def __repr__(self):
        return "StrHandle(#%d, len=%d)" % (self.uid, len(self))


class IpmResult(NamedTuple):
    start: int
    difference: int
    count: int

    def positions(self):
        return [self.start + i * self.difference for i in range(self.count)]


class StrCollection:
    """A single-writer collection of persistent strings."""

    def __init__(self, seed: Optional[int] = None):
        if seed is None:
            env = os.environ.get("BRACKETDYN_SEED")
            seed = int(env) if env else 0xB12AC4E7
        rng = random.Random(seed)
        self._r = rng.randrange(1 << 20, _PRIME - 1)
        self._sym_hash = {}
        self._rng = rng
        self._next_uid = 0

    # -- node construction ------------------------------------------------

    def _hash_sym(self, sym):
        h = self._sym_hash.get(sym)
        if h is None:
            h = self._rng.randrange(1, _PRIME)
            self._sym_hash[sym] = h
        return h

    def _leaf(self, sym):
        k = _kind(sym)
        return _Node(None, None, sym, 1, 1, self._hash_sym(sym), self._r, k, 1, True)

    def _mk(self, left, right):
        length = left.length + right.length
        fp = (left.fp + left.rpow * right.fp) % _PRIME
        rpow = (left.rpow * right.rpow) % _PRIME
        same_kind = left.all_same and right.all_same and left.first_kind == right.first_kind
        if left.all_same and right.first_kind == left.first_kind:
            prefix = left.length + right.prefix_run
        else:
            prefix = left.prefix_run
        return _Node(
            left,
            right,
            None,
            length,
            1 + max(left.height, right.height),
            fp,
            rpow,
            left.first_kind,
            prefix,
            same_kind,
        )

    def _join(self, l, r):
        if l is None:
            return r
        if r is None:
            return l
        if abs(l.height - r.height) <= 1:
            return self._mk(l, r)
        if l.height > r.height:
            # descend along l's right spine
            if l.right.height >= l.left.height:
                mid = self._join(l.right, r)
                return self._balance(l.left, mid)
            return self._balance_join_right(l, r)
        if r.left.height >= r.right.height:
            mid = self._join(l, r.left)
            return self._balance(mid, r.right)
        return self._balance_join_left(l, r)

    def _balance_join_right(self, l, r):
        mid = self._join(l.right, r)
        return self._balance(l.left, mid)

    def _balance_join_left(self, l, r):
        mid = self._join(l, r.left)
        return self._balance(mid, r.right)

    def _balance(self, l, r):
        if abs(l.height - r.height) <= 1:
            return self._mk(l, r)
        if l.height > r.height + 1:
            if l.left.height >= l.right.height:
                return self._mk(l.left, self._balance(l.right, r))
            ll, lr = l.left, l.right
            return self._mk(self._mk(ll, lr.left), self._balance(lr.right, r))
        if r.right.height >= r.left.height:
            return self._mk(self._balance(l, r.left), r.right)
        rl, rr = r.left, r.right
        return self._mk(self._balance(l, rl.left), self._mk(rl.right, rr))

    def _build(self, symbols):
        if not symbols:
            return None
        if len(symbols) == 1:
            return self._leaf(symbols[0])
        mid = len(symbols) // 2
        return self._mk(self._build(symbols[:mid]), self._build(symbols[mid:]))

    def _split_node(self, node, k):
        """(prefix of length k, rest); both balanced."""
        if node is None or k <= 0:
            return None, node
        if k >= node.length:
            return node, None
        if node.sym is not None:
            return (node, None) if k >= 1 else (None, node)
        ll = node.left.length
        if k < ll:
            a, b = self._split_node(node.left, k)
            return a, self._join(b, node.right)
        if k == ll:
            return node.left, node.right
        a, b = self._split_node(node.right, k - ll)
        return self._join(node.left, a), b

    # -- public operations -------------------------------------------------

    def _handle(self, node, tnode):
        h = StrHandle(self, node, tnode, self._next_uid)
        self._next_uid += 1
        return h

    def _check(self, *handles):
        for h in handles:
            if h.coll is not self:
                raise ValueError("handle belongs to a different collection")

    def add(self, content: Sequence) -> StrHandle:
        content = list(content)
        node = self._build(content)
        tnode = None
        if all(isinstance(s, ParenSymbol) for s in content):
            tnode = self._build([s.flipped() for s in reversed(content)])
        return self._handle(node, tnode)

    def concat(self, a: StrHandle, b: StrHandle) -> StrHandle:
        self._check(a, b)
        node = self._join(a.node, b.node)
        tnode = None
        if a.tnode is not None or a.node is None:
            if b.tnode is not None or b.node is None:
                tnode = self._join(b.tnode, a.tnode)
        return self._handle(node, tnode)

    def split(self, x: StrHandle, k: int):
        self._check(x)
        if not 0 <= k <= len(x):
            raise IndexError(k)
        l, r = self._split_node(x.node, k)
        tl = tr = None
        if x.tnode is not None:
            t_r, t_l = self._split_node(x.tnode, len(x) - k)
            tl, tr = t_l, t_r
        has_t = x.tnode is not None or x.node is None
        return (
            self._handle(l, tl if has_t else None),
            self._handle(r, tr if has_t else None),
        )

    def lcp(self, a: StrHandle, b: StrHandle) -> int:
        self._check(a, b)
        lo, hi = 0, min(len(a), len(b))
        # binary search on prefix fingerprints
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._prefix_fp(a.node, mid) == self._prefix_fp(b.node, mid):
                lo = mid
            else:
                hi = mid - 1
        return lo

    def _prefix_fp(self, node, k):
        fp = 0
        rpow = 1
        while k > 0:
            if k >= node.length:
                fp = (fp + rpow * node.fp) % _PRIME
                rpow = (rpow * node.rpow) % _PRIME
                break
            if node.sym is not None:
                break
            if k >= node.left.length:
                fp = (fp + rpow * node.left.fp) % _PRIME
                rpow = (rpow * node.left.rpow) % _PRIME
                k -= node.left.length
                node = node.right
            else:
                node = node.left
        return fp

    def add_transpose(self, x: StrHandle) -> StrHandle:
        self._check(x)
        if x.node is not None and x.tnode is None:
            raise ValueError("transpose requires parenthesis content")
        return self._handle(x.tnode, x.node)

    def lmp_query(self, x: StrHandle) -> int:
        self._check(x)
        if x.node is None:
            return 0
        if x.node.first_kind is None:
            raise ValueError("longest monotone prefix requires parenthesis content")
        return x.node.prefix_run

    def ipm(self, pattern: StrHandle, text: StrHandle) -> IpmResult:
        self._check(pattern, text)
        if len(pattern) == 0:
            raise ValueError("empty pattern")
        if len(text) >= 2 * len(pattern):
            raise ValueError("ipm requires |text| < 2 |pattern|")
        occs = []
        pfp = pattern.node.fp if pattern.node is not None else 0
        for s in range(0, len(text) - len(pattern) + 1):
            if self._range_fp(text.node, s, s + len(pattern)) == pfp:
                occs.append(s)
        if not occs:
            return IpmResult(0, 0, 0)
        if len(occs) == 1:
            return IpmResult(occs[0], 0, 1)
        diff = occs[1] - occs[0]
        assert all(occs[i + 1] - occs[i] == diff for i in range(len(occs) - 1)), (
            "occurrences of a long pattern must form an arithmetic progression"
        )
        return IpmResult(occs[0], diff, len(occs))

    def _range_fp(self, node, i, j):
        """Fingerprint of content[i..j), from O(log n) whole-subtree pieces."""
        pieces = []

        def collect(node, i, j):
            if node is None or i >= j:
                return
            if i <= 0 and j >= node.length:
                pieces.append((node.fp, node.rpow))
                return
            if node.sym is not None:
                return
            ll = node.left.length
            if i < ll:
                collect(node.left, i, min(j, ll))
            if j > ll:
                collect(node.right, max(0, i - ll), j - ll)

        collect(node, i, j)
        fp = 0
        rpow = 1
        for piece_fp, piece_rpow in pieces:
            fp = (fp + rpow * piece_fp) % _PRIME
            rpow = (rpow * piece_rpow) % _PRIME
        return fp

    def materialize(self, x: StrHandle) -> list:
        self._check(x)
        out = []
        stack = [x.node]
        while stack:
            node = stack.pop()
            if node is None:
                continue
            if node.sym is not None:
                out.append(node.sym)
            else:
                stack.append(node.right)
                stack.append(node.left)
        return out

    def content_equal(self, a: StrHandle, b: StrHandle) -> bool:
        self._check(a, b)
        if len(a) != len(b):
            return False
        fa = a.node.fp if a.node is not None else 0
        fb = b.node.fp if b.node is not None else 0
        return fa == fb

    # -- convenience point edits (built from split/concat) -----------------

    def slice(self, x: StrHandle, i: int, j: int) -> StrHandle:
        _, rest = self.split(x, i)
        part, _ = self.split(rest, j - i)
        return part

    def insert_sym(self, x: StrHandle, pos: int, sym) -> StrHandle:
        l, r = self.split(x, pos)
        return self.concat(self.concat(l, self.add([sym])), r)

    def delete_sym(self, x: StrHandle, pos: int) -> StrHandle:
        l, r = self.split(x, pos)
        _, r2 = self.split(r, 1)
        return self.concat(l, r2)

    def replace_sym(self, x: StrHandle, pos: int, sym) -> StrHandle:
        l, r = self.split(x, pos)
        _, r2 = self.split(r, 1)
        return self.concat(self.concat(l, self.add([sym])), r2)

    def get_sym(self, x: StrHandle, pos: int):
        if not 0 <= pos < len(x):
            raise IndexError(pos)
        node = x.node
        while node.sym is None:
            if pos < node.left.length:
                node = node.left
            else:
                pos -= node.left.length
                node = node.right
        return node.sym
