"""Brute-force reference implementations.

Ground truth for every approximate or dynamic component in the package.
Clarity beats speed here; inputs are hard-capped so an accidental large
call fails loudly instead of hanging.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Optional, Sequence, Tuple

from . import kernels
from .paren import ParenSymbol

STRING_CAP = 400
ENUM_NODE_CAP = 60


class CapExceeded(ValueError):
    pass


class EditCosts(NamedTuple):
    allow_substitution: bool = True
    allow_insertion: bool = True

    @classmethod
    def full(cls) -> "EditCosts":
        return cls(True, True)

    @classmethod
    def deletion_only(cls) -> "EditCosts":
        return cls(False, False)


def _intern(*seqs):
    table = {}
    out = []
    for seq in seqs:
        row = []
        for item in seq:
            if item not in table:
                table[item] = len(table)
            row.append(table[item])
        out.append(row)
    return out


def ed_exact(x: Sequence, y: Sequence, costs: EditCosts = EditCosts.full()) -> int:
    """Classic alignment DP; deletion-only mode bans substitutions."""
    if max(len(x), len(y)) > 5 * STRING_CAP:
        raise CapExceeded("ed_exact input too long")
    a, b = _intern(x, y)
    return kernels.ed(a, b, costs.allow_substitution)


def ded_exact(x: Sequence[ParenSymbol], costs: EditCosts = EditCosts.full()) -> int:
    """Cubic interval DP for the Dyck edit distance of one string."""
    if len(x) > STRING_CAP:
        raise CapExceeded("ded_exact input too long (%d > %d)" % (len(x), STRING_CAP))
    return kernels.ded(kernels.encode_paren(x), costs.allow_substitution)


def _postorder_encoding(forest):
    """(lml, labels, keyroots) for Zhang-Shasha, wrapping the forest in a
    virtual root so the forest distance is a tree distance."""
    lml = []
    labels = []

    def walk(node):
        first_leaf = [None]
        for child in node.children:
            idx = walk(child)
            if first_leaf[0] is None:
                first_leaf[0] = idx
        labels.append(node.label)
        lml.append(first_leaf[0] if first_leaf[0] is not None else len(labels))
        return lml[-1]

    class _Virtual:
        label = ("#virtual-root#",)

        def __init__(self, children):
            self.children = children

    walk(_Virtual(list(forest.roots)))
    keyroots = {}
    for i, l in enumerate(lml, start=1):
        keyroots[l] = i
    return lml, labels, sorted(keyroots.values())


def ted_exact(f, g, costs: EditCosts = EditCosts.full()) -> int:
    """Zhang-Shasha forest distance; deletion-only bans relabeling.

    Accepts any forest-like object with ``roots`` whose nodes expose
    ``children`` and ``label``.
    """
    lml1, lab1, kr1 = _postorder_encoding(f)
    lml2, lab2, kr2 = _postorder_encoding(g)
    if max(len(lab1), len(lab2)) > STRING_CAP + 1:
        raise CapExceeded("ted_exact forest too large")
    both = _intern(lab1, lab2)
    return kernels.ted(lml1, both[0], kr1, lml2, both[1], kr2, costs.allow_substitution)


def _freeze(node) -> tuple:
    return (node.label, tuple(_freeze(c) for c in node.children))


def min_tree_alignment_cost(f, g) -> int:
    """Minimum cost of a valid tree alignment, by exhaustive recursion on
    forest pairs (independent of the Zhang-Shasha route).

    Costs are character edits on the parenthesis representations: deleting
    a node costs 2, aligning two nodes costs 0 or 2 by label equality.
    """
    ftup = tuple(_freeze(r) for r in f.roots)
    gtup = tuple(_freeze(r) for r in g.roots)
    if sum(1 for _ in _iter_nodes(ftup)) + sum(1 for _ in _iter_nodes(gtup)) > ENUM_NODE_CAP:
        raise CapExceeded("alignment enumeration forest too large")

    @lru_cache(maxsize=None)
    def aln(fs: tuple, gs: tuple) -> int:
        if not fs and not gs:
            return 0
        best = None
        if fs:
            label, kids = fs[0]
            best = 2 + aln(kids + fs[1:], gs)
        if gs:
            label, kids = gs[0]
            t = 2 + aln(fs, kids + gs[1:])
            best = t if best is None or t < best else best
        if fs and gs:
            (fl, fk), (gl, gk) = fs[0], gs[0]
            t = (0 if fl == gl else 2) + aln(fk, gk) + aln(fs[1:], gs[1:])
            best = t if t < best else best
        return best

    return aln(ftup, gtup)


def _iter_nodes(forest_tuple):
    for label, kids in forest_tuple:
        yield label
        yield from _iter_nodes(kids)


def heavy_light_reference(roots: Sequence[int], children: Sequence[Sequence[int]]):
    """From-scratch heavy/light labels over an adjacency forest.

    Returns (sizes, heavy) lists indexed by node id; heavy depth is
    floor(lg size) and a child is heavy iff its heavy depth equals the
    parent's.  Roots are always light.
    """
    n = len(children)
    sizes = [0] * n
    heavy = [False] * n
    order = []
    stack = [(r, False) for r in reversed(roots)]
    while stack:
        v, done = stack.pop()
        if done:
            sizes[v] = 1 + sum(sizes[c] for c in children[v])
            order.append(v)
        else:
            stack.append((v, True))
            for c in reversed(children[v]):
                stack.append((c, False))
    for v in range(n):
        hd_v = sizes[v].bit_length() - 1
        for c in children[v]:
            if sizes[c].bit_length() - 1 == hd_v:
                heavy[c] = True
    return sizes, heavy


def range_query_reference(heights: Sequence[int], i: int, h: int) -> Optional[Tuple[int, int]]:
    """Maximal [i..e] with every listed height > h, by linear scan."""
    if not 0 <= i < len(heights):
        raise IndexError(i)
    if heights[i] <= h:
        return None
    e = i
    while e + 1 < len(heights) and heights[e + 1] > h:
        e += 1
    return (i, e)
