"""Dynamic height tree of a parenthesis string with its logarithmic-bucket
heavy-light decomposition.

The tree itself is never materialized.  State is: two balanced trees over
the augmented character sequence (synthetic openers are prepended so every
closer has a partner), plus the set of heavy paths, each owning its heavy
string as a persistent handle.  Everything else (twins, parents, subtree
sizes, heavy children) is answered by range queries.

A character edit touches the ancestors of the edited position: their
partner closers shift by one node along that chain, which costs two string
edits per traversed heavy path, and only nodes at path boundaries can
change their floor-log subtree bucket and move between paths.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .balanced import MinHeightRangeTree, OrderTree
from .dynstr import StrCollection, StrHandle
from .paren import DUMMY_TYPE, ParenString, ParenSymbol, opener

_dummy_sym = opener(DUMMY_TYPE)


class CharCell:
    """One character of the augmented string; openers know their node."""

    __slots__ = ("is_open", "type_id", "hnode", "onode")

    def __init__(self, is_open: bool, type_id: int):
        self.is_open = is_open
        self.type_id = type_id
        self.hnode = None
        self.onode = None

    def symbol(self) -> ParenSymbol:
        return ParenSymbol(self.is_open, self.type_id)


class HNode:
    """A height-tree node: identified with its opening character."""

    __slots__ = ("open_cell", "pnode", "uid")
    _next_uid = 0

    def __init__(self, open_cell: CharCell):
        self.open_cell = open_cell
        open_cell.hnode = self
        self.pnode = None
        HNode.uid = None
        self.uid = HNode._next_uid
        HNode._next_uid += 1

    @property
    def is_dummy(self) -> bool:
        return self.open_cell.type_id == DUMMY_TYPE


class HeavyPath:
    """A light head plus its maximal chain of heavy descendants.

    ``members`` orders the nodes head-first; the heavy string is the
    members' openers in order followed by the present closers in reverse
    member order (nodes without a partner are a prefix of the path and
    contribute no closer).
    """

    _next_id = 0

    def __init__(self, state: "HeightForestState", k: int):
        self.state = state
        self.members = OrderTree()
        self.members.owner = self
        self.k = k
        self.handle: Optional[StrHandle] = None
        self.dummy_count = 0
        self.id = HeavyPath._next_id
        HeavyPath._next_id += 1

    def __len__(self):
        return len(self.members)

    def head(self) -> HNode:
        return self.members.select(0).val

    def tail(self) -> HNode:
        return self.members.select(len(self.members) - 1).val

    def rank(self, node: HNode) -> int:
        return self.members.rank(node.pnode)

    def n_closers(self) -> int:
        return len(self.handle) - len(self.members)

    # -- string surgery (every op also logs into the state's delta) --------

    def _edit(self, op: str, pos: int, sym=None):
        coll = self.state.coll
        if op == "ins":
            self.handle = coll.insert_sym(self.handle, pos, sym)
        elif op == "del":
            self.handle = coll.delete_sym(self.handle, pos)
        else:
            self.handle = coll.replace_sym(self.handle, pos, sym)
        self.state._delta.string_edits.append((self.id, op, pos, sym))
        self.state._delta.touched.add(self.id)


@dataclass
class HeavyStringDelta:
    """Everything one edit changed, for callers caching per-path values."""

    string_edits: List[tuple] = field(default_factory=list)
    dummy_ops: List[str] = field(default_factory=list)
    membership: List[tuple] = field(default_factory=list)
    touched: set = field(default_factory=set)
    removed_paths: set = field(default_factory=set)
    new_paths: set = field(default_factory=set)

    def count(self) -> int:
        return len(self.string_edits) + len(self.dummy_ops) + len(self.membership)

    def records(self):
        for pid, op, pos, sym in self.string_edits:
            yield {"kind": "str", "path": pid, "op": op, "pos": pos,
                   "sym": str(sym) if sym is not None else None}
        for op in self.dummy_ops:
            yield {"kind": "dummy", "op": op}
        for nid, old, new in self.membership:
            yield {"kind": "member", "node": nid, "from": old, "to": new}


@dataclass
class Edit:
    op: str  # "ins" | "del" | "sub"
    pos: int
    sym: Optional[ParenSymbol] = None


class StaleNodeError(KeyError):
    pass


class HeightForestState:
    """Height tree + heavy paths of one parenthesis string under edits."""

    def __init__(self, coll: Optional[StrCollection] = None):
        self.coll = coll if coll is not None else StrCollection()
        self.index = OrderTree()
        self.hts = MinHeightRangeTree()
        self.total = 0
        self.n_dummies = 0
        self.paths: dict = {}
        self._delta: Optional[HeavyStringDelta] = None

    # -- basic geometry -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.index)

    @property
    def user_len(self) -> int:
        return self.n - self.n_dummies

    def _pos(self, cell: CharCell) -> int:
        return self.index.rank(cell.onode)

    def _cell_at(self, pos: int) -> CharCell:
        return self.index.select(pos).val

    def _height(self, pos: int) -> int:
        return self.hts.height_at(pos)

    def _twin_pos(self, i: int) -> Optional[int]:
        """Partner position of the opener at i, or None."""
        h = self._height(i)
        if i + 1 < self.n:
            j = self.hts.first_leq(i + 1, h)
            if j is not None:
                return j - 1
        return self.n - 1 if self.total == h and self.n - 1 > i else None

    def _closer_twin_pos(self, j: int) -> int:
        """Partner opener position of the closer at j."""
        h_next = self._height(j) - 1
        p = self.hts.last_leq(j - 1, h_next) if j > 0 else None
        assert p is not None, "every closer has a partner after augmentation"
        return p

    def _parent_node(self, node: HNode) -> Optional[HNode]:
        if node.pnode is not None:
            r = OrderTree.tree_of(node.pnode).owner.rank(node)
            if r > 0:
                return OrderTree.tree_of(node.pnode).owner.members.select(r - 1).val
        i = self._pos(node.open_cell)
        return self._parent_at(i)

    def _parent_at(self, i: int) -> Optional[HNode]:
        if i == 0:
            return None
        p = self.hts.last_leq(i - 1, self._height(i) - 1)
        return self._cell_at(p).hnode if p is not None else None

    def _node_size(self, node: HNode) -> int:
        i = self._pos(node.open_cell)
        tw = self._twin_pos(i)
        if tw is not None:
            return (tw - i + 1) // 2
        total_opens = self.index.root.nopen if self.index.root is not None else 0
        return total_opens - self.index.nopen_prefix(i)

    def _k_of(self, node: HNode) -> int:
        return self._node_size(node).bit_length() - 1

    def path_of(self, node: HNode) -> HeavyPath:
        if node.pnode is None:
            raise StaleNodeError(node.uid)
        return OrderTree.tree_of(node.pnode).owner

    # -- spec query surface --------------------------------------------------

    def index_of(self, node: HNode) -> int:
        if node.is_dummy:
            raise ValueError("synthetic node has no user position")
        return self._pos(node.open_cell) - self.n_dummies

    def twin_index(self, node: HNode) -> Optional[int]:
        tw = self._twin_pos(self._pos(node.open_cell))
        return tw - self.n_dummies if tw is not None else None

    def subtree_size(self, node: HNode) -> int:
        return self._node_size(node)

    def node_at(self, user_pos: int) -> HNode:
        cell = self._cell_at(user_pos + self.n_dummies)
        if cell.is_open:
            return cell.hnode
        return self._cell_at(self._closer_twin_pos(user_pos + self.n_dummies)).hnode

    def range_query(self, i: int, h: int, fast: bool = False):
        """User-coordinate minimum height range query."""
        m = self.n_dummies
        if not 0 <= i < self.user_len:
            raise IndexError(i)
        r = self.hts.range_query(i + m, h + m, fast=fast)
        if r is None or r[1] < m:
            return None
        return (max(r[0], m) - m, r[1] - m)

    def heavy_child(self, node: HNode) -> Optional[HNode]:
        i = self._pos(node.open_cell)
        tw = self._twin_pos(i)
        lo = i + 1
        hi = (tw - 1) if tw is not None else self.n - 1
        if lo > hi:
            return None
        h_i = self._height(i)
        k_v = self._k_of(node)
        probes = [(lo + hi) // 2]
        if tw is None:
            probes.append(hi)
        seen = set()
        for mid in probes:
            c = self.hts.last_leq(mid, h_i + 1)
            assert c is not None and c >= lo
            if c in seen:
                continue
            seen.add(c)
            child = self._cell_at(c).hnode
            if self._k_of(child) == k_v:
                return child
        return None

    def user_string(self) -> ParenString:
        syms = [cell.symbol() for cell in self.index.values()]
        return ParenString(syms[self.n_dummies :])

    def augmented_string(self) -> ParenString:
        return ParenString(cell.symbol() for cell in self.index.values())

    def heavy_paths(self):
        return list(self.paths.values())

    def path_sides(self, path: HeavyPath) -> Tuple[StrHandle, StrHandle]:
        """(opener half without synthetic openers, transposed closer half)."""
        ell = len(path.members)
        left = self.coll.slice(path.handle, path.dummy_count, ell)
        right = self.coll.slice(path.handle, ell, len(path.handle))
        return left, self.coll.add_transpose(right)

    # -- construction ---------------------------------------------------------

    @classmethod
    def build(cls, x: Sequence[ParenSymbol], coll: Optional[StrCollection] = None):
        state = cls(coll)
        heights = [0]
        acc = 0
        for s in x:
            acc += 1 if s.is_open else -1
            heights.append(acc)
        m = max(0, -min(heights))
        syms = [_dummy_sym] * m + [ParenSymbol(s.is_open, s.type_id) for s in x]
        state.n_dummies = m
        acc = 0
        cells = []
        for s in syms:
            cell = CharCell(s.is_open, s.type_id)
            cell.onode = state.index.append(cell, 1 if s.is_open else 0)
            state.hts.insert_at(len(cells), acc)
            acc += 1 if s.is_open else -1
            cells.append(cell)
        state.total = acc
        # nodes + parents + twins by a stack pass
        nodes = []
        children = []
        roots = []
        stack = []  # (node_index, cell)
        twin_of = {}
        for pos, cell in enumerate(cells):
            if cell.is_open:
                node_idx = len(nodes)
                nodes.append(HNode(cell))
                children.append([])
                if stack:
                    children[stack[-1][0]].append(node_idx)
                else:
                    roots.append(node_idx)
                stack.append((node_idx, cell))
            else:
                top_idx, top_cell = stack.pop()
                twin_of[top_idx] = pos
        sizes = [0] * len(nodes)
        for idx in range(len(nodes) - 1, -1, -1):
            sizes[idx] = 1 + sum(sizes[c] for c in children[idx])
        heavy = [False] * len(nodes)
        for idx in range(len(nodes)):
            k = sizes[idx].bit_length() - 1
            for c in children[idx]:
                if sizes[c].bit_length() - 1 == k:
                    heavy[c] = True
        for idx in range(len(nodes)):
            if heavy[idx]:
                continue
            chain = [idx]
            cur = idx
            while True:
                nxt = None
                for c in children[cur]:
                    if heavy[c]:
                        nxt = c
                        break
                if nxt is None:
                    break
                chain.append(nxt)
                cur = nxt
            path = HeavyPath(state, sizes[idx].bit_length() - 1)
            text = []
            closers = []
            for node_idx in chain:
                node = nodes[node_idx]
                node.pnode = path.members.append(node)
                if node.is_dummy:
                    path.dummy_count += 1
                text.append(cells[[c for c in (node.open_cell,)][0] and 0].symbol() if False else node.open_cell.symbol())
                tw = twin_of.get(node_idx)
                if tw is not None:
                    closers.append(cells[tw].symbol())
            text.extend(reversed(closers))
            path.handle = state.coll.add(text)
            state.paths[path.id] = path
        return state

    # -- dynamic edits ---------------------------------------------------------

    def apply_edit(self, edit: Edit) -> HeavyStringDelta:
        self._delta = HeavyStringDelta()
        m = self.n_dummies
        if edit.op == "sub":
            j = edit.pos + m
            cell = self._cell_at(j)
            if cell.is_open == edit.sym.is_open:
                self._substitute_type(j, cell, edit.sym.type_id)
            else:
                self._char_edit(j, "del")
                self._fix_dummies()
                self._char_edit(edit.pos + self.n_dummies, "ins", edit.sym)
                self._fix_dummies()
        elif edit.op == "ins":
            self._char_edit(edit.pos + m, "ins", edit.sym)
            self._fix_dummies()
        elif edit.op == "del":
            self._char_edit(edit.pos + m, "del")
            self._fix_dummies()
        else:
            raise ValueError(edit.op)
        delta, self._delta = self._delta, None
        return delta

    def _substitute_type(self, j: int, cell: CharCell, new_type: int):
        cell.type_id = new_type
        if cell.is_open:
            node = cell.hnode
            path = self.path_of(node)
            path._edit("rep", path.rank(node), cell.symbol())
        else:
            owner = self._cell_at(self._closer_twin_pos(j)).hnode
            path = self.path_of(owner)
            r = path.rank(owner)
            path._edit("rep", 2 * len(path.members) - 1 - r, cell.symbol())

    def _fix_dummies(self):
        m = self.n_dummies
        lo = self.hts.min_in(m, self.n)
        mu = self.total if lo is None else min(lo, self.total)
        mu -= m
        if mu < 0:
            self._delta.dummy_ops.append("add")
            self._char_edit(0, "ins", _dummy_sym)
            self.n_dummies = m + 1
        elif mu > 0 and m > 0:
            top = self._cell_at(0)
            assert top.hnode.is_dummy and self._twin_pos(0) is None
            self._delta.dummy_ops.append("remove")
            self._char_edit(0, "del")
            self.n_dummies = m - 1

    # The edit engine ----------------------------------------------------------

    def _char_edit(self, j: int, op: str, sym: Optional[ParenSymbol] = None):
        grow = (op == "ins" and sym.is_open) or (
            op == "del" and not self._cell_at(j).is_open
        )

        # 1. snapshot: the ancestor chain of the edit position, bottom-up.
        del_cell = self._cell_at(j) if op == "del" else None
        deepest = self._chain_start(j, op, del_cell)
        chain = []  # (path, deep_node, head_twin(sym or None), deep_twin(sym or None))
        cur = deepest
        while cur is not None:
            path = self.path_of(cur)
            head = path.head()
            chain.append(
                (
                    path,
                    cur,
                    self._twin_sym_of(head),
                    self._twin_sym_of(cur) if cur is not head else None,
                )
            )
            cur = self._parent_node(head)
        # normalize: deep twin snapshot for single-node entries
        chain = [
            (p, d, ht, ht if dt is None and d is p.head() else dt)
            for (p, d, ht, dt) in chain
        ]

        w_node = del_cell.hnode if (op == "del" and del_cell.is_open) else None
        w_matched_sym = self._twin_sym_of(w_node) if w_node is not None else None

        # 2. raw character edit on both balanced trees.
        if op == "ins":
            h_here = self._height(j) if j < self.n else self.total
            cell = CharCell(sym.is_open, sym.type_id)
            self.hts.insert_at(j, h_here)
            self.hts.add_suffix(j + 1, 1 if sym.is_open else -1)
            cell.onode = self.index.insert_at(j, cell, 1 if sym.is_open else 0)
            self.total += 1 if sym.is_open else -1
        else:
            self.hts.delete_at(j)
            self.hts.add_suffix(j, -1 if del_cell.is_open else 1)
            self.index.delete_node(del_cell.onode)
            self.total -= 1 if del_cell.is_open else -1

        # 3. drop a deleted node from its path before anything else.
        if w_node is not None:
            self._unlink(w_node, matched_sym=w_matched_sym)

        # 4. partner telescope along the chain.
        if grow:
            # every chain node takes its parent's closer; the deepest one's
            # closer leaves (deleted, or captured by the new node).
            for idx, (path, deep, head_twin, deep_twin) in enumerate(chain):
                incoming = chain[idx + 1][3] if idx + 1 < len(chain) else None
                ell = len(path.members)
                if deep_twin is not None:
                    path._edit("del", 2 * ell - 1 - path.rank(deep))
                if incoming is not None:
                    path._edit("ins", len(path.handle), incoming)
        else:
            # every chain node takes its Type II child's closer; the top
            # one's closer is orphaned (a synthetic opener will claim it).
            below = None
            if op == "ins":
                below = sym  # the new closer itself
            elif w_node is not None:
                below = w_matched_sym
            for idx, (path, deep, head_twin, deep_twin) in enumerate(chain):
                incoming = below if idx == 0 else chain[idx - 1][2]
                ell = len(path.members)
                if head_twin is not None:
                    path._edit("del", len(path.handle) - 1)
                if incoming is not None:
                    path._edit("ins", 2 * ell - 1 - path.rank(deep), incoming)

        # 5. a new opener becomes a node and is placed among the paths.
        if op == "ins" and sym.is_open:
            new_node = HNode(cell)
            self._place(new_node)

        # 6. nodes whose floor-log bucket changed move between paths.
        for path, deep, head_twin, deep_twin in chain:
            cand = path.head() if grow else deep
            if cand.pnode is None:
                continue  # already moved (e.g. merged away)
            cur_path = self.path_of(cand)
            if cur_path is not path:
                continue
            k_new = self._k_of(cand)
            if k_new == path.k:
                continue
            r = path.rank(cand)
            if grow:
                assert r == 0, "only light heads can change bucket on growth"
            else:
                assert r == len(path.members) - 1, (
                    "only tail nodes can change bucket on shrink"
                )
            self._unlink(cand, matched_sym=self._twin_sym_of(cand))
            self._place(cand)

    def _chain_start(self, j: int, op: str, del_cell) -> Optional[HNode]:
        if op == "del":
            if del_cell.is_open:
                return self._parent_node(del_cell.hnode)
            return self._cell_at(self._closer_twin_pos(j)).hnode
        if j == 0:
            return None
        c = self._cell_at(j - 1)
        if c.is_open:
            return c.hnode
        return self._parent_node(
            self._cell_at(self._closer_twin_pos(j - 1)).hnode
        )

    def _twin_sym_of(self, node: Optional[HNode]):
        if node is None:
            return None
        tw = self._twin_pos(self._pos(node.open_cell))
        return self._cell_at(tw).symbol() if tw is not None else None

    # -- path membership surgery -------------------------------------------

    def _record_member(self, node: HNode, old, new):
        self._delta.membership.append(
            (node.uid, old.id if old else None, new.id if new else None)
        )
        if old is not None:
            self._delta.touched.add(old.id)
        if new is not None:
            self._delta.touched.add(new.id)

    def _unlink(self, node: HNode, matched_sym):
        path = self.path_of(node)
        r = path.rank(node)
        ell = len(path.members)
        if matched_sym is not None:
            path._edit("del", 2 * ell - 1 - r)
        path._edit("del", r)
        path.members.delete_node(node.pnode)
        node.pnode = None
        if node.is_dummy:
            path.dummy_count -= 1
        self._record_member(node, path, None)
        if len(path.members) == 0:
            del self.paths[path.id]
            self._delta.removed_paths.add(path.id)
            self._delta.touched.discard(path.id)

    def _new_path(self, k: int) -> HeavyPath:
        path = HeavyPath(self, k)
        path.handle = self.coll.add([])
        self.paths[path.id] = path
        self._delta.new_paths.add(path.id)
        self._delta.touched.add(path.id)
        return path

    def _attach(self, node: HNode, path: HeavyPath, rank: int, matched_sym):
        node.pnode = path.members.insert_at(rank, node)
        ell = len(path.members)
        path._edit("ins", rank, node.open_cell.symbol())
        if matched_sym is not None:
            path._edit("ins", 2 * ell - 1 - rank, matched_sym)
        if node.is_dummy:
            path.dummy_count += 1
        self._record_member(node, None, path)

    def _place(self, node: HNode):
        k_new = self._k_of(node)
        msym = self._twin_sym_of(node)
        par = self._parent_at(self._pos(node.open_cell))
        if par is not None and self._k_of(par) == k_new:
            path = self.path_of(par)
            self._attach(node, path, path.rank(par) + 1, msym)
            return
        hc = self.heavy_child(node)
        if hc is not None:
            q = self.path_of(hc)
            r = q.rank(hc)
            if r > 0:
                assert q.members.select(r - 1).val is par, (
                    "a buried heavy child must directly follow the parent"
                )
                q = self._split_path(q, r)
            self._attach(node, q, 0, msym)
            return
        path = self._new_path(k_new)
        self._attach(node, path, 0, msym)
        path.k = k_new

    def _split_path(self, path: HeavyPath, rank: int) -> HeavyPath:
        """Members [rank:] move to a fresh path (same bucket)."""
        ell = len(path.members)
        mcount = path.n_closers()
        cut = 2 * ell - max(ell - mcount, rank)
        coll = self.coll
        keep_open, rest = coll.split(path.handle, rank)
        moved_open, closers = coll.split(rest, ell - rank)
        moved_close, keep_close = coll.split(closers, cut - ell)
        new = self._new_path(path.k)
        a, b = path.members._split(path.members.root, rank)
        path.members.root = a
        if a is not None:
            a.parent = None
            a.treeref = path.members
        new.members.root = b
        if b is not None:
            b.parent = None
            b.treeref = new.members
        moved_dummies = sum(1 for n in new.members if n.val.is_dummy)
        path.dummy_count -= moved_dummies
        new.dummy_count = moved_dummies
        path.handle = coll.concat(keep_open, keep_close)
        new.handle = coll.concat(moved_open, moved_close)
        self._delta.string_edits.append((path.id, "split", rank, None))
        self._delta.touched.add(path.id)
        self._delta.touched.add(new.id)
        for n in new.members:
            self._record_member(n.val, path, new)
        return new
