"""Typed parenthesis strings: heights, twins, Dyck membership, transpose,
monotone prefixes, LR-decomposition and the neighbor-pair fixed point.

A symbol is an opening or closing parenthesis with an integer type id.
Two symbols match iff one opens, the other closes, and the type ids agree.
All values here are immutable; the dynamic machinery lives elsewhere.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Sequence

# Type ids 0, 1, 2 have the shorthand spellings () [] {}.
_OPEN_SHORT = {"(": 0, "[": 1, "{": 2}
_CLOSE_SHORT = {")": 0, "]": 1, "}": 2}
_SHORT_OPEN = {v: k for k, v in _OPEN_SHORT.items()}
_SHORT_CLOSE = {v: k for k, v in _CLOSE_SHORT.items()}

# Reserved type id for synthetic opening parentheses prepended to cover
# unmatched closers.  User input must never produce it.
DUMMY_TYPE = -1


class ParenSymbol(NamedTuple):
    is_open: bool
    type_id: int

    def matches(self, other: "ParenSymbol") -> bool:
        return self.is_open and not other.is_open and self.type_id == other.type_id

    def flipped(self) -> "ParenSymbol":
        return ParenSymbol(not self.is_open, self.type_id)

    def __str__(self) -> str:
        table = _SHORT_OPEN if self.is_open else _SHORT_CLOSE
        if self.type_id in table:
            return table[self.type_id]
        return ("(%d" if self.is_open else ")%d") % self.type_id


def opener(type_id: int) -> ParenSymbol:
    return ParenSymbol(True, type_id)


def closer(type_id: int) -> ParenSymbol:
    return ParenSymbol(False, type_id)


class ParenString(tuple):
    """An immutable sequence of ParenSymbol values."""

    __slots__ = ()

    def __new__(cls, symbols: Iterable[ParenSymbol] = ()):
        return super().__new__(cls, tuple(symbols))

    def __repr__(self) -> str:
        return "ParenString(%r)" % self.text()

    def text(self) -> str:
        """Render using shorthand where possible, else "(t"/")t" tokens.

        Token output is whitespace separated whenever any symbol needs the
        explicit form, so it round-trips through :func:`parse`.
        """
        if all(0 <= s.type_id <= 2 for s in self):
            return "".join(str(s) for s in self)
        return " ".join(str(s) for s in self)

    def __getitem__(self, idx):
        result = super().__getitem__(idx)
        if isinstance(idx, slice):
            return ParenString(result)
        return result

    def __add__(self, other):
        return ParenString(tuple(self) + tuple(other))


def parse(text: str) -> ParenString:
    """Parse the fixture encoding: whitespace-separated tokens "(t" / ")t"
    with a decimal type id, or runs of the shorthand characters "()[]{}"
    (type ids 0, 1, 2)."""
    symbols = []
    for word in text.split():
        if len(word) > 1 and word[0] in "()" and word[1:].lstrip("-").isdigit():
            tid = int(word[1:])
            symbols.append(opener(tid) if word[0] == "(" else closer(tid))
            continue
        for ch in word:
            if ch in _OPEN_SHORT:
                symbols.append(opener(_OPEN_SHORT[ch]))
            elif ch in _CLOSE_SHORT:
                symbols.append(closer(_CLOSE_SHORT[ch]))
            else:
                raise ValueError("bad parenthesis token %r" % word)
    return ParenString(symbols)


def height_profile(x: Sequence[ParenSymbol]) -> list:
    """h(0..n) with h(0)=0 and steps +1 per opener, -1 per closer."""
    h = [0] * (len(x) + 1)
    acc = 0
    for i, s in enumerate(x):
        acc += 1 if s.is_open else -1
        h[i + 1] = acc
    return h


def twin(x: Sequence[ParenSymbol], i: int) -> Optional[int]:
    """The unique partner index of x[i] at equal height, or None.

    For an opener i this is the first j > i with h(j+1) == h(i); for a
    closer it is the last j < i with h(j) == h(i+1).
    """
    n = len(x)
    if not 0 <= i < n:
        raise IndexError(i)
    h = height_profile(x)
    if x[i].is_open:
        target = h[i]
        for j in range(i + 1, n):
            if h[j + 1] == target:
                return j
        return None
    target = h[i + 1]
    for j in range(i - 1, -1, -1):
        if h[j] == target:
            return j
    return None


def is_dyck(x: Sequence[ParenSymbol]) -> bool:
    stack = []
    for s in x:
        if s.is_open:
            stack.append(s.type_id)
        else:
            if not stack or stack[-1] != s.type_id:
                return False
            stack.pop()
    return not stack


def transpose(x: Sequence[ParenSymbol]) -> ParenString:
    """Reverse and flip every symbol's direction, keeping its type."""
    return ParenString(s.flipped() for s in reversed(x))


def lmp(x: Sequence[ParenSymbol]) -> int:
    """Length of the longest all-opening or all-closing prefix."""
    if not x:
        return 0
    kind = x[0].is_open
    run = 0
    for s in x:
        if s.is_open != kind:
            break
        run += 1
    return run


class LrSegment(NamedTuple):
    start: int
    end: int
    open_len: int
    close_len: int
    start_height_open: int
    start_height_close: int


class LRDecomposition(NamedTuple):
    segments: tuple

    def slices(self, x: "ParenString") -> list:
        return [x[s.start : s.end] for s in self.segments]


def lr_decompose(x: Sequence[ParenSymbol]) -> LRDecomposition:
    """Partition into maximal runs of openers followed by closers."""
    h = height_profile(x)
    segments = []
    n = len(x)
    i = 0
    while i < n:
        start = i
        while i < n and x[i].is_open:
            i += 1
        open_len = i - start
        close_start = i
        while i < n and not x[i].is_open:
            i += 1
        segments.append(
            LrSegment(start, i, open_len, i - close_start, h[start], h[close_start])
        )
    return LRDecomposition(tuple(segments))


def reduce_hat(x: Sequence[ParenSymbol]) -> ParenString:
    """Fixed point of deleting adjacent matching opener/closer pairs.

    One left-to-right stack pass; the removal order does not affect the
    result (asserted by tests against the naive repeated scan).
    """
    out = []
    for s in x:
        if out and not s.is_open and out[-1].is_open and out[-1].type_id == s.type_id:
            out.pop()
        else:
            out.append(s)
    return ParenString(out)


def outline(x: Sequence[ParenSymbol]) -> list:
    """0 per opener, 1 per closer."""
    return [0 if s.is_open else 1 for s in x]


def random_paren_string(rng, n: int, n_types: int = 2) -> ParenString:
    """Uniform random string of n typed symbols."""
    return ParenString(
        ParenSymbol(bool(rng.getrandbits(1)), rng.randrange(n_types)) for _ in range(n)
    )


def random_dyck_string(rng, n_pairs: int, n_types: int = 2) -> ParenString:
    """Random member of the Dyck language with n_pairs matched pairs."""
    out = []
    stack = []
    opens_left = n_pairs
    while opens_left or stack:
        if opens_left and (not stack or rng.random() < 0.55):
            t = rng.randrange(n_types)
            stack.append(t)
            out.append(opener(t))
            opens_left -= 1
        else:
            out.append(closer(stack.pop()))
    return ParenString(out)
