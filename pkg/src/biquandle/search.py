"""Completion of partial biquandle matrices and exhaustive enumeration.

A pattern is a block matrix with entries in ``0..n``; ``0`` marks a blank.
:func:`biqfill` propagates constraints to a fixed point, :func:`biqlist`
branches on blanks and collects every completion that is a biquandle.

Propagated constraints:

* every block column is a permutation;
* every block row has exactly one entry equal to its column number, and
  such entries pair up across blocks (M4[a][x] = x iff M2[x][a] = a, etc.);
* the type II equations S^-1 S = S S^-1 = id for the switch
  S(a, b) = (b_a, a^b);
* the braid relation for S in all six valid crossing-sign patterns, which
  covers the all-positive and all-negative type III axioms plus the
  mixed-sign consequences.
"""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional, Sequence

from .core import BiquandleError, BiquandleMatrix, axiom_failure


@dataclass(frozen=True)
class BiquandlePattern:
    """Partial block matrix.  ``cells`` is the flat block-major list of entries."""

    order: int
    cells: tuple

    def __post_init__(self):
        n = self.order
        if not isinstance(n, int) or n < 1:
            raise BiquandleError(f"order must be a positive integer, got {n!r}")
        cells = tuple(self.cells)
        if len(cells) != 4 * n * n:
            raise BiquandleError(f"pattern of order {n} needs {4 * n * n} cells")
        for x in cells:
            if not isinstance(x, int) or not 0 <= x <= n:
                raise BiquandleError(f"pattern entry {x!r} outside 0..{n}")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def blank(cls, n: int) -> "BiquandlePattern":
        return cls(n, (0,) * (4 * n * n))

    @classmethod
    def from_blocks(cls, n: int, blocks) -> "BiquandlePattern":
        blocks = list(blocks)
        if len(blocks) != 4 or any(len(b) != n or any(len(r) != n for r in b) for b in blocks):
            raise BiquandleError(f"expected four {n}x{n} tables")
        return cls(n, tuple(int(x) for b in blocks for row in b for x in row))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BiquandlePattern":
        rows = [list(r) for r in rows]
        if len(rows) % 2 or not rows:
            raise BiquandleError("block matrix must have an even, positive number of rows")
        n = len(rows) // 2
        if any(len(r) != 2 * n for r in rows):
            raise BiquandleError(f"every row must have {2 * n} entries")
        blocks = (
            [r[:n] for r in rows[:n]],
            [r[n:] for r in rows[:n]],
            [r[:n] for r in rows[n:]],
            [r[n:] for r in rows[n:]],
        )
        return cls.from_blocks(n, blocks)

    @classmethod
    def from_matrix(cls, B: BiquandleMatrix) -> "BiquandlePattern":
        return cls.from_blocks(B.order, B.blocks)

    def get(self, block: int, row: int, col: int) -> int:
        n = self.order
        return self.cells[(block - 1) * n * n + (row - 1) * n + col - 1]

    def blocks(self) -> tuple:
        n, c = self.order, self.cells
        return tuple(
            tuple(tuple(c[(k * n + i) * n:(k * n + i + 1) * n]) for i in range(n))
            for k in range(4)
        )

    def rows(self) -> list:
        m1, m2, m3, m4 = self.blocks()
        return [list(a) + list(b) for a, b in zip(m1, m2)] + [
            list(a) + list(b) for a, b in zip(m3, m4)
        ]

    def blanks(self) -> int:
        return self.cells.count(0)

    def is_complete(self) -> bool:
        return 0 not in self.cells

    def to_matrix(self) -> BiquandleMatrix:
        if not self.is_complete():
            raise BiquandleError("pattern still has blanks")
        return BiquandleMatrix(self.order, self.blocks())

    def __str__(self) -> str:
        from .formats import format_biq

        return format_biq(self)


class _Contradiction(Exception):
    pass


class _Layout:
    """Index tables and compiled equations for one order."""

    def __init__(self, n: int):
        self.n = n
        nn = n * n
        self.size = 4 * nn
        self.colnum = [0] * self.size
        self.col_of = [None] * self.size
        self.row_of = [None] * self.size
        self.columns = []
        self.block_rows = []
        for k in range(4):
            for j in range(n):
                col = tuple(k * nn + i * n + j for i in range(n))
                self.columns.append(col)
                for p in col:
                    self.col_of[p] = col
            for i in range(n):
                row = tuple(k * nn + i * n + j for j in range(n))
                self.block_rows.append((k + 1, i + 1, row))
                for j, p in enumerate(row):
                    self.row_of[p] = row
                    self.colnum[p] = j + 1
        self.equations = [
            (_compile(lhs, n), _compile(rhs, n)) for lhs, rhs in _equations(n)
        ]

    def pos(self, block: int, row: int, col: int) -> int:
        n = self.n
        return (block - 1) * n * n + (row - 1) * n + col - 1


@functools.lru_cache(maxsize=None)
def _layout(n: int) -> _Layout:
    return _Layout(n)


# Symbolic terms: an int is an element constant, (k, x, y) is M_k[x][y].
def _S(x, y):
    return (4, y, x), (2, x, y)


def _Sinv(x, y):
    return (1, y, x), (3, x, y)


# (a, b, c) such that s1^a s2^b s1^c = s2^c s1^b s2^a holds in the braid group
_BRAID_SIGNS = (
    (1, 1, 1),
    (-1, -1, -1),
    (-1, 1, 1),
    (1, 1, -1),
    (1, -1, -1),
    (-1, -1, 1),
)


def _apply(word, triple):
    t = list(triple)
    for slot, sign in word:
        f = _S if sign > 0 else _Sinv
        t[slot], t[slot + 1] = f(t[slot], t[slot + 1])
    return t


def _equations(n: int):
    seen = set()
    out = []

    def add(lhs, rhs):
        if lhs == rhs:
            return
        key = (lhs, rhs) if repr(lhs) <= repr(rhs) else (rhs, lhs)
        if key not in seen:
            seen.add(key)
            out.append(key)

    elems = range(1, n + 1)
    # type II: S^-1 S = id and S S^-1 = id
    for a, b in product(elems, repeat=2):
        for first, second in ((_S, _Sinv), (_Sinv, _S)):
            x, y = first(a, b)
            u, v = second(x, y)
            add(u, a)
            add(v, b)
    for a, b, c in product(elems, repeat=3):
        for e1, e2, e3 in _BRAID_SIGNS:
            lhs = _apply([(0, e1), (1, e2), (0, e3)], (a, b, c))
            rhs = _apply([(1, e3), (0, e2), (1, e1)], (a, b, c))
            for s, t in zip(lhs, rhs):
                add(s, t)
    return out


def _compile(term, n):
    if isinstance(term, int):
        return term
    k, x, y = term
    return ((k - 1) * n * n, _compile(x, n), _compile(y, n))


def _value(t, cells, n):
    if t.__class__ is int:
        return t
    base, l, r = t
    x = l if l.__class__ is int else _value(l, cells, n)
    if not x:
        return 0
    y = r if r.__class__ is int else _value(r, cells, n)
    if not y:
        return 0
    return cells[base + (x - 1) * n + y - 1]


def _locate(t, cells, n):
    """Return (value, position) of a term; position is -1 when not yet determined."""
    if t.__class__ is int:
        return t, -1
    base, l, r = t
    x = l if l.__class__ is int else _value(l, cells, n)
    if not x:
        return 0, -1
    y = r if r.__class__ is int else _value(r, cells, n)
    if not y:
        return 0, -1
    p = base + (x - 1) * n + y - 1
    return cells[p], p


def _blockers(t, cells, n, out):
    """Value of t, appending every blank cell that currently blocks it to ``out``."""
    if t.__class__ is int:
        return t
    base, l, r = t
    x = l if l.__class__ is int else _blockers(l, cells, n, out)
    y = r if r.__class__ is int else _blockers(r, cells, n, out)
    if not x or not y:
        return 0
    p = base + (x - 1) * n + y - 1
    v = cells[p]
    if not v:
        out.append(p)
    return v


_PARTNER = (2, 3, 0, 1)  # block index pairs (M1, M3) and (M2, M4), 0-based


class _Filler:
    """Propagation state: cell values plus, per blank cell, the equations waiting on it."""

    def __init__(self, cells: list, lay: _Layout, watch: Optional[list] = None):
        self.cells = cells
        self.lay = lay
        self.watch = watch if watch is not None else [()] * lay.size
        self.queue = []
        self.dirty = set()
        self.changes = 0

    def put(self, p: int, v: int) -> None:
        cells = self.cells
        cur = cells[p]
        if cur == v:
            return
        if cur:
            raise _Contradiction
        lay = self.lay
        for q in lay.col_of[p]:
            if cells[q] == v:
                raise _Contradiction
        colnum = lay.colnum
        if v == colnum[p]:
            for q in lay.row_of[p]:
                if cells[q] == colnum[q]:
                    raise _Contradiction
        cells[p] = v
        self.changes += 1
        self.queue.append(p)
        self.dirty.add(p // (lay.n * lay.n))

    def allowed(self, p: int) -> List[int]:
        """Values that keep column p a partial permutation and its row fixable."""
        cells, lay = self.cells, self.lay
        n = lay.n
        colnum = lay.colnum
        used = {cells[q] for q in lay.col_of[p]}
        j = colnum[p]
        has_fixed = False
        other_spot = False
        for q in lay.row_of[p]:
            if q == p:
                continue
            c = cells[q]
            if c == colnum[q]:
                has_fixed = True
            elif c == 0 and all(cells[r] != colnum[q] for r in lay.col_of[q]):
                other_spot = True
        out = []
        for v in range(1, n + 1):
            if v in used:
                continue
            if v == j and has_fixed:
                continue
            if v != j and not has_fixed and not other_spot:
                # last place left in this row for its fixed entry
                continue
            out.append(v)
        return out

    # -- equations ------------------------------------------------------------

    def equation(self, e: int) -> None:
        lhs, rhs = self.lay.equations[e]
        cells, n = self.cells, self.lay.n
        while True:
            vl, pl = _locate(lhs, cells, n)
            vr, pr = _locate(rhs, cells, n)
            blocked = []
            if vl and vr:
                if vl != vr:
                    raise _Contradiction
                return
            if vl or vr:
                w, other, pos = (vl, rhs, pr) if vl else (vr, lhs, pl)
                if pos >= 0:
                    self.put(pos, w)
                    return
                if self._invert(other, w):
                    continue
                _blockers(other, cells, n, blocked)
            else:
                _blockers(lhs, cells, n, blocked)
                _blockers(rhs, cells, n, blocked)
            watch = self.watch
            for b in blocked:
                watch[b] += (e,)
            return

    def _invert(self, t, w: int) -> bool:
        """M_k[X][y] = w with y known and X a blank cell: read X off column y."""
        base, l, r = t
        if l.__class__ is int:
            return False
        cells, n = self.cells, self.lay.n
        y = r if r.__class__ is int else _value(r, cells, n)
        if not y:
            return False
        xv, xp = _locate(l, cells, n)
        if xv or xp < 0:
            return False
        for i in range(n):
            if cells[base + i * n + y - 1] == w:
                self.put(xp, i + 1)
                return True
        return False

    # -- row and column rules -------------------------------------------------

    def block_rules(self, k: int) -> None:
        """Column permutation and fixed-entry rules for block k (0-based)."""
        cells, lay = self.cells, self.lay
        n = lay.n
        nn = n * n
        colnum = lay.colnum
        for j in range(n):
            seen = set()
            blanks = []
            for q in range(k * nn + j, (k + 1) * nn, n):
                v = cells[q]
                if v:
                    if v in seen:
                        raise _Contradiction
                    seen.add(v)
                else:
                    blanks.append(q)
            if len(blanks) == 1:
                choices = self.allowed(blanks[0])
                if not choices:
                    raise _Contradiction
                self.put(blanks[0], choices[0])
            else:
                for q in blanks:
                    if not self.allowed(q):
                        raise _Contradiction
        partner = _PARTNER[k] * nn
        for a in range(n):
            row = range(k * nn + a * n, k * nn + (a + 1) * n)
            fixed = [q for q in row if cells[q] == colnum[q]]
            if len(fixed) > 1:
                raise _Contradiction
            if fixed:
                x = colnum[fixed[0]]
                # M_k[a][x] = x  forces  M_partner[x][a] = a
                self.put(partner + (x - 1) * n + a, a + 1)
                continue
            spots = [
                q
                for q in row
                if cells[q] == 0 and all(cells[r] != colnum[q] for r in lay.col_of[q])
            ]
            if not spots:
                raise _Contradiction
            if len(spots) == 1:
                self.put(spots[0], colnum[spots[0]])

    # -- drivers --------------------------------------------------------------

    def run(self) -> None:
        """Propagate until the queue of filled cells and dirty blocks is exhausted."""
        watch = self.watch
        while self.queue or self.dirty:
            while self.queue:
                p = self.queue.pop()
                waiting = watch[p]
                if waiting:
                    watch[p] = ()
                    for e in dict.fromkeys(waiting):
                        self.equation(e)
            dirty, self.dirty = self.dirty, set()
            for k in sorted(dirty):
                self.block_rules(k)

    def sweep(self) -> None:
        """Re-examine every equation and block from scratch, then propagate."""
        self.watch = [()] * self.lay.size
        self.queue = []
        self.dirty = set()
        for e in range(len(self.lay.equations)):
            self.equation(e)
        for k in range(4):
            self.block_rules(k)
        self.run()


def _check_position(P: BiquandlePattern, block, row, col) -> int:
    n = P.order
    if not (1 <= block <= 4 and 1 <= row <= n and 1 <= col <= n):
        raise BiquandleError(f"position ({block}, {row}, {col}) out of range")
    return _layout(n).pos(block, row, col)


def avail(P: BiquandlePattern, block: int, row: int, col: int) -> List[int]:
    """Ascending values that may fill a blank without breaking column or row rules.

    An empty list means the branch is dead.
    """
    p = _check_position(P, block, row, col)
    if P.cells[p]:
        raise BiquandleError(f"position ({block}, {row}, {col}) is not blank")
    return _Filler(list(P.cells), _layout(P.order)).allowed(p)


def _closure(cells: list, n: int) -> bool:
    """Full fixed point: sweep until a sweep changes nothing."""
    f = _Filler(cells, _layout(n))
    try:
        while True:
            before = f.changes
            f.sweep()
            if f.changes == before:
                return True
    except _Contradiction:
        return False


def biqfill(P: BiquandlePattern) -> Optional[BiquandlePattern]:
    """Propagate to a fixed point; None signals a contradiction."""
    cells = list(P.cells)
    if not _closure(cells, P.order):
        return None
    return BiquandlePattern(P.order, tuple(cells))


def _choose(cells: list, lay: _Layout):
    """Most constrained blank: fewest options, then most determined neighbours.

    Blanks of M2 and M4 go first.  Those two blocks are the switch itself, and
    once they are known the type II equations fill M1 and M3.
    """
    filler = _Filler(cells, lay)
    nn = lay.n * lay.n
    best = None
    for p, v in enumerate(cells):
        if v:
            continue
        options = filler.allowed(p)
        if len(options) <= 1:
            return p, options
        known = sum(1 for q in lay.col_of[p] if cells[q]) + sum(
            1 for q in lay.row_of[p] if cells[q]
        )
        score = (p // nn not in (1, 3), len(options), -known, p)
        if best is None or score < best[0]:
            best = (score, p, options)
    return best[1], best[2]


def ratezero(P: BiquandlePattern):
    """The blank ``(block, row, col)`` to branch on next, or None if complete."""
    if P.is_complete():
        return None
    n = P.order
    p, _ = _choose(list(P.cells), _layout(n))
    block, rest = divmod(p, n * n)
    row, col = divmod(rest, n)
    return block + 1, row + 1, col + 1


def _root(cells: list, n: int) -> Optional[_Filler]:
    f = _Filler(cells, _layout(n))
    try:
        f.sweep()
    except _Contradiction:
        return None
    return f


def _branch(f: _Filler, p: int, v: int) -> Optional[_Filler]:
    child = _Filler(list(f.cells), f.lay, list(f.watch))
    try:
        child.put(p, v)
        child.run()
    except _Contradiction:
        return None
    return child


def _expand(f: _Filler) -> list:
    p, options = _choose(f.cells, f.lay)
    return [c for c in (_branch(f, p, v) for v in options) if c is not None]


def _search(root: _Filler) -> Iterator[tuple]:
    stack = [root]
    while stack:
        cur = stack.pop()
        if 0 not in cur.cells:
            yield tuple(cur.cells)
            continue
        stack.extend(reversed(_expand(cur)))


def _accept(cells: tuple, n: int) -> Optional[BiquandleMatrix]:
    B = BiquandlePattern(n, cells).to_matrix()
    return B if axiom_failure(B) is None else None


def iter_completions(P: BiquandlePattern) -> Iterator[BiquandleMatrix]:
    """Depth-first stream of completions (search order, not canonical order)."""
    n = P.order
    root = _root(list(P.cells), n)
    if root is None:
        return
    for cells in _search(root):
        B = _accept(cells, n)
        if B is not None:
            yield B


def _subtree(args):
    cells, n = args
    root = _root(list(cells), n)
    if root is None:
        return []
    return [B for B in (_accept(c, n) for c in _search(root)) if B is not None]


def biqlist(P: BiquandlePattern, jobs: int = 1) -> List[BiquandleMatrix]:
    """All completions of P that are biquandles, sorted by row-major key."""
    n = P.order
    if jobs <= 1:
        found = set(iter_completions(P))
    else:
        root = _root(list(P.cells), n)
        if root is None:
            return []
        # split near the root, then explore the subtrees in worker processes
        frontier = [root]
        while len(frontier) < 4 * jobs and any(0 in f.cells for f in frontier):
            nxt = []
            for f in frontier:
                nxt.extend(_expand(f) if 0 in f.cells else [f])
            frontier = nxt
        found = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_subtree, [(tuple(f.cells), n) for f in frontier]):
                found.update(part)
    return sorted(found, key=BiquandleMatrix.key)


def enumerate_biquandles(n: int, jobs: int = 1) -> List[BiquandleMatrix]:
    return biqlist(BiquandlePattern.blank(n), jobs=jobs)
