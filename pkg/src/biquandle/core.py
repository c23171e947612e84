"""Finite biquandles as 2n x 2n block matrices.

Elements are ``1..n``.  A matrix is stored as four n x n blocks::

    [ M1 | M2 ]      M1[i][j] = i^{bar j}   (upper-left)
    [----+----]      M2[i][j] = i^j         (upper-right)
    [ M3 | M4 ]      M3[i][j] = i_{bar j}   (lower-left)
                     M4[i][j] = i_j         (lower-right)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence


class BiquandleError(ValueError):
    """Malformed input: bad dimensions, out-of-range entries, violated preconditions."""


class OpKind(enum.IntEnum):
    UPPER_LEFT = 1
    UPPER_RIGHT = 2
    LOWER_LEFT = 3
    LOWER_RIGHT = 4

    @property
    def obverse(self) -> "OpKind":
        return _OBVERSE[self]

    @property
    def flip(self) -> "OpKind":
        return _FLIP[self]

    @property
    def letter(self) -> str:
        return _LETTERS[self]

    @classmethod
    def from_letter(cls, ch: str) -> "OpKind":
        try:
            return _FROM_LETTER[ch]
        except KeyError:
            raise BiquandleError(f"unknown operation letter {ch!r}") from None


_OBVERSE = {
    OpKind.UPPER_LEFT: OpKind.UPPER_RIGHT,
    OpKind.UPPER_RIGHT: OpKind.UPPER_LEFT,
    OpKind.LOWER_LEFT: OpKind.LOWER_RIGHT,
    OpKind.LOWER_RIGHT: OpKind.LOWER_LEFT,
}
_FLIP = {
    OpKind.UPPER_LEFT: OpKind.LOWER_LEFT,
    OpKind.LOWER_LEFT: OpKind.UPPER_LEFT,
    OpKind.UPPER_RIGHT: OpKind.LOWER_RIGHT,
    OpKind.LOWER_RIGHT: OpKind.UPPER_RIGHT,
}
# uppercase = unbarred (right), lowercase = barred (left)
_LETTERS = {
    OpKind.UPPER_LEFT: "u",
    OpKind.UPPER_RIGHT: "U",
    OpKind.LOWER_LEFT: "l",
    OpKind.LOWER_RIGHT: "L",
}
_FROM_LETTER = {v: k for k, v in _LETTERS.items()}

Table = tuple  # tuple[tuple[int, ...], ...]


def _as_table(rows, n: int, lo: int, what: str) -> Table:
    try:
        table = tuple(tuple(int(x) for x in row) for row in rows)
    except (TypeError, ValueError):
        raise BiquandleError(f"{what}: entries must be integers") from None
    if len(table) != n or any(len(row) != n for row in table):
        raise BiquandleError(f"{what}: expected a {n}x{n} table")
    for row in table:
        for x in row:
            if not lo <= x <= n:
                raise BiquandleError(f"{what}: entry {x} outside {lo}..{n}")
    return table


def trivial_table(n: int) -> Table:
    """T_n: row i is constantly i."""
    return tuple((i,) * n for i in range(1, n + 1))


@dataclass(frozen=True)
class BiquandleMatrix:
    """A complete block matrix; entries are range-checked but axioms are not.

    Use :func:`biqtest` to decide whether the matrix is a biquandle.
    """

    order: int
    blocks: tuple  # (M1, M2, M3, M4)

    def __post_init__(self):
        n = self.order
        if not isinstance(n, int) or n < 1:
            raise BiquandleError(f"order must be a positive integer, got {n!r}")
        if len(self.blocks) != 4:
            raise BiquandleError("expected four blocks")
        blocks = tuple(
            _as_table(b, n, 1, f"block M{k}") for k, b in enumerate(self.blocks, 1)
        )
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BiquandleMatrix":
        """Build from the 2n x 2n layout [[M1|M2],[M3|M4]]."""
        rows = [list(r) for r in rows]
        if len(rows) % 2 or not rows:
            raise BiquandleError("block matrix must have an even, positive number of rows")
        n = len(rows) // 2
        if any(len(r) != 2 * n for r in rows):
            raise BiquandleError(f"every row must have {2 * n} entries")
        m1 = [r[:n] for r in rows[:n]]
        m2 = [r[n:] for r in rows[:n]]
        m3 = [r[:n] for r in rows[n:]]
        m4 = [r[n:] for r in rows[n:]]
        return cls(n, (m1, m2, m3, m4))

    @classmethod
    def trivial(cls, n: int) -> "BiquandleMatrix":
        t = trivial_table(n)
        return cls(n, (t, t, t, t))

    def op(self, k, a: int, b: int) -> int:
        return self.blocks[k - 1][a - 1][b - 1]

    def rows(self) -> list:
        m1, m2, m3, m4 = self.blocks
        top = [list(r1) + list(r2) for r1, r2 in zip(m1, m2)]
        bottom = [list(r3) + list(r4) for r3, r4 in zip(m3, m4)]
        return top + bottom

    def key(self) -> tuple:
        """Row-major flattening of the 2n x 2n layout; the canonical sort key."""
        return tuple(x for row in self.rows() for x in row)

    def __lt__(self, other: "BiquandleMatrix") -> bool:
        return (self.order, self.key()) < (other.order, other.key())

    def relabel(self, perm: Sequence[int]) -> "BiquandleMatrix":
        """Image under the bijection ``a -> perm[a-1]``."""
        n = self.order
        if sorted(perm) != list(range(1, n + 1)):
            raise BiquandleError(f"not a permutation of 1..{n}: {list(perm)}")
        inv = [0] * n
        for a, pa in enumerate(perm, 1):
            inv[pa - 1] = a
        blocks = []
        for m in self.blocks:
            blocks.append(
                tuple(
                    tuple(perm[m[inv[i] - 1][inv[j] - 1] - 1] for j in range(n))
                    for i in range(n)
                )
            )
        return BiquandleMatrix(n, tuple(blocks))

    def __str__(self) -> str:
        from .formats import format_biq

        return format_biq(self)


def eval_op(B: BiquandleMatrix, k, a: int, b: int) -> int:
    n = B.order
    if not (1 <= a <= n and 1 <= b <= n):
        raise BiquandleError(f"elements must lie in 1..{n}, got ({a}, {b})")
    return B.blocks[OpKind(k) - 1][a - 1][b - 1]


def _coerce_blocks(B) -> tuple:
    if isinstance(B, BiquandleMatrix):
        return B.order, B.blocks
    blocks = tuple(B)
    if len(blocks) != 4:
        raise BiquandleError("expected four blocks")
    n = len(blocks[0])
    if n < 1:
        raise BiquandleError("empty block")
    return n, tuple(_as_table(b, n, 1, f"block M{k}") for k, b in enumerate(blocks, 1))


def axiom_failure(B) -> Optional[str]:
    """Tag of the first violated axiom, e.g. ``"3(ii)"``, or None for a biquandle.

    Accepts a :class:`BiquandleMatrix` or four n x n tables.  Malformed input
    raises :class:`BiquandleError`.
    """
    n, (m1, m2, m3, m4) = _coerce_blocks(B)
    # shift to 0-based values for direct indexing
    M1 = [[x - 1 for x in r] for r in m1]
    M2 = [[x - 1 for x in r] for r in m2]
    M3 = [[x - 1 for x in r] for r in m3]
    M4 = [[x - 1 for x in r] for r in m4]
    N = range(n)

    for a in N:
        for b in N:
            if M1[M2[a][b]][M4[b][a]] != a:
                return "1(i)"
            if M3[M4[b][a]][M2[a][b]] != b:
                return "1(ii)"
            if M2[M1[a][b]][M3[b][a]] != a:
                return "1(iii)"
            if M4[M3[b][a]][M1[a][b]] != b:
                return "1(iv)"

    for a in N:
        for b in N:
            if not any(
                x == M2[a][M3[b][x]] and a == M1[x][b] and b == M4[M3[b][x]][a]
                for x in N
            ):
                return "2(i-iii)"
            if not any(
                y == M1[a][M4[b][y]] and a == M2[y][b] and b == M3[M4[b][y]][a]
                for y in N
            ):
                return "2(iv-vi)"

    for a in N:
        for b in N:
            ab, ba = M2[a][b], M4[b][a]
            abar_b, b_abar = M1[a][b], M3[b][a]
            for c in N:
                cb = M4[c][b]
                if M2[ab][c] != M2[M2[a][cb]][M2[b][c]]:
                    return "3(i)"
                if M4[cb][a] != M4[M4[c][ab]][ba]:
                    return "3(ii)"
                if M2[ba][M4[c][ab]] != M4[M2[b][c]][M2[a][cb]]:
                    return "3(iii)"
                cbbar = M3[c][b]
                if M1[abar_b][c] != M1[M1[a][cbbar]][M1[b][c]]:
                    return "3(iv)"
                if M3[cbbar][a] != M3[M3[c][abar_b]][b_abar]:
                    return "3(v)"
                if M1[b_abar][M3[c][abar_b]] != M3[M1[b][c]][M1[a][cbbar]]:
                    return "3(vi)"

    for a in N:
        if not any(M4[a][x] == x and M2[x][a] == a for x in N):
            return "4(i-ii)"
        if not any(M1[a][y] == y and M3[y][a] == a for y in N):
            return "4(iii-iv)"
    return None


def biqtest(B) -> bool:
    """True iff the four tables satisfy all 20 biquandle axioms."""
    return axiom_failure(B) is None


def obverse(B: BiquandleMatrix) -> BiquandleMatrix:
    m1, m2, m3, m4 = B.blocks
    return BiquandleMatrix(B.order, (m2, m1, m4, m3))


def flip(B: BiquandleMatrix) -> BiquandleMatrix:
    m1, m2, m3, m4 = B.blocks
    return BiquandleMatrix(B.order, (m3, m4, m1, m2))


def is_qbiq(B: BiquandleMatrix) -> bool:
    """Both lower blocks trivial, i.e. a quandle in disguise."""
    t = trivial_table(B.order)
    return B.blocks[2] == t and B.blocks[3] == t


def quandle_failure(Q) -> Optional[str]:
    n = len(Q)
    if n < 1:
        raise BiquandleError("empty quandle table")
    q = _as_table(Q, n, 1, "quandle table")
    for a in range(1, n + 1):
        if q[a - 1][a - 1] != a:
            return "(i)"
    for b in range(n):
        if len({q[a][b] for a in range(n)}) != n:
            return "(ii)"
    for a, b, c in product(range(n), repeat=3):
        # (a^b)^c == (a^c)^(b^c)
        if q[q[a][b] - 1][c] != q[q[a][c] - 1][q[b][c] - 1]:
            return "(iii)"
    return None


def is_quandle(Q) -> bool:
    return quandle_failure(Q) is None


def dual_table(Q) -> Table:
    """Columnwise inverse: dual[i][j] = k where Q[k][j] = i."""
    n = len(Q)
    dual = [[0] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            dual[Q[k][j] - 1][j] = k + 1
    return tuple(tuple(r) for r in dual)


def qbiq_from_quandle(Q) -> BiquandleMatrix:
    """Block matrix [[dual Q | Q], [T_n | T_n]]."""
    bad = quandle_failure(Q)
    if bad is not None:
        raise BiquandleError(f"not a quandle: axiom {bad} fails")
    n = len(Q)
    t = trivial_table(n)
    return BiquandleMatrix(n, (dual_table(Q), Q, t, t))


def is_connected(B: BiquandleMatrix) -> bool:
    """Some element's orbit under all right translations covers B."""
    n = B.order
    for start in range(1, n + 1):
        seen = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for m in B.blocks:
                for z in m[x - 1]:
                    if z not in seen:
                        seen.add(z)
                        frontier.append(z)
        if len(seen) == n:
            return True
    return False


def idempotent_count(B: BiquandleMatrix) -> int:
    """Number of elements fixed by all four operations with themselves."""
    return sum(
        1
        for a in range(1, B.order + 1)
        if all(m[a - 1][a - 1] == a for m in B.blocks)
    )


def from_switch(S2, S4) -> BiquandleMatrix:
    """Recover the full matrix from the switch blocks [M2 | M4].

    The switch is S(a, b) = (b_a, a^b); its inverse S^-1(a, b) = (b^{bar a}, a_{bar b})
    determines the left blocks.
    """
    n = len(S2)
    S2 = _as_table(S2, n, 1, "switch block M2")
    S4 = _as_table(S4, n, 1, "switch block M4")
    m1 = [[0] * n for _ in range(n)]
    m3 = [[0] * n for _ in range(n)]
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            c, d = S4[b - 1][a - 1], S2[a - 1][b - 1]
            if m1[d - 1][c - 1]:
                raise BiquandleError("switch map is not a bijection on pairs")
            m1[d - 1][c - 1] = a
            m3[c - 1][d - 1] = b
    return BiquandleMatrix(n, (m1, S2, m3, S4))


def column_permutation_ok(B: BiquandleMatrix) -> bool:
    n = B.order
    full = set(range(1, n + 1))
    return all(
        {m[i][j] for i in range(n)} == full for m in B.blocks for j in range(n)
    )


def fixed_entry_rows_ok(B: BiquandleMatrix) -> bool:
    """Every row of every block has exactly one entry equal to its column number."""
    n = B.order
    return all(
        sum(1 for j in range(n) if row[j] == j + 1) == 1
        for m in B.blocks
        for row in m
    )


def all_matrices(n: int) -> Iterable[BiquandleMatrix]:
    """Every complete 4-tuple of n x n tables.  Only sensible for n <= 2."""
    cells = 4 * n * n
    for flat in product(range(1, n + 1), repeat=cells):
        blocks = tuple(
            tuple(tuple(flat[(k * n + i) * n:(k * n + i + 1) * n]) for i in range(n))
            for k in range(4)
        )
        yield BiquandleMatrix(n, blocks)
