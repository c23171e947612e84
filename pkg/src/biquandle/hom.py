"""Homomorphisms from presented biquandles into finite targets.

A map is a tuple ``(phi(1), ..., phi(g))``.  The search assigns generators in
order, trying target elements in ascending order, and after every assignment
propagates through the relations:

* forward: ``phi(out) = T[op][phi(in)][phi(operator)]``;
* backward: ``phi(in)`` is the unique row of column ``phi(operator)`` of
  block ``op`` holding ``phi(out)`` (block columns are permutations).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from typing import List, Optional, Sequence, Tuple

from .core import BiquandleError, BiquandleMatrix, axiom_failure, flip, obverse
from .presentation import Presentation, matrix_presentation

HomMap = Tuple[int, ...]


def _require_biquandle(T: BiquandleMatrix, what: str = "target") -> None:
    if not isinstance(T, BiquandleMatrix):
        raise BiquandleError(f"{what} must be a BiquandleMatrix")
    bad = axiom_failure(T)
    if bad is not None:
        raise BiquandleError(f"{what} is not a biquandle (axiom {bad} fails)")


class _HomSearch:
    def __init__(self, P: Presentation, T: BiquandleMatrix):
        self.g = P.generators
        self.m = T.order
        self.T = T.blocks
        m = self.m
        # inverse[k][y][w] = x with T_k[x][y] = w
        self.inverse = []
        for block in T.blocks:
            inv = [[0] * (m + 1) for _ in range(m + 1)]
            for x in range(m):
                for y in range(m):
                    inv[y + 1][block[x][y]] = x + 1
            self.inverse.append(inv)
        self.rels = [(r.input, r.op - 1, r.operator, r.output) for r in P.relations]
        self.touching = [[] for _ in range(self.g + 1)]
        for rel in self.rels:
            for v in {rel[0], rel[2], rel[3]}:
                self.touching[v].append(rel)

    def propagate(self, phi: list, changed: list) -> bool:
        T, inverse, touching = self.T, self.inverse, self.touching
        queue = list(changed)
        while queue:
            v = queue.pop()
            for a, k, b, c in touching[v]:
                fa, fb, fc = phi[a], phi[b], phi[c]
                if fa and fb:
                    w = T[k][fa - 1][fb - 1]
                    if fc:
                        if fc != w:
                            return False
                    else:
                        phi[c] = w
                        queue.append(c)
                elif fb and fc and not fa:
                    x = inverse[k][fb][fc]
                    phi[a] = x
                    queue.append(a)
        return True

    def run(self):
        g, m = self.g, self.m
        phi = [0] * (g + 1)
        out = []

        def dfs(phi):
            try:
                i = phi.index(0, 1)
            except ValueError:
                out.append(tuple(phi[1:]))
                return
            for v in range(1, m + 1):
                child = list(phi)
                child[i] = v
                if self.propagate(child, [i]):
                    dfs(child)

        dfs(phi)
        out.sort()
        return out


def bhomlist(P: Presentation, T: BiquandleMatrix) -> List[HomMap]:
    """Every assignment of generators satisfying all relations of P in T, ascending."""
    _require_biquandle(T)
    return _HomSearch(P, T).run()


def bhomcount(P: Presentation, T: BiquandleMatrix) -> int:
    """The counting invariant |Hom(P, T)|."""
    return len(bhomlist(P, T))


def brute_force_homcount(P: Presentation, T: BiquandleMatrix) -> int:
    """Reference count by checking all m**g assignments."""
    rels = [(r.input - 1, r.op - 1, r.operator - 1, r.output - 1) for r in P.relations]
    blocks = T.blocks
    count = 0
    for phi in product(range(1, T.order + 1), repeat=P.generators):
        if all(blocks[k][phi[a] - 1][phi[b] - 1] == phi[c] for a, k, b, c in rels):
            count += 1
    return count


def is_homomorphism(P: Presentation, T: BiquandleMatrix, phi: Sequence[int]) -> bool:
    return all(
        T.op(r.op, phi[r.input - 1], phi[r.operator - 1]) == phi[r.output - 1]
        for r in P.relations
    )


# -- isomorphisms -------------------------------------------------------------


def _element_profile(B: BiquandleMatrix, a: int) -> tuple:
    """Relabelling-invariant data about one element."""
    prof = []
    for m in B.blocks:
        row = m[a - 1]
        col = [m[i][a - 1] for i in range(B.order)]
        prof.append((row[a - 1] == a, sum(1 for x in row if x == a), sum(1 for x in col if x == a)))
    return tuple(prof)


def _profile(B: BiquandleMatrix) -> tuple:
    return tuple(sorted(_element_profile(B, a) for a in range(1, B.order + 1)))


def bisolist(A: BiquandleMatrix, B: BiquandleMatrix) -> List[HomMap]:
    """All isomorphisms A -> B as image tuples; empty when none exist."""
    _require_biquandle(A, "source")
    _require_biquandle(B, "target")
    return _isos(A, B)


def _isos(A: BiquandleMatrix, B: BiquandleMatrix) -> List[HomMap]:
    if A.order != B.order or _profile(A) != _profile(B):
        return []
    homs = _HomSearch(matrix_presentation(A), B).run()
    return [h for h in homs if len(set(h)) == A.order]


def is_isomorphic(A: BiquandleMatrix, B: BiquandleMatrix) -> bool:
    return bool(_isos(A, B))


def self_flip(B: BiquandleMatrix) -> bool:
    return is_isomorphic(B, flip(B))


def self_obverse(B: BiquandleMatrix) -> bool:
    return is_isomorphic(B, obverse(B))


def canonical_form(B: BiquandleMatrix) -> tuple:
    """Least row-major key over all relabellings; equal iff isomorphic."""
    return min(B.relabel(p).key() for p in permutations(range(1, B.order + 1)))


# -- automorphism groups ------------------------------------------------------

_GROUP_NAMES = {
    (1, True, ((1, 1),)): "Z1",
    (2, True, ((1, 1), (2, 1))): "Z2",
    (3, True, ((1, 1), (3, 2))): "Z3",
    (4, True, ((1, 1), (2, 1), (4, 2))): "Z4",
    (4, True, ((1, 1), (2, 3))): "Z2⊕Z2",
    (5, True, ((1, 1), (5, 4))): "Z5",
    (6, True, ((1, 1), (2, 1), (3, 2), (6, 2))): "Z6",
    (6, False, ((1, 1), (2, 3), (3, 2))): "S3",
    (7, True, ((1, 1), (7, 6))): "Z7",
    (8, True, ((1, 1), (2, 1), (4, 2), (8, 4))): "Z8",
    (8, True, ((1, 1), (2, 3), (4, 4))): "Z4⊕Z2",
    (8, True, ((1, 1), (2, 7))): "Z2⊕Z2⊕Z2",
    (8, False, ((1, 1), (2, 5), (4, 2))): "D4",
    (8, False, ((1, 1), (2, 1), (4, 6))): "Q8",
}


@dataclass(frozen=True)
class GroupLabel:
    order: int
    abelian: bool
    element_orders: tuple  # sorted ((element order, multiplicity), ...)
    name: Optional[str]

    def __str__(self) -> str:
        if self.name:
            return self.name
        return f"order {self.order} ({'abelian' if self.abelian else 'non-abelian'})"


def _compose(p, q):
    """(p o q)(x) = p(q(x))."""
    return tuple(p[x - 1] for x in q)


def identify_group(perms) -> GroupLabel:
    """Name a group of permutations (image tuples) from its order statistics."""
    elems = {tuple(p) for p in perms}
    if not elems:
        raise BiquandleError("empty set is not a group")
    n = len(next(iter(elems)))
    if any(sorted(p) != list(range(1, n + 1)) for p in elems):
        raise BiquandleError("every element must be a permutation of 1..n")
    identity = tuple(range(1, n + 1))
    if identity not in elems:
        raise BiquandleError("identity missing")
    for p in elems:
        for q in elems:
            if _compose(p, q) not in elems:
                raise BiquandleError("not closed under composition")
    abelian = all(_compose(p, q) == _compose(q, p) for p in elems for q in elems)
    orders = Counter()
    for p in elems:
        k, x = 1, p
        while x != identity:
            x = _compose(p, x)
            k += 1
        orders[k] += 1
    stats = tuple(sorted(orders.items()))
    key = (len(elems), abelian, stats)
    return GroupLabel(len(elems), abelian, stats, _GROUP_NAMES.get(key))


def baut(B: BiquandleMatrix) -> Tuple[List[HomMap], GroupLabel]:
    """Automorphisms of B and the identified group."""
    auts = bisolist(B, B)
    return auts, identify_group(auts)


# -- reduction ----------------------------------------------------------------

ISO = "iso"
ISO_FLIP_OBVERSE = "iso-flip-obverse"


def _variants(B: BiquandleMatrix, mode: str) -> list:
    if mode == ISO:
        return [B]
    if mode == ISO_FLIP_OBVERSE:
        return [B, flip(B), obverse(B), obverse(flip(B))]
    raise BiquandleError(f"unknown reduction mode {mode!r}")


def equivalent(A: BiquandleMatrix, B: BiquandleMatrix, mode: str) -> bool:
    return any(is_isomorphic(A, V) for V in _variants(B, mode))


def breducelist(L: Sequence[BiquandleMatrix], mode: str = ISO) -> List[BiquandleMatrix]:
    """Keep each entry only if it is not equivalent to an earlier kept entry."""
    kept = []
    kept_variants = []
    for B in L:
        _require_biquandle(B, "list entry")
        if any(is_isomorphic(B, V) for vs in kept_variants for V in vs):
            continue
        kept.append(B)
        kept_variants.append(_variants(B, mode))
    return kept
