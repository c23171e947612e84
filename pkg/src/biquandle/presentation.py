"""Finitely presented biquandles given by short relations.

A short relation ``input <op> operator = output`` says that the generator
``input`` acted on by ``operator`` through operation ``op`` is ``output``.
Knot diagrams give presentations in which semiarc ``i`` always maps to
``i + 1``; those are written compactly as presentation vectors::

    pv 4
    l3 l4 u1 u2

Op letters: ``U`` = a^b, ``u`` = a^{bar b}, ``L`` = a_b, ``l`` = a_{bar b}.

The general ``.pres`` format lists relations explicitly::

    pres 2 2
    rel 1 u2 2
    rel 2 l1 1
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Tuple

from .core import BiquandleError, BiquandleMatrix, OpKind
from .formats import ParseError, strip_comment
from .search import BiquandlePattern


class Relation(NamedTuple):
    input: int
    op: OpKind
    operator: int
    output: int

    def __str__(self) -> str:
        return f"rel {self.input} {self.op.letter}{self.operator} {self.output}"


@dataclass(frozen=True)
class Presentation:
    generators: int
    relations: Tuple[Relation, ...] = ()

    def __post_init__(self):
        g = self.generators
        if not isinstance(g, int) or g < 1:
            raise BiquandleError(f"generator count must be positive, got {g!r}")
        rels = tuple(
            Relation(int(r[0]), OpKind(r[1]), int(r[2]), int(r[3])) for r in self.relations
        )
        seen = set()
        for r in rels:
            for x in (r.input, r.operator, r.output):
                if not 1 <= x <= g:
                    raise BiquandleError(f"generator {x} outside 1..{g} in {r}")
            key = (r.input, r.op, r.operator)
            if key in seen:
                raise BiquandleError(f"two relations for {r.input} {r.op.letter}{r.operator}")
            seen.add(key)
        object.__setattr__(self, "relations", rels)

    def obverse(self) -> "Presentation":
        """Presentation of the obverse: left and right operations swapped."""
        return Presentation(
            self.generators,
            tuple(Relation(r.input, r.op.obverse, r.operator, r.output) for r in self.relations),
        )

    def flip(self) -> "Presentation":
        return Presentation(
            self.generators,
            tuple(Relation(r.input, r.op.flip, r.operator, r.output) for r in self.relations),
        )

    def relabel(self, perm) -> "Presentation":
        """Rename generator i to perm[i-1]."""
        p = lambda i: perm[i - 1]
        return Presentation(
            self.generators,
            tuple(Relation(p(r.input), r.op, p(r.operator), p(r.output)) for r in self.relations),
        )


@dataclass(frozen=True)
class PresentationVector:
    """Entry i is (op, operator) for the relation carrying semiarc i to i + 1."""

    entries: Tuple[Tuple[OpKind, int], ...]

    def __post_init__(self):
        entries = tuple((OpKind(op), int(j)) for op, j in self.entries)
        n = len(entries)
        if n < 1:
            raise BiquandleError("presentation vector is empty")
        for op, j in entries:
            if not 1 <= j <= n:
                raise BiquandleError(f"operator {j} outside 1..{n}")
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def presentation(self) -> Presentation:
        n = len(self.entries)
        return Presentation(
            n,
            tuple(
                Relation(i, op, j, i % n + 1) for i, (op, j) in enumerate(self.entries, 1)
            ),
        )


def _tokens(text: str) -> list:
    lines = [strip_comment(l) for l in text.splitlines()]
    return [l for l in lines if l]


def _op_token(tok: str, n: int):
    if len(tok) < 2 or tok[0] not in "UuLl":
        raise ParseError(f"bad relation token {tok!r}; expected e.g. 'u3'")
    try:
        j = int(tok[1:])
    except ValueError:
        raise ParseError(f"bad operator index in {tok!r}") from None
    if not 1 <= j <= n:
        raise ParseError(f"operator {j} in {tok!r} outside 1..{n}")
    return OpKind.from_letter(tok[0]), j


def parse_presentation_vector(text: str) -> PresentationVector:
    lines = _tokens(text)
    if not lines:
        raise ParseError("empty presentation vector")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "pv":
        raise ParseError(f"expected 'pv <n>' header, got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"bad length in header {lines[0]!r}") from None
    if n < 1:
        raise ParseError("presentation vector length must be positive")
    toks = " ".join(lines[1:]).split()
    if len(toks) != n:
        raise ParseError(f"expected {n} entries, found {len(toks)}")
    return PresentationVector(tuple(_op_token(t, n) for t in toks))


def format_presentation_vector(v: PresentationVector) -> str:
    body = " ".join(f"{op.letter}{j}" for op, j in v.entries)
    return f"pv {len(v)}\n{body}\n"


def parse_presentation(text: str) -> Presentation:
    lines = _tokens(text)
    if not lines:
        raise ParseError("empty presentation")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "pres":
        raise ParseError(f"expected 'pres <g> <r>' header, got {lines[0]!r}")
    try:
        g, r = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError(f"bad header {lines[0]!r}") from None
    if g < 1 or r < 0:
        raise ParseError(f"bad header {lines[0]!r}")
    body = lines[1:]
    if len(body) != r:
        raise ParseError(f"expected {r} relations, found {len(body)}")
    rels = []
    for line in body:
        toks = line.split()
        if len(toks) != 4 or toks[0] != "rel":
            raise ParseError(f"expected 'rel <input> <op><operator> <output>', got {line!r}")
        try:
            a, c = int(toks[1]), int(toks[3])
        except ValueError:
            raise ParseError(f"bad generator in {line!r}") from None
        op, b = _op_token(toks[2], g)
        for x in (a, c):
            if not 1 <= x <= g:
                raise ParseError(f"generator {x} outside 1..{g} in {line!r}")
        rels.append(Relation(a, op, b, c))
    try:
        return Presentation(g, tuple(rels))
    except BiquandleError as e:
        raise ParseError(str(e)) from None


def format_presentation(P: Presentation) -> str:
    lines = [f"pres {P.generators} {len(P.relations)}"]
    lines += [str(r) for r in P.relations]
    return "\n".join(lines) + "\n"


def parse_knot(text: str) -> Presentation:
    """Accept either a ``pv`` or a ``pres`` document."""
    lines = _tokens(text)
    if lines and lines[0].split()[0] == "pv":
        return parse_presentation_vector(text).presentation()
    return parse_presentation(text)


def build_presentation_matrix(P: Presentation) -> BiquandlePattern:
    """Pattern of order g with block[op][input][operator] = output, zeros elsewhere."""
    g = P.generators
    cells = [0] * (4 * g * g)
    for r in P.relations:
        p = (r.op - 1) * g * g + (r.input - 1) * g + r.operator - 1
        if cells[p] and cells[p] != r.output:
            raise BiquandleError(f"conflicting relations at {r.op.letter}{r.operator} for {r.input}")
        cells[p] = r.output
    return BiquandlePattern(g, tuple(cells))


def relations_from_pattern(P: BiquandlePattern) -> Presentation:
    """Read every non-zero cell back as a relation (block-major order)."""
    n = P.order
    rels = []
    for k in OpKind:
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                c = P.get(k, a, b)
                if c:
                    rels.append(Relation(a, k, b, c))
    return Presentation(n, tuple(rels))


def matrix_presentation(B: BiquandleMatrix) -> Presentation:
    """Every entry of a finite biquandle's matrix as an explicit relation."""
    return relations_from_pattern(BiquandlePattern.from_matrix(B))


_SWITCH_PARTNER = {
    OpKind.UPPER_RIGHT: OpKind.LOWER_RIGHT,
    OpKind.LOWER_RIGHT: OpKind.UPPER_RIGHT,
    OpKind.UPPER_LEFT: OpKind.LOWER_LEFT,
    OpKind.LOWER_LEFT: OpKind.UPPER_LEFT,
}


def knotlike_check(P: Presentation) -> bool:
    """Each generator once as input, operator and output; relations pair as switches."""
    g = P.generators
    everyone = Counter(range(1, g + 1))
    for role in ("input", "operator", "output"):
        if Counter(getattr(r, role) for r in P.relations) != everyone:
            return False
    index = {(r.input, r.op, r.operator) for r in P.relations}
    return all(
        (r.operator, _SWITCH_PARTNER[r.op], r.input) in index for r in P.relations
    )
