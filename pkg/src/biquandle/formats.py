"""Plain-text formats.

``.biq``::

    # comment
    biq 2
    1 1 1 1
    2 2 2 2
    1 1 1 1
    2 2 2 2

The 2n rows are laid out as [[M1|M2],[M3|M4]].  ``0`` is a blank and is only
accepted when reading a pattern.  Several records may share one stream,
separated by blank lines.
"""

from __future__ import annotations

from typing import Iterator, List, Union

from .core import BiquandleError, BiquandleMatrix
from .search import BiquandlePattern


class ParseError(BiquandleError):
    pass


def strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _records(text: str) -> Iterator[List[str]]:
    """Yield the content lines of each ``biq`` record."""
    lines = [strip_comment(l) for l in text.splitlines()]
    lines = [l for l in lines if l]
    i = 0
    while i < len(lines):
        head = lines[i].split()
        if len(head) != 2 or head[0] != "biq":
            raise ParseError(f"expected 'biq <n>' header, got {lines[i]!r}")
        try:
            n = int(head[1])
        except ValueError:
            raise ParseError(f"bad order in header {lines[i]!r}") from None
        if n < 1:
            raise ParseError(f"order must be positive, got {n}")
        body = lines[i + 1:i + 1 + 2 * n]
        if len(body) != 2 * n:
            raise ParseError(f"expected {2 * n} rows after {lines[i]!r}")
        yield [lines[i]] + body
        i += 1 + 2 * n


def _rows(record: List[str]) -> list:
    n = int(record[0].split()[1])
    rows = []
    for line in record[1:]:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in row {line!r}") from None
        if len(row) != 2 * n:
            raise ParseError(f"row {line!r} should have {2 * n} entries")
        rows.append(row)
    return rows


def parse_biq(text: str, pattern: bool = False) -> Union[BiquandleMatrix, BiquandlePattern]:
    records = list(_records(text))
    if len(records) != 1:
        raise ParseError(f"expected exactly one biq record, found {len(records)}")
    return _build(records[0], pattern)


def parse_biq_many(text: str, pattern: bool = False) -> list:
    return [_build(r, pattern) for r in _records(text)]


def _build(record, pattern):
    rows = _rows(record)
    if not pattern and any(x == 0 for row in rows for x in row):
        raise ParseError("blank (0) entries are only allowed in patterns")
    try:
        if pattern:
            return BiquandlePattern.from_rows(rows)
        return BiquandleMatrix.from_rows(rows)
    except BiquandleError as e:
        raise ParseError(str(e)) from None


def format_biq(B: Union[BiquandleMatrix, BiquandlePattern]) -> str:
    lines = [f"biq {B.order}"]
    lines += [" ".join(str(x) for x in row) for row in B.rows()]
    return "\n".join(lines) + "\n"


def format_biq_many(items) -> str:
    return "\n".join(format_biq(B) for B in items)


def read_biq(path, pattern: bool = False):
    with open(path, encoding="utf-8") as fh:
        return parse_biq(fh.read(), pattern=pattern)
