import pytest
from hypothesis import given
from hypothesis import strategies as st

from biquandle.core import BiquandleMatrix
from biquandle.formats import (
    ParseError,
    format_biq,
    format_biq_many,
    parse_biq,
    parse_biq_many,
    read_biq,
)
from biquandle.search import BiquandlePattern

BT2_TEXT = "biq 2\n1 1 1 1\n2 2 2 2\n1 1 1 1\n2 2 2 2\n"


def test_parse_and_format():
    B = parse_biq("# trivial\n" + BT2_TEXT)
    assert B == BiquandleMatrix.trivial(2)
    assert format_biq(B) == BT2_TEXT


def test_comments_and_spacing():
    text = "biq 1   # order one\n  1   1 \n1 1 # done\n"
    assert format_biq(parse_biq(text)) == "biq 1\n1 1\n1 1\n"


def test_zero_only_in_patterns():
    text = "biq 1\n0 1\n1 1\n"
    with pytest.raises(ParseError):
        parse_biq(text)
    P = parse_biq(text, pattern=True)
    assert isinstance(P, BiquandlePattern) and P.blanks() == 1
    assert format_biq(P) == text


@pytest.mark.parametrize(
    "text",
    [
        "",
        "biq 2\n1 1 1 1\n",
        "biq 2\n1 1 1\n2 2 2 2\n1 1 1 1\n2 2 2 2\n",
        "biq 1\n1 x\n1 1\n",
        "biq 1\n1 2\n1 1\n",
        "biq 0\n",
        "pv 2\nu2 l1\n",
        BT2_TEXT + BT2_TEXT,
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_biq(text)


def test_many_records(census3):
    text = format_biq_many(census3)
    assert parse_biq_many(text) == census3
    assert format_biq_many(parse_biq_many(text)) == text


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(0, n), min_size=4 * n * n, max_size=4 * n * n)
    .map(lambda c: BiquandlePattern(n, tuple(c)))
))
def test_pattern_round_trip(P):
    text = format_biq(P)
    assert parse_biq(text, pattern=True) == P
    assert format_biq(parse_biq(text, pattern=True)) == text


def test_read_biq(tmp_path):
    f = tmp_path / "bt2.biq"
    f.write_text(BT2_TEXT)
    assert read_biq(f) == BiquandleMatrix.trivial(2)
