import re
import time
from pathlib import Path

import pytest

from biquandle import samples
from biquandle.formats import parse_biq
from biquandle.search import enumerate_biquandles

FIXTURES = Path(__file__).parent / "fixtures"

_HEAD = re.compile(r"# list (\d+) entry (\d+) self-flip (yes|no) aut (\S+)")


def load_tables():
    """Records of the reference classification tables, in file order."""
    text = (FIXTURES / "census_tables.txt").read_text(encoding="utf-8")
    records = []
    for chunk in text.split("\n\n"):
        m = _HEAD.search(chunk)
        if not m:
            continue
        records.append(
            dict(
                list=int(m.group(1)),
                entry=int(m.group(2)),
                self_flip=m.group(3) == "yes",
                aut=m.group(4),
                matrix=parse_biq(chunk),
            )
        )
    return records


@pytest.fixture(scope="session")
def tables():
    return load_tables()


@pytest.fixture(scope="session")
def census3():
    return enumerate_biquandles(3)


class Census(list):
    """Enumeration result that remembers how long it took."""

    elapsed = 0.0


def timed_census(n):
    start = time.perf_counter()
    found = Census(enumerate_biquandles(n))
    found.elapsed = time.perf_counter() - start
    return found


@pytest.fixture(scope="session")
def census4():
    # the slow one, a couple of minutes; shared by every test that needs it
    return timed_census(4)


# -- acceptance report --------------------------------------------------------

ACCEPTANCE = {}


@pytest.fixture
def report():
    """Record and print one verdict line per acceptance criterion."""

    def record(number, verdict, detail):
        line = f"criterion {number}: {verdict} - {detail}"
        ACCEPTANCE[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])


@pytest.fixture(scope="session")
def targets():
    return {name: samples.target(name) for name in samples.TARGETS}


@pytest.fixture(scope="session")
def knots():
    return {name: samples.knot(name) for name in samples.KNOTS}

