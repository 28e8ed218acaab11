import pytest

from stgon.dynkin import DynkinType

SIMPLY_LACED = ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7", "E8"]
FOLDED = ["B2", "B3", "B4", "C3", "C4", "F4", "G2"]
ALL_TYPES = SIMPLY_LACED + FOLDED

_ACCEPTANCE_LINES = []


def record(criterion: str, passed: bool, detail: str) -> None:
    _ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'} [{criterion}] {detail}")


@pytest.fixture
def acceptance_record():
    return record


def T(tag):
    return DynkinType.parse(tag)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
