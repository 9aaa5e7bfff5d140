import pytest

from ghcodes.field import FieldContext


def combos_upto(gens, bound):
    """Every value <= bound that is a non-negative combination of gens (brute force)."""
    reach = {0}
    for g in gens:
        reach = {v + t * g for v in reach for t in range((bound - v) // g + 1)}
    return reach


@pytest.fixture(scope="session")
def gf8():
    return FieldContext.default(3)


@pytest.fixture(scope="session")
def gf4():
    return FieldContext.default(2)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
