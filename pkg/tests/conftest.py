import os

import pytest

from sidonlab.extremal import HSolver

ACCEPTANCE_LINES: list[str] = []

# exact-solver frontier used by the acceptance sweeps
FRONTIER = int(os.environ.get("SIDONLAB_FRONTIER", "100"))


@pytest.fixture(scope="session")
def solver():
    return HSolver()


@pytest.fixture
def acceptance_line():
    def record(criterion: str, passed: bool, detail: str = ""):
        line = f"[{'PASS' if passed else 'FAIL'}] {criterion}"
        if detail:
            line += f" -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
