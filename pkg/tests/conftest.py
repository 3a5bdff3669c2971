"""Shared pytest wiring for the acceptance summary block."""

from contextlib import contextmanager

import pytest

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Context manager recording a pass/fail line for one criterion."""

    @contextmanager
    def criterion(number: int, name: str):
        try:
            yield
        except BaseException:
            _ACCEPTANCE_LINES.append(f"criterion {number:>2}  {name:<58} FAIL")
            raise
        else:
            _ACCEPTANCE_LINES.append(f"criterion {number:>2}  {name:<58} PASS")

    return criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
