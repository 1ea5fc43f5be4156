import time
from contextlib import contextmanager

import pytest

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Time a block, enforce its runtime budget, and record a pass/fail line."""

    @contextmanager
    def _run(number: int, title: str, budget: float | None = None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            if budget is not None:
                assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {title}"
            _ACCEPTANCE_LINES.append(line)
            print(line)

    return _run


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
