import time
from contextlib import contextmanager

import pytest

_RESULTS: dict[int, str] = {}


class Criterion:
    """Times one acceptance criterion and records a PASS/FAIL line."""

    @contextmanager
    def __call__(self, number: int, title: str, limit_s: float):
        start = time.perf_counter()
        status, detail = "PASS", ""
        try:
            yield
        except Exception as e:
            status, detail = "FAIL", (str(e).splitlines() or [type(e).__name__])[0]
            raise
        finally:
            took = time.perf_counter() - start
            if status == "PASS" and took >= limit_s:
                status, detail = "FAIL", f"took {took:.1f}s, limit {limit_s:g}s"
            line = f"criterion {number:2d} {status}  {title} ({took:.2f}s / {limit_s:g}s)"
            if detail:
                line += f"  -- {detail}"
            _RESULTS[number] = line
            print("\n" + line)
        assert took < limit_s, f"criterion {number} took {took:.1f}s, limit {limit_s:g}s"


@pytest.fixture
def criterion():
    return Criterion()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        terminalreporter.write_line(_RESULTS[number])
