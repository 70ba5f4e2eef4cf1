import time

import pytest

_RESULTS = []


class Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit
        self.ok = None
        self.detail = ""

    def __enter__(self):
        # time each criterion from cold caches
        from crystalkit.qwedge import clear_caches
        clear_caches()
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.elapsed = time.perf_counter() - self.start
        if exc_type is not None:
            self.ok = False
            self.detail = self.detail or f"{exc_type.__name__}: {exc}"
        elif self.ok is None:
            self.ok = True
        in_time = self.elapsed < self.limit
        status = "PASS" if self.ok and in_time else "FAIL"
        note = self.detail
        if self.ok and not in_time:
            note = "over time limit"

        line = (f"criterion {self.number:>2} {status}  {self.title}  "
                f"[{self.elapsed:.2f}s / limit {self.limit:g}s]" + (f"  {note}" if note else ""))
        _RESULTS.append(line)
        print(line)
        if exc_type is None:
            assert self.ok, line
            assert in_time, line
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in _RESULTS:
            terminalreporter.write_line(line)
