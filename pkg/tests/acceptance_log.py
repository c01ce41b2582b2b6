"""Timing and pass/fail bookkeeping for the acceptance criteria."""
import time
from contextlib import contextmanager

RESULTS: list[str] = []


@contextmanager
def criterion(number: int, title: str, limit_s: float):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - t0
        _record(number, "FAIL", title, elapsed, limit_s, f" ({type(exc).__name__})")
        raise
    elapsed = time.perf_counter() - t0
    status = "PASS" if elapsed < limit_s else "FAIL"
    _record(number, status, title, elapsed, limit_s, "")
    assert elapsed < limit_s, f"criterion {number} took {elapsed:.2f}s, limit {limit_s}s"


def _record(number, status, title, elapsed, limit_s, extra):
    line = f"criterion {number}: {status} {title} [{elapsed:.2f}s / {limit_s:g}s]{extra}"
    RESULTS.append(line)
    print(line)
