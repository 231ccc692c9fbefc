import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from semidil.core import enumerate_by_genus, from_generators  # noqa: E402

# first calls pay for numba compilation
settings.register_profile("semidil", deadline=None)
settings.load_profile("semidil")


@pytest.fixture(scope="session")
def by_genus_8():
    return enumerate_by_genus(8)


@pytest.fixture(scope="session")
def family_8(by_genus_8):
    return [S for group in by_genus_8.values() for S in group]


@pytest.fixture(scope="session")
def family_10():
    return [S for group in enumerate_by_genus(10).values() for S in group]


@pytest.fixture
def s35():
    return from_generators([3, 5])


@pytest.fixture
def s479():
    return from_generators([4, 7, 9])


EXAMPLE_33 = [11, 14, 18, 20, 21, 23, 24, 27, 30]
EXAMPLE_33_DILATED = [16, 19, 23, 25, 26, 27, 28, 29, 30, 33, 34, 36, 37, 40]


@pytest.fixture
def s_type8():
    return from_generators(EXAMPLE_33)



ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, float]] = {}


@contextmanager
def criterion(number: int, title: str):
    """Time a block and record whether it finished without an assertion error."""
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        ACCEPTANCE_RESULTS[number] = (title, ok, time.perf_counter() - t0)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok, secs = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title} ({secs:.2f}s)")
