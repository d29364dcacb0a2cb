import pathlib
import sys
import time

import pytest

# Allow running the suite from a checkout without installing the package.
_SRC = pathlib.Path(__file__).resolve().parent.parent / "src"
if _SRC.is_dir() and str(_SRC) not in sys.path:
    try:
        import cyclosum  # noqa: F401
    except ImportError:
        sys.path.insert(0, str(_SRC))

from cyclosum import enumerate_minimal  # noqa: E402


def _timed_census(m, max_weight, **kwargs):
    start = time.perf_counter()
    records = enumerate_minimal(m, max_weight, **kwargs)
    return records, time.perf_counter() - start


@pytest.fixture(scope="session")
def census30_weight6():
    return _timed_census(30, 6)


@pytest.fixture(scope="session")
def census30_weight7():
    return _timed_census(30, 7)


@pytest.fixture(scope="session")
def census42_weight8():
    return _timed_census(42, 8, workers=4)


@pytest.fixture(scope="session")
def census12_weight12():
    return _timed_census(12, 12)
