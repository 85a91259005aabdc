import pytest

from amicable_heron import backends


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the default kernel lane once so per-test timings stay honest."""
    backends.warmup()
