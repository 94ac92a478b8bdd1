import pytest
from hypothesis import settings

from pinnacles.oracle import OracleBudget, collect_pinnacle_sets
from pinnacles.wreath import GroupParams

# property tests stay deterministic-friendly on slow machines
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

# large enough for every group the suite scans, including (3,1,7)
TEST_BUDGET = OracleBudget(max_order=30_000_000)


@pytest.fixture(scope="session")
def reports():
    """Memoized oracle reports; heavy scans run once per session."""
    cache = {}

    def get(m: int, p: int, n: int):
        key = (m, p, n)
        if key not in cache:
            cache[key] = collect_pinnacle_sets(GroupParams(m, p, n), TEST_BUDGET)
        return cache[key]

    return get
