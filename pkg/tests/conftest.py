import pytest

from empty4 import search
from empty4.search import SearchConfig


@pytest.fixture(scope="session")
def full_census_200():
    """All empty classes with V <= 200, as a list of (V, b) rows."""
    rows = []
    for V in range(1, 201):
        rows.extend((V, b) for b in search._empty_rows(V))
    return rows


@pytest.fixture(scope="session")
def sporadic_census_419():
    """The full sporadic census, range [1, 419]."""
    return search.enumerate_sporadic(SearchConfig(v_min=1, v_max=419))
