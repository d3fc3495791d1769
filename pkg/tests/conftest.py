from functools import lru_cache

import pytest

from shintani_classnum import make_field
from shintani_classnum.config import GridConfig

GRID_D = (2, 3, 5, 6, 7, 11, 13)
GRID_PMAX = 60


@lru_cache(maxsize=None)
def field_for(d: int):
    return make_field(d)


@lru_cache(maxsize=None)
def grid_pairs(pmax: int = GRID_PMAX) -> tuple[tuple[int, int], ...]:
    return tuple(GridConfig(GRID_D, pmax).pairs())


@pytest.fixture(scope="session")
def d3():
    return field_for(3)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
