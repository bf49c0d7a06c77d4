import pytest

from dendroidal.corpus import PERCOLATION_S, PERCOLATION_T, SAMPLE_TREE, commutative_fixture
from dendroidal.trees import Tree


@pytest.fixture
def t2() -> Tree:
    return SAMPLE_TREE


@pytest.fixture
def perc_pair():
    return PERCOLATION_S, PERCOLATION_T


@pytest.fixture
def com():
    return commutative_fixture()


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k])
