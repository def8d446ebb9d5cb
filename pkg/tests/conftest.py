import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from isodom.enumerate import enumerate_connected_graphs, make_named  # noqa: E402
from isodom.graph import Graph  # noqa: E402


@pytest.fixture(scope="session")
def small_connected():
    return [g for n in range(1, 7) for g in enumerate_connected_graphs(n)]


@pytest.fixture
def p3():
    return make_named("path", 3)


@pytest.fixture
def p4():
    return make_named("path", 4)


@pytest.fixture
def c4():
    return make_named("cycle", 4)


@pytest.fixture
def c5():
    return make_named("cycle", 5)


@pytest.fixture
def k3():
    return make_named("complete", 3)


@pytest.fixture
def star3():
    return make_named("star", 3)


@pytest.fixture
def k1():
    return Graph(1, (0,))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
