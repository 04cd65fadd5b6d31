import pytest

from pickernel.generators import cycle, named_graph, path, star
from pickernel.graph import Graph
from pickernel.settings import settings


@pytest.fixture(autouse=True)
def fresh_settings():
    settings.reset()
    yield
    settings.reset()


@pytest.fixture
def claw():
    return named_graph("claw")


@pytest.fixture
def net():
    return named_graph("net")


@pytest.fixture
def sun():
    return named_graph("3-sun")


@pytest.fixture
def c4():
    return named_graph("c4")


@pytest.fixture
def c5():
    return named_graph("c5")


@pytest.fixture
def k23():
    return named_graph("k23")


@pytest.fixture
def p7():
    return path(7)


@pytest.fixture
def c9():
    return cycle(9)


@pytest.fixture
def big_star():
    return star(6)


@pytest.fixture
def empty():
    return Graph()
