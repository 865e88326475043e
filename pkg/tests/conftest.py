import pytest

from tests.helpers import FIG1
from words import InvolutionMap, Word


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def fig1():
    return Word.from_text(FIG1)


@pytest.fixture
def mirror():
    return InvolutionMap.mirror()


@pytest.fixture
def watson_crick():
    return InvolutionMap.watson_crick()
