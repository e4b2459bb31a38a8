import pytest

from isingforge import Topology, build_model


@pytest.fixture
def linear4():
    return build_model(4, 1.0, 1.0, Topology.LINEAR)


@pytest.fixture
def circular4():
    return build_model(4, 1.0, 1.0, Topology.CIRCULAR)


@pytest.fixture
def full4():
    return build_model(4, 1.0, 1.0, Topology.FULL)
