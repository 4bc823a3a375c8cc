import random

import pytest

from modlex.smallgraphs import all_graphs, connected_graphs


@pytest.fixture(scope="session")
def connected_classes():
    """Connected graphs up to isomorphism, keyed by vertex count."""
    return {n: connected_graphs(n) for n in range(1, 7)}


@pytest.fixture(scope="session")
def all_classes():
    return {n: all_graphs(n) for n in range(1, 7)}


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)
