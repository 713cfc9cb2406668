from __future__ import annotations

import pytest

from prodstruct.catalogue import all_graphs, connected_graphs, graphs_up_to
from prodstruct.lowerbound import counterexample_graph


@pytest.fixture(scope="session")
def graphs_to_6():
    """All graphs up to isomorphism with <= 6 vertices (208 of them)."""
    return graphs_up_to(6)


@pytest.fixture(scope="session")
def graphs_to_7():
    return graphs_up_to(7)


@pytest.fixture(scope="session")
def planar_connected_by_n():
    """Connected planar graphs up to isomorphism, keyed by vertex count."""
    return {n: connected_graphs(n, planar_only=True) for n in range(1, 9)}


@pytest.fixture(scope="session")
def planar_all_by_n():
    """All planar graphs up to isomorphism, keyed by vertex count."""
    return {n: all_graphs(n, planar_only=True) for n in range(1, 9)}


@pytest.fixture(scope="session")
def cx1():
    """The c=1 two-level distended fan (4294 vertices)."""
    return counterexample_graph(1)
