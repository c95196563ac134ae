import random

import pytest

from geombs.model import IntersectionGraph


def graph_from_edges(n, edges):
    return IntersectionGraph.from_edges(n, edges)


def random_graph(rng, n, p=0.4):
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return IntersectionGraph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Record call-phase failures so acceptance tests can print FAIL lines."""
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_failed = rep.failed
