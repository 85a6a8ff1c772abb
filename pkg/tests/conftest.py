import random
import re

import pytest

from impropriety.generators import random_outerplanar
from impropriety.graph import Graph

import oracles


def cycle(n):
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n):
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star(s):
    return Graph(s + 1, tuple((0, i) for i in range(1, s + 1)))


def complete(n):
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


@pytest.fixture(scope="session")
def small_outerplanar():
    """Connected outerplanar graphs on at most 9 vertices, up to isomorphism."""
    return oracles.connected_outerplanar(9)


@pytest.fixture(scope="session")
def random_corpus():
    """1000 seeded outerplanar graphs on 3..200 vertices, labels shuffled."""
    rng = random.Random(20240611)
    return [random_outerplanar(rng.randint(3, 200), rng) for _ in range(1000)]


@pytest.fixture(scope="session")
def small_connected():
    """Connected graphs with at most 10 edges, up to isomorphism."""
    return oracles.connected_graphs_upto_edges(10)


_results: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    match = re.match(r"test_criterion_(\d+)", item.name)
    if match and item.module.__name__.endswith("test_acceptance"):
        key = match.group(1)
        if rep.when == "call" or rep.failed:
            prev = _results.get(key, "PASS")
            _results[key] = "FAIL" if (rep.failed or prev == "FAIL") else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results, key=int):
        terminalreporter.write_line(f"criterion {key}: {_results[key]}")
