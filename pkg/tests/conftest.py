import random
import sys
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from minorsmith.graph import Graph

REPO = Path(__file__).resolve().parent.parent
DATA = REPO / "data"


def complete(n):
    return Graph(n, list(combinations(range(n), 2)))


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen():
    return Graph(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
    )


def random_graph(rng, n, p):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < p])


def random_connected_graph(rng, n, p):
    while True:
        g = random_graph(rng, n, p)
        if n == 0 or g.is_connected():
            return g


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture(scope="session")
def corpus_le7():
    from minorsmith.formats import read_graph6_stream

    path = DATA / "graphs_n_le_8.g6"
    if not path.is_file():
        pytest.skip("small-graph corpus not generated")
    graphs = read_graph6_stream(path.read_text())
    return [g for g in graphs if g.n <= 7]
