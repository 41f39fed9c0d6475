import random

import pytest

from toughgraph.graph import Graph


def spoked_pentagram() -> Graph:
    """10 vertices: outer 5-cycle 0..4, inner pentagram 5..9, and the three
    spokes (0,5), (1,6), (4,9). Minimally 1-tough but not minimally
    2-connected: deleting spoke (0,5) keeps the graph 2-connected."""
    return Graph(
        10,
        [
            (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
            (5, 7), (6, 8), (7, 9), (5, 8), (6, 9),
            (0, 5), (1, 6), (4, 9),
        ],
    )


SPOKE_EDGE = (0, 5)


@pytest.fixture
def pentagram():
    return spoked_pentagram()


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g
