import random

import pytest

from alphapack.model import Graph, ThreeSetFamily, TripartiteFamily


def random_family(rng: random.Random, n: int, m: int) -> ThreeSetFamily:
    if n < 3:
        return ThreeSetFamily(n, [])
    return ThreeSetFamily(n, [rng.sample(range(n), 3) for _ in range(m)])


def random_tripartite(rng: random.Random, sizes, m: int) -> TripartiteFamily:
    off = [0, sizes[0], sizes[0] + sizes[1]]
    if min(sizes) == 0:
        return TripartiteFamily(sizes, [])
    sets = [[off[i] + rng.randrange(sizes[i]) for i in range(3)] for _ in range(m)]
    return TripartiteFamily(sizes, sets)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(12345)
