import random

import pytest

from thompsonlinks.element import from_word
from thompsonlinks.taitlink import PDCode, medial_link, random_plane_graph

TREFOIL = PDCode.parse("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n")
FIGURE_EIGHT = PDCode.parse("X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8\n")
HOPF = PDCode.parse("X 4 1 3 2\nX 2 3 1 4\n")
UNKNOT = PDCode.parse("U\n")


def random_word(rng: random.Random, length: int = 12, top: int = 5) -> tuple:
    n = rng.randint(0, length)
    return tuple((rng.randint(0, top), rng.choice((1, -1))) for _ in range(n))


def random_element(rng: random.Random, length: int = 12, top: int = 5):
    return from_word(random_word(rng, length, top))


def random_pd(rng: random.Random, max_crossings: int = 8) -> PDCode:
    """Medial link of a random signed plane graph."""
    g = random_plane_graph(rng, rng.randint(1, max_crossings), loops=rng.random() < 0.3)
    return medial_link(g)


@pytest.fixture
def rng():
    return random.Random(20261016)


_TERNARY_POOLS: dict = {}


def random_ternary(rng: random.Random, max_carets: int = 4):
    from thompsonlinks.element import reduce, trees_with_carets

    k = rng.randint(0, max_carets)
    if k not in _TERNARY_POOLS:
        _TERNARY_POOLS[k] = list(trees_with_carets(k, 3))
    pool = _TERNARY_POOLS[k]
    return reduce(rng.choice(pool), rng.choice(pool), 3)
