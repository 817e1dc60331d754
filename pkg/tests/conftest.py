import random

import pytest

from ospd import make_alphabet


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def sup46():
    # large enough super alphabet to hold the worked examples
    return make_alphabet("super", 4, 6)


@pytest.fixture(scope="session")
def cl40():
    return make_alphabet("classical", 4, 0)


@pytest.fixture(scope="session")
def sup22():
    return make_alphabet("super", 2, 2)


def letters(alphabet, *names):
    return tuple(alphabet.parse(s) for s in names)


def random_column(rng, alphabet, height):
    """A random single column of the given height, or None if impossible."""
    col = []
    rank = 0
    for _ in range(height):
        if rank >= alphabet.size:
            return None
        rank = rng.randrange(rank, alphabet.size)
        a = alphabet.letter(rank)
        col.append(a)
        if a.parity == 0:
            rank += 1
    return tuple(col)


def random_matrix(rng, alphabet, ell, max_boxes):
    from ospd.tableau import make_matrix
    cols = []
    budget = max_boxes
    for _ in range(ell):
        h = rng.randrange(0, budget + 1)
        col = None
        while col is None:
            col = random_column(rng, alphabet, rng.randrange(0, h + 1) if h else 0)
        cols.append(col)
        budget -= len(col)
    return make_matrix(cols)
