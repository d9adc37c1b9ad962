import random

import pytest

from relfree.backends import Backend
from relfree.words import G_FACTOR, T_FACTOR, RelativeWord


def random_element(backend, rng, size=3):
    if backend.kind == "abelian":
        return tuple(rng.randint(-size, size) for _ in range(backend.rank))
    word = []
    for _ in range(rng.randint(0, 2 * size)):
        word.append(rng.choice([1, -1]) * rng.randint(1, backend.rank))
    from relfree.backends import free_reduce
    return free_reduce(tuple(word))


def random_word(G, T, rng, syllables=6, require_t=False):
    raw = []
    for _ in range(rng.randint(1, syllables)):
        if rng.random() < 0.5:
            raw.append((G_FACTOR, random_element(G, rng)))
        else:
            raw.append((T_FACTOR, random_element(T, rng)))
    w = RelativeWord.from_syllables(G, T, raw)
    if require_t and not w.t_syllables():
        raw.append((T_FACTOR, T.generator(1, 1)))
        w = RelativeWord.from_syllables(G, T, raw)
    return w


@pytest.fixture
def rng():
    return random.Random(20240817)
