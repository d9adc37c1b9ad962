import random

from relfree.backends import free_reduce
from relfree.whitehead import (canonical_cyclic, cyclic_length,
                               whitehead_automorphisms, whitehead_minimize)


def test_canonical_cyclic_examples():
    assert canonical_cyclic((2, 1)) == (1, 2)
    assert canonical_cyclic((-1, -2)) == (1, 2)  # inverse folded in
    assert canonical_cyclic((1, -1)) == ()
    assert canonical_cyclic((2, 1, -2)) == (1,)


def test_canonical_cyclic_invariance(rng):
    for _ in range(200):
        w = tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(1, 8)))
        w = canonical_cyclic(w)
        if not w:
            continue
        k = rng.randrange(len(w))
        assert canonical_cyclic(w[k:] + w[:k]) == w
        assert canonical_cyclic(tuple(-x for x in reversed(w))) == w


def test_automorphism_count_and_bijectivity():
    autos = whitehead_automorphisms()
    assert len(autos) == 20
    # Each map must be invertible: check injectivity on short words.
    words = [(1,), (-1,), (2,), (-2,), (1, 2), (1, -2), (2, 1), (-1, 2)]
    for phi in autos:
        images = {phi(w) for w in words}
        assert len(images) == len(words)


def test_automorphisms_preserve_identity_and_inverses(rng):
    autos = whitehead_automorphisms()
    for phi in autos:
        assert phi(()) == ()
    for _ in range(100):
        w = tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(1, 6)))
        w = free_reduce(w)
        inv = tuple(-x for x in reversed(w))
        phi = rng.choice(autos)
        assert phi(inv) == tuple(-x for x in reversed(phi(w)))


def test_minimize_commutator():
    length, canon = whitehead_minimize((1, 2, -1, -2))
    assert length == 4
    assert canon == ((1, 2, -1, -2),)


def test_minimize_primitive_conjugate():
    # b a b^-1 is primitive: orbit minimum is a single letter.
    length, canon = whitehead_minimize((2, 1, -2))
    assert length == 1
    assert canon == ((1,), (2,))


def test_minimize_cube():
    length, canon = whitehead_minimize((1, 1, 1))
    assert length == 3
    assert canon == ((1, 1, 1), (2, 2, 2))


def test_minimize_bs12_relator():
    # a^-1 b a b^-2, the rank-2 relator of BS(1,2).
    length, canon = whitehead_minimize((-1, 2, 1, -2, -2))
    assert length == 5
    assert canon == ((1, 1, 2, -1, -2), (1, 1, -2, -1, 2),
                     (1, 2, -1, -2, -2), (1, 2, 2, -1, -2))


def test_minimize_is_orbit_invariant(rng):
    # Scrambling by random automorphisms must not change the result.
    autos = whitehead_automorphisms()
    for base in ((1, 2, -1, -2), (-1, 2, 1, -2, -2), (1, 1, 2)):
        expected = whitehead_minimize(base)
        for _ in range(10):
            w = base
            for _ in range(rng.randint(1, 5)):
                w = rng.choice(autos)(w)
            assert whitehead_minimize(w) == expected


def test_minimize_never_increases_length(rng):
    for _ in range(50):
        w = tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(1, 7)))
        length, canon = whitehead_minimize(w)
        assert length <= cyclic_length(w)
        assert all(len(c) == length for c in canon)
        assert all(canonical_cyclic(c) == c for c in canon)
