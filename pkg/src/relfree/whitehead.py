"""Whitehead minimization for cyclic words over a rank-2 free group.

Letters are nonzero signed integers: 1 = a, -1 = a^-1, 2 = b, -2 = b^-1.
Peak reduction guarantees that greedy descent through Whitehead
automorphisms reaches the minimal length in the Aut(F_2)-orbit, and that
all minimal representatives are connected by length-preserving moves; the
breadth-first closure therefore enumerates the full canonical set.
"""

from __future__ import annotations

from .backends import cyclic_word_decompose, free_reduce

_LETTER_KEY = {1: 0, -1: 1, 2: 2, -2: 3}


def cyclic_reduce_word(w):
    return cyclic_word_decompose(free_reduce(w))[1]


def canonical_cyclic(w):
    """Lexicographically least rotation of w or of its inverse."""
    w = cyclic_reduce_word(w)
    if not w:
        return ()
    inv = tuple(-x for x in reversed(w))
    best = None
    for word in (w, inv):
        for i in range(len(word)):
            rot = word[i:] + word[:i]
            key = tuple(_LETTER_KEY[x] for x in rot)
            if best is None or key < best[0]:
                best = (key, rot)
    return best[1]


def _substitution(images):
    """Endomorphism of F_2 from images = {1: word, 2: word}."""
    def apply(w):
        out = []
        for x in w:
            img = images[abs(x)]
            out.extend(img if x > 0 else [-y for y in reversed(img)])
        return free_reduce(tuple(out))
    return apply


def whitehead_automorphisms():
    """All Whitehead automorphisms of F_2 as word maps (20 in total).

    Type I: the eight letter permutations/inversions.  Type II: for each
    multiplier x in {a, a^-1, b, b^-1}, the other generator y maps to one
    of y*x, x^-1*y, x^-1*y*x.
    """
    maps = []
    for a_img in ((1,), (-1,), (2,), (-2,)):
        for b_img in ((1,), (-1,), (2,), (-2,)):
            if abs(a_img[0]) != abs(b_img[0]):
                maps.append(_substitution({1: a_img, 2: b_img}))
    for x in (1, -1, 2, -2):
        y = 2 if abs(x) == 1 else 1
        for y_img in ((y, x), (-x, y), (-x, y, x)):
            maps.append(_substitution({abs(x): (abs(x),), y: y_img}))
    return maps


_AUTOS = whitehead_automorphisms()


def cyclic_length(w):
    return len(cyclic_reduce_word(w))


def whitehead_minimize(v):
    """Minimal cyclic length in the Aut(F_2)-orbit and the canonical set.

    Returns (length, tuple of canonical cyclic words at minimal length,
    sorted).  The canonical set is closed under rotation and inversion by
    construction of :func:`canonical_cyclic`.
    """
    cur = canonical_cyclic(v)
    if not cur:
        return 0, ((),)
    # Greedy descent: apply any length-reducing move until none exists.
    improved = True
    while improved:
        improved = False
        for phi in _AUTOS:
            img = cyclic_reduce_word(phi(cur))
            if len(img) < len(cur):
                cur = canonical_cyclic(img)
                improved = True
                break
    # Breadth-first closure at the minimal length.
    minimal = len(cur)
    seen = {cur}
    frontier = [cur]
    while frontier:
        nxt = []
        for w in frontier:
            for phi in _AUTOS:
                img = cyclic_reduce_word(phi(w))
                if len(img) != minimal:
                    continue
                canon = canonical_cyclic(img)
                if canon not in seen:
                    seen.add(canon)
                    nxt.append(canon)
        frontier = nxt
    return minimal, tuple(sorted(seen, key=lambda w: tuple(_LETTER_KEY[x]
                                                           for x in w)))
