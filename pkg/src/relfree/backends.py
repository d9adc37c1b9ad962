"""Concrete torsion-free coefficient groups and exact integer linear algebra.

Three backend kinds are supported: the infinite cyclic group Z, free abelian
groups Z^r, and free groups F_r.  All are torsion-free, locally indicable
(hence strong-UP), and have decidable membership in cyclic subgroups, so the
hypotheses of the classification theorems hold by construction.

Elements are plain tuples:
  * abelian backends: an exponent vector, e.g. (2, -1) in Z^2;
  * free backends: a freely reduced word of nonzero signed generator
    indices, e.g. (1, -2) for a1 * a2^-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form

ABELIAN = "abelian"
FREE = "free"


@dataclass(frozen=True)
class Backend:
    """Descriptor of a concrete group: ``kind`` is "abelian" or "free"."""

    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in (ABELIAN, FREE):
            raise ValueError("unknown backend kind: %r" % (self.kind,))
        if self.rank < 1:
            raise ValueError("backend rank must be >= 1")

    @property
    def is_cyclic(self):
        # Z = FreeAbelian(1) = Free(1); all three are the same group.
        return self.rank == 1

    @property
    def has_free_subgroup(self):
        return self.kind == FREE and self.rank >= 2

    @property
    def strong_up(self):
        # Both kinds are locally indicable, hence strong-UP.
        return True

    # -- element algebra ---------------------------------------------------

    def identity(self):
        if self.kind == ABELIAN:
            return (0,) * self.rank
        return ()

    def is_identity(self, g):
        return g == self.identity()

    def generator(self, i, exp=1):
        """The element a_i^exp (1-based index)."""
        if not 1 <= i <= self.rank:
            raise IndexError("generator index %d out of range for rank %d"
                             % (i, self.rank))
        if self.kind == ABELIAN:
            v = [0] * self.rank
            v[i - 1] = exp
            return tuple(v)
        if exp >= 0:
            return (i,) * exp
        return (-i,) * (-exp)

    def mul(self, g, h):
        if self.kind == ABELIAN:
            return tuple(a + b for a, b in zip(g, h))
        return free_reduce(tuple(g) + tuple(h))

    def inv(self, g):
        if self.kind == ABELIAN:
            return tuple(-a for a in g)
        return tuple(-x for x in reversed(g))

    def pow(self, g, k):
        if self.kind == ABELIAN:
            return tuple(k * a for a in g)
        base = g if k >= 0 else self.inv(g)
        out = ()
        for _ in range(abs(k)):
            out = self.mul(out, base)
        return out

    def evaluate(self, tokens):
        """Product of generator powers ``[(index, exp), ...]``, canonical form."""
        out = self.identity()
        for i, exp in tokens:
            out = self.mul(out, self.generator(i, exp))
        return out

    def to_string(self, g, letter):
        """Render an element with generator names letter1, letter2, ...

        Rank-1 backends drop the index (``g^2`` instead of ``g1^2``).
        """
        parts = []
        if self.kind == ABELIAN:
            for i, e in enumerate(g, start=1):
                if e:
                    parts.append(_token(letter, i, e, self.rank))
        else:
            for i, run in _runs(g):
                parts.append(_token(letter, abs(i), run if i > 0 else -run,
                                    self.rank))
        return " ".join(parts) if parts else "1"


def _token(letter, i, exp, rank):
    name = letter if rank == 1 else "%s%d" % (letter, i)
    return name if exp == 1 else "%s^%d" % (name, exp)


def _runs(word):
    """Group a reduced free word into (letter, multiplicity) runs."""
    out = []
    for x in word:
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [(x, n) for x, n in out]


def free_reduce(word):
    """Freely reduce a word of signed generator indices."""
    stack = []
    for x in word:
        if x == 0:
            raise ValueError("zero letter in free word")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def cyclic_word_decompose(word):
    """Split a reduced free word as c * u * c^-1 with u cyclically reduced."""
    w = list(word)
    c = []
    while len(w) >= 2 and w[0] == -w[-1]:
        c.append(w[0])
        w = w[1:-1]
    return tuple(c), tuple(w)


def cyclic_membership(backend, g, a):
    """Return k with g = a^k, or None if g is not in <a>.

    k = 0 exactly when g is the identity; if a is the identity the call
    succeeds only for g = identity.
    """
    if backend.is_identity(a):
        return 0 if backend.is_identity(g) else None
    if backend.is_identity(g):
        return 0
    if backend.kind == ABELIAN:
        k = None
        for gi, ai in zip(g, a):
            if ai == 0:
                if gi != 0:
                    return None
            else:
                q, r = divmod(gi, ai)
                if r != 0 or (k is not None and q != k):
                    return None
                k = q
        return k
    # Free backend: a^k has length >= k * len(core), core = cyclic part of a.
    _, core = cyclic_word_decompose(a)
    bound = len(g) // max(1, len(core)) + 1
    for k in range(1, bound + 1):
        for s in (k, -k):
            if backend.pow(a, s) == g:
                return s
    return None


def cyclic_index(backend, a):
    """Index of <a> in the backend group; math.inf when infinite."""
    if backend.is_identity(a):
        raise ValueError("cyclic_index of the identity")
    if backend.rank == 1:
        # Z in either guise: <a^k> has index |k|.
        if backend.kind == ABELIAN:
            return abs(a[0])
        return abs(len(a) if a[0] > 0 else -len(a))
    # A nontrivial cyclic subgroup of Z^r (r >= 2) or F_r (r >= 2) always
    # has infinite index.
    return math.inf


def smith_invariants(rows):
    """Divisor chain d1 | d2 | ... of an integer matrix (length min(m, n))."""
    if not rows or not rows[0]:
        return tuple()
    m = Matrix(rows)
    snf = smith_normal_form(m)
    n = min(m.rows, m.cols)
    return tuple(abs(int(snf[i, i])) for i in range(n))


def content(vector):
    """gcd of the coordinates (0 for the zero vector)."""
    return math.gcd(*(abs(x) for x in vector)) if vector else 0


@lru_cache(maxsize=None)
def unimodular_completion(sigma):
    """A unimodular integer matrix U with U @ sigma = e1.

    Requires sigma primitive (gcd of coordinates 1).  Built from a
    deterministic chain of extended-gcd row operations, so the induced
    coset representatives are reproducible.
    """
    r = len(sigma)
    if content(sigma) != 1:
        raise ValueError("sigma must be primitive")
    U = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    v = list(sigma)

    def rowop(i, j, a, b, c, d):
        # (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
        for col in range(r):
            U[i][col], U[j][col] = (a * U[i][col] + b * U[j][col],
                                    c * U[i][col] + d * U[j][col])
        v[i], v[j] = a * v[i] + b * v[j], c * v[i] + d * v[j]

    for j in range(1, r):
        if v[j] == 0:
            continue
        g, x, y = _xgcd(v[0], v[j])
        rowop(0, j, x, y, -(v[j] // g), v[0] // g)
    if v[0] < 0:
        for col in range(r):
            U[0][col] = -U[0][col]
        v[0] = -v[0]
    assert v[0] == 1 and all(x == 0 for x in v[1:])
    return tuple(tuple(row) for row in U)


def _xgcd(a, b):
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def coset_complement(sigma, rank):
    """Coset-representative map for Z^rank modulo <sigma>, sigma primitive.

    Returns ``rep`` with rep(tau + sigma) = rep(tau), rep idempotent,
    rep(0) = 0, and tau - rep(tau) always a multiple of sigma.
    """
    sigma = tuple(sigma)
    if len(sigma) != rank:
        raise ValueError("sigma has wrong length")
    U = unimodular_completion(sigma)

    def rep(tau):
        k = sum(U[0][j] * tau[j] for j in range(rank))
        return tuple(tau[j] - k * sigma[j] for j in range(rank))

    return rep


def abelian_coset_data(sigma, tau):
    """Representative and exponent for tau modulo <sigma> in Z^r, sigma != 0.

    Returns (rep, k) with tau = rep + k * sigma and rep depending only on
    the coset of tau.  Handles non-primitive sigma: for sigma = d * sigma0
    the sigma0-coordinate is reduced modulo d instead of to zero.
    """
    sigma = tuple(sigma)
    d = content(sigma)
    if d == 0:
        raise ValueError("sigma must be nonzero")
    sigma0 = tuple(x // d for x in sigma)
    U = unimodular_completion(sigma0)
    m = sum(U[0][j] * tau[j] for j in range(len(tau)))
    k, mrem = divmod(m, d)
    rep = tuple(tau[j] - k * sigma[j] for j in range(len(tau)))
    return rep, k


def identity_matrix():
    return ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


def mat_mul(A, B):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def mat_inv(A):
    det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    if det == 0:
        raise ZeroDivisionError("singular matrix")
    return ((A[1][1] / det, -A[0][1] / det),
            (-A[1][0] / det, A[0][0] / det))


def mat_pow(A, k):
    if k < 0:
        return mat_pow(mat_inv(A), -k)
    out = identity_matrix()
    for _ in range(k):
        out = mat_mul(out, A)
    return out


# Common descriptors.
Z = Backend(ABELIAN, 1)


def free_abelian(rank):
    return Backend(ABELIAN, rank)


def free_group(rank):
    return Backend(FREE, rank)
