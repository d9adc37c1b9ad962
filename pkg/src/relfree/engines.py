"""Computable models used to verify witness pairs.

Free-product and cyclic-amalgam normal forms over the concrete backends,
Britton reduction for HNN extensions with cyclic associated subgroups, the
exact 2x2 matrix model of BS(1,2), and a bounded checker that searches for
relations between two candidate generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .backends import (ABELIAN, Backend, abelian_coset_data,
                       cyclic_membership, cyclic_word_decompose,
                       identity_matrix, mat_mul, mat_inv, mat_pow)


# -- free products ---------------------------------------------------------

class FreeProduct:
    """A * B with alternating-syllable normal forms.

    Elements are tuples of (factor_index, element) with every element
    nonidentity and no two consecutive entries in the same factor.
    """

    def __init__(self, A, B):
        self.factors = (A, B)

    def identity(self):
        return ()

    def embed(self, factor, elem):
        if self.factors[factor].is_identity(elem):
            return ()
        return ((factor, elem),)

    def nf(self, raw):
        """Normal form of an arbitrary syllable sequence."""
        stack = []
        for factor, elem in raw:
            b = self.factors[factor]
            if b.is_identity(elem):
                continue
            if stack and stack[-1][0] == factor:
                merged = b.mul(stack[-1][1], elem)
                stack.pop()
                if not b.is_identity(merged):
                    stack.append((factor, merged))
            else:
                stack.append((factor, elem))
        return tuple(stack)

    def mul(self, x, y):
        return self.nf(tuple(x) + tuple(y))

    def inv(self, x):
        return tuple((f, self.factors[f].inv(e)) for f, e in reversed(x))

    def is_identity(self, x):
        return not x


def free_product_nf(factors, raw):
    """Normal form of a word over A * B, given as (factor, element) pairs."""
    return FreeProduct(*factors).nf(raw)


# -- amalgamated products over cyclic subgroups ----------------------------

class CyclicAmalgam:
    """A *_{a = b} B where <a> <= A and <b> <= B are identified.

    Normal forms are sequences of nonidentity coset representatives with
    alternating factors, followed by a trailing element a^k of the
    amalgamated subgroup.  Representative choosers are deterministic:
    Hermite-complement representatives for abelian factors, shortest-lex
    representatives for free factors.  The degenerate identification
    a = b = 1 is allowed and yields the plain free product.
    """

    def __init__(self, A, B, a, b):
        self.factors = (A, B)
        self.subgens = (a, b)
        trivial = A.is_identity(a) and B.is_identity(b)
        if not trivial:
            if A.is_identity(a) or B.is_identity(b):
                raise ValueError("identified subgroups must both be trivial "
                                 "or both infinite cyclic")
            # Torsion is impossible for these backends, but the invariant is
            # part of the contract, so check it anyway.
            for backend, gen in ((A, a), (B, b)):
                if backend.kind == ABELIAN and backend.is_identity(gen):
                    raise ValueError("torsion identification")
        self.trivial = trivial

    def identity(self):
        return ((), 0)

    def _coset_rep(self, factor, y):
        """(rep, k) with y = rep * gen^k and rep the chosen representative."""
        backend = self.factors[factor]
        gen = self.subgens[factor]
        if self.trivial:
            return y, 0
        if backend.kind == ABELIAN:
            rep, k = abelian_coset_data(gen, y)
            return rep, k
        # Free factor: shortest-lex representative y * gen^-k.
        _, core = cyclic_word_decompose(gen)
        bound = len(y) // max(1, len(core)) + 2
        best = None
        for k in range(-bound, bound + 1):
            cand = backend.mul(y, backend.pow(gen, -k))
            key = (len(cand), cand)
            if best is None or key < best[0]:
                best = (key, cand, k)
        return best[1], best[2]

    def _absorb(self, reps, tail, factor, elem):
        """Multiply the normal-form state (reps, tail) by one syllable."""
        backend = self.factors[factor]
        if backend.is_identity(elem):
            return tail
        carried = backend.mul(backend.pow(self.subgens[factor], tail), elem)
        if reps and reps[-1][0] == factor:
            carried = backend.mul(reps.pop()[1], carried)
        rep, k = self._coset_rep(factor, carried)
        if not backend.is_identity(rep):
            reps.append((factor, rep))
        return k

    def nf(self, raw):
        """Normal form of a sequence of (factor, element) syllables."""
        reps = []       # [(factor, representative), ...]
        tail = 0        # trailing amalgam element gen^tail
        for factor, elem in raw:
            tail = self._absorb(reps, tail, factor, elem)
        return tuple(reps), tail

    def mul(self, x, y):
        reps, tail = list(x[0]), x[1]
        for factor, elem in y[0]:
            tail = self._absorb(reps, tail, factor, elem)
        return tuple(reps), tail + y[1]

    def inv(self, x):
        reps, tail = x
        raw = []
        if tail:
            raw.append((0, self.factors[0].pow(self.subgens[0], -tail)))
        for factor, rep in reversed(reps):
            raw.append((factor, self.factors[factor].inv(rep)))
        return self.nf(raw)

    def is_identity(self, x):
        reps, tail = x
        return not reps and tail == 0


def amalgam_nf(A, B, a, b, raw):
    return CyclicAmalgam(A, B, a, b).nf(raw)


# -- HNN extensions with cyclic base ---------------------------------------

@dataclass(frozen=True)
class HnnWord:
    """g_0 s^{e_1} g_1 ... s^{e_k} g_k over a cyclic base <a>.

    Stored as (c_0, ((e_1, c_1), ..., (e_k, c_k))) where g_i = a^{c_i} and
    each e_i is +-1.
    """

    head: int
    tail: tuple

    @classmethod
    def from_letters(cls, letters):
        """letters: sequence of ("s", +-1) or ("a", exponent)."""
        head = 0
        tail = []
        for kind, val in letters:
            if kind == "a":
                if tail:
                    e, c = tail[-1]
                    tail[-1] = (e, c + val)
                else:
                    head += val
            elif kind == "s":
                step = 1 if val > 0 else -1
                for _ in range(abs(val)):
                    tail.append((step, 0))
            else:
                raise ValueError("unknown letter kind %r" % (kind,))
        return cls(head, tuple(tail))

    @property
    def stable_letters(self):
        return len(self.tail)

    def is_trivial_shape(self):
        return not self.tail and self.head == 0


def britton_reduce(h, m):
    """Eliminate pinches in an HNN word over base Z with a -> a^m.

    A subword s^-1 a^j s becomes a^{m j}; a subword s a^j s^-1 with m | j
    becomes a^{j / m}.  Free cancellations s^-1 s / s s^-1 are the j = 0
    cases.  The result is pinch-free; by Britton's lemma it is trivial iff
    the input represents the identity.
    """
    if m == 0:
        raise ValueError("associated map exponent must be nonzero")
    head = h.head
    tail = list(h.tail)
    changed = True
    while changed:
        changed = False
        for i in range(len(tail) - 1):
            (e1, c1), (e2, c2) = tail[i], tail[i + 1]
            if e1 == -1 and e2 == 1:
                merged = m * c1 + c2
                if i > 0:
                    pe, pc = tail[i - 1]
                    tail[i - 1] = (pe, pc + merged)
                else:
                    head += merged
                del tail[i:i + 2]
                changed = True
                break
            if e1 == 1 and e2 == -1 and c1 % m == 0:
                merged = c1 // m + c2
                if i > 0:
                    pe, pc = tail[i - 1]
                    tail[i - 1] = (pe, pc + merged)
                else:
                    head += merged
                del tail[i:i + 2]
                changed = True
                break
    return HnnWord(head, tuple(tail))


# -- BS(1,2) matrix model --------------------------------------------------

BS12_G = ((Fraction(1, 2), Fraction(0)), (Fraction(0), Fraction(1)))
BS12_T = ((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1)))


def bs12_matrix(letters):
    """Image of a word over {g, t} under the faithful BS(1,2) representation.

    ``letters``: sequence of ("g", exp) or ("t", exp).  The relator
    g^-1 t g t^-2 maps to the identity; any nonidentity matrix certifies a
    nontrivial group element.
    """
    out = identity_matrix()
    for kind, exp in letters:
        base = BS12_G if kind == "g" else BS12_T
        out = mat_mul(out, mat_pow(base, exp))
    return out


# -- bounded relation search -----------------------------------------------

LETTERS = ("u", "u^-1", "v", "v^-1")
_INVERSE = {"u": "u^-1", "u^-1": "u", "v": "v^-1", "v^-1": "v"}


@dataclass
class ModelPair:
    """A pair of elements in a computable model of the target group."""

    model: object       # provides mul / inv / identity / is_identity
    u: object
    v: object

    def evaluate(self, letters):
        vals = {"u": self.u, "u^-1": self.model.inv(self.u),
                "v": self.v, "v^-1": self.model.inv(self.v)}
        out = self.model.identity()
        for letter in letters:
            out = self.model.mul(out, vals[letter])
        return out


def bounded_no_relation_check(pair, depth):
    """Search all freely reduced words over {u, v}^+-1 of length <= depth.

    Returns (True, None) when no nonempty word evaluates to the identity,
    else (False, letters) with the length-lex-least counterexample (letter
    order u < u^-1 < v < v^-1).  The counterexample is re-verified through
    the model before being returned.
    """
    model = pair.model
    vals = {"u": pair.u, "u^-1": model.inv(pair.u),
            "v": pair.v, "v^-1": model.inv(pair.v)}
    frontier = [((), model.identity())]
    for _ in range(depth):
        nxt = []
        for word, val in frontier:
            for letter in LETTERS:
                if word and _INVERSE[word[-1]] == letter:
                    continue
                nxt.append((word + (letter,), model.mul(val, vals[letter])))
        for cand, cval in nxt:
            if model.is_identity(cval):
                # Re-verify from scratch before reporting.
                assert model.is_identity(pair.evaluate(cand))
                return False, cand
        frontier = nxt
    return True, None


# -- model constructors ----------------------------------------------------

class BackendModel:
    """A backend group itself as an equality model."""

    def __init__(self, backend):
        self.backend = backend

    def identity(self):
        return self.backend.identity()

    def mul(self, x, y):
        return self.backend.mul(x, y)

    def inv(self, x):
        return self.backend.inv(x)

    def is_identity(self, x):
        return self.backend.is_identity(x)


class FreeProductModel:
    def __init__(self, A, B):
        self.fp = FreeProduct(A, B)

    def identity(self):
        return self.fp.identity()

    def mul(self, x, y):
        return self.fp.mul(x, y)

    def inv(self, x):
        return self.fp.inv(x)

    def is_identity(self, x):
        return self.fp.is_identity(x)


class AmalgamModel:
    def __init__(self, A, B, a, b):
        self.am = CyclicAmalgam(A, B, a, b)

    def identity(self):
        return self.am.identity()

    def mul(self, x, y):
        return self.am.mul(x, y)

    def inv(self, x):
        return self.am.inv(x)

    def is_identity(self, x):
        return self.am.is_identity(x)


class MatrixModel:
    """Exact 2x2 rational matrices under multiplication."""

    def identity(self):
        return identity_matrix()

    def mul(self, x, y):
        return mat_mul(x, y)

    def inv(self, x):
        return mat_inv(x)

    def is_identity(self, x):
        return x == identity_matrix()
