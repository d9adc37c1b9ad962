"""Words in the free product G * T and the elementary rewriting on relators.

A :class:`RelativeWord` is stored as its canonical reduced form in the free
product: an alternating sequence of nonidentity syllables, each labelled with
the factor ("G" for the coefficient group, "T" for the generator part).

Token grammar (shared with the CLI)::

    word  := token+
    token := sym ("^" int)?
    sym   := "g" int? | "x" int | "t"

``g`` is an alias for ``g1`` and ``t`` for ``x1``.  A maximal run of
coefficient tokens is evaluated to one G-syllable, a maximal run of x-tokens
to one T-syllable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .backends import Backend, FREE, ABELIAN

G_FACTOR = "G"
T_FACTOR = "T"

_TOKEN_RE = re.compile(r"^(g|t|g(\d+)|x(\d+))(\^(-?\d+))?$")


class ParseError(ValueError):
    pass


def _reduce_syllables(G, T, raw):
    """Merge adjacent same-factor syllables and drop identities."""
    backends = {G_FACTOR: G, T_FACTOR: T}
    stack = []
    for factor, elem in raw:
        b = backends[factor]
        if b.is_identity(elem):
            continue
        if stack and stack[-1][0] == factor:
            merged = b.mul(stack[-1][1], elem)
            stack.pop()
            if not b.is_identity(merged):
                stack.append((factor, merged))
                continue
            # Cancellation may expose a new same-factor adjacency: re-merge.
            while len(stack) >= 2 and stack[-1][0] == stack[-2][0]:
                f = stack[-1][0]
                m = backends[f].mul(stack[-2][1], stack[-1][1])
                stack.pop()
                stack.pop()
                if not backends[f].is_identity(m):
                    stack.append((f, m))
        else:
            stack.append((factor, elem))
    return tuple(stack)


@dataclass(frozen=True)
class RelativeWord:
    """Reduced word in G * T."""

    G: Backend
    T: Backend
    syllables: tuple

    @classmethod
    def from_syllables(cls, G, T, raw):
        return cls(G, T, _reduce_syllables(G, T, list(raw)))

    @classmethod
    def identity(cls, G, T):
        return cls(G, T, ())

    @classmethod
    def parse(cls, text, G, T):
        tokens = text.split()
        if not tokens:
            raise ParseError("empty word")
        raw = []
        for tok in tokens:
            m = _TOKEN_RE.match(tok)
            if not m:
                raise ParseError("unknown token %r" % tok)
            sym = m.group(1)
            exp = int(m.group(5)) if m.group(5) is not None else 1
            if sym == "g" or m.group(2) is not None:
                idx = int(m.group(2)) if m.group(2) is not None else 1
                if not 1 <= idx <= G.rank:
                    raise ParseError("coefficient generator g%d out of range "
                                     "(rank %d)" % (idx, G.rank))
                raw.append((G_FACTOR, G.generator(idx, exp)))
            else:
                idx = int(m.group(3)) if m.group(3) is not None else 1
                if not 1 <= idx <= T.rank:
                    raise ParseError("generator x%d out of range (rank %d)"
                                     % (idx, T.rank))
                raw.append((T_FACTOR, T.generator(idx, exp)))
        return cls.from_syllables(G, T, raw)

    # -- basics ------------------------------------------------------------

    def __len__(self):
        return len(self.syllables)

    @property
    def is_identity(self):
        return not self.syllables

    def mul(self, other):
        return RelativeWord.from_syllables(
            self.G, self.T, self.syllables + other.syllables)

    def invert(self):
        backends = {G_FACTOR: self.G, T_FACTOR: self.T}
        inv = tuple((f, backends[f].inv(e))
                    for f, e in reversed(self.syllables))
        return RelativeWord(self.G, self.T, inv)

    def conjugate(self, c):
        """self^c = c^-1 * self * c."""
        return c.invert().mul(self).mul(c)

    def t_syllables(self):
        return [e for f, e in self.syllables if f == T_FACTOR]

    def g_syllables(self):
        return [e for f, e in self.syllables if f == G_FACTOR]

    # -- rewriting ---------------------------------------------------------

    @property
    def is_cyclically_reduced(self):
        s = self.syllables
        return len(s) <= 1 or s[0][0] != s[-1][0]

    def cyclic_reduce(self):
        """Return (u, c) with u cyclically reduced and self = c^-1 * u * c."""
        backends = {G_FACTOR: self.G, T_FACTOR: self.T}
        syl = list(self.syllables)
        conj = RelativeWord.identity(self.G, self.T)
        while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
            factor, last = syl[-1]
            # u -> last * u * last^-1; conjugator picks up last on the left.
            conj = RelativeWord.from_syllables(
                self.G, self.T, [(factor, last)]).mul(conj)
            merged = backends[factor].mul(last, syl[0][1])
            syl = syl[1:-1]
            if not backends[factor].is_identity(merged):
                syl.insert(0, (factor, merged))
        return RelativeWord(self.G, self.T, tuple(syl)), conj

    def exponent_sum(self, j=1):
        """Sum of the exponents of the j-th T-generator across all syllables."""
        total = 0
        for e in self.t_syllables():
            if self.T.kind == ABELIAN:
                total += e[j - 1]
            else:
                total += sum(1 if x == j else -1 if x == -j else 0 for x in e)
        return total

    def erase_coefficients(self):
        """Concatenate all T-syllables and reduce in T (drop the G part)."""
        out = self.T.identity()
        for e in self.t_syllables():
            out = self.T.mul(out, e)
        return out

    def t_product(self):
        """Product of the T-syllables in order, evaluated in T."""
        return self.erase_coefficients() if self.T.kind == FREE \
            else self._abelian_t_sum()

    def _abelian_t_sum(self):
        out = self.T.identity()
        for e in self.t_syllables():
            out = self.T.mul(out, e)
        return out

    def normalize_orientation(self):
        """For rank-1 T parts: flip to the inverse if the exponent sum is < 0."""
        if self.T.rank != 1:
            raise ValueError("orientation normalization needs a rank-1 T part")
        return self.invert() if self.exponent_sum(1) < 0 else self

    # -- rendering ---------------------------------------------------------

    def to_string(self):
        if not self.syllables:
            return "1"
        parts = []
        for f, e in self.syllables:
            if f == G_FACTOR:
                parts.append(self.G.to_string(e, "g"))
            else:
                parts.append(self.T.to_string(e, "t" if self.T.rank == 1
                                              else "x"))
        return " ".join(parts)

    def __str__(self):
        return self.to_string()
