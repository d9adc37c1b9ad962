"""Word invariants driving the classification.

Covers both unimodularity notions, the complexity trichotomy for rank-1
relators, proper-power detection in free groups, the normalized
complexity-1 relator shape, and the coset rewriting used for noncyclic
generator parts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .backends import (ABELIAN, FREE, abelian_coset_data, content,
                       cyclic_word_decompose, free_reduce)
from .words import G_FACTOR, T_FACTOR, RelativeWord

ZERO = "Zero"
ONE = "One"
HIGHER = "Higher"


@dataclass(frozen=True)
class UnimodularityReport:
    flavor: str                      # "cyclic" or "general"
    overall: bool
    exponent_sum: int | None = None
    cond_infinite_order: bool | None = None
    cond_normal: bool | None = None
    cond_quotient_strong_up: bool | None = None
    diagnostic: str = ""

    def as_dict(self):
        d = {"flavor": self.flavor, "overall": self.overall}
        if self.flavor == "cyclic":
            d["exponent_sum"] = self.exponent_sum
        else:
            d["cond_infinite_order"] = self.cond_infinite_order
            d["cond_normal"] = self.cond_normal
            d["cond_quotient_strong_up"] = self.cond_quotient_strong_up
        if self.diagnostic:
            d["diagnostic"] = self.diagnostic
        return d


def is_unimodular_cyclic(w):
    """Exponent sum of the single generator equals one."""
    if w.T.rank != 1:
        raise ValueError("cyclic unimodularity needs a rank-1 T part")
    s = w.exponent_sum(1)
    return UnimodularityReport("cyclic", s == 1, exponent_sum=s)


def is_unimodular_general(w):
    """The three-condition unimodularity test for a general T part.

    For free abelian T: the product of the T-syllables must be nonzero
    (infinite order), normality is automatic, and the quotient is strong-UP
    exactly when the product vector is primitive (the quotient is then
    torsion-free abelian, hence orderable).  For a free T part of rank >= 2
    no nontrivial cyclic subgroup is normal, so the test always fails.
    """
    sigma = w.t_product()
    if w.T.kind == ABELIAN:
        infinite = not w.T.is_identity(sigma)
        primitive = content(sigma) == 1
        return UnimodularityReport(
            "general", infinite and primitive,
            cond_infinite_order=infinite,
            cond_normal=True,
            cond_quotient_strong_up=infinite and primitive,
            diagnostic="" if infinite and primitive else
            ("syllable product is trivial" if not infinite else
             "syllable product is imprimitive; the quotient has torsion"))
    # Free T part.
    infinite = not w.T.is_identity(sigma)
    if w.T.rank == 1:
        # <t^k> is normal in Z; the quotient Z/k is torsion-free iff |k| = 1.
        k = w.exponent_sum(1)
        return UnimodularityReport(
            "general", abs(k) == 1,
            cond_infinite_order=infinite, cond_normal=True,
            cond_quotient_strong_up=abs(k) == 1)
    return UnimodularityReport(
        "general", False,
        cond_infinite_order=infinite, cond_normal=False,
        cond_quotient_strong_up=False,
        diagnostic="no nontrivial cyclic subgroup is normal in a free group "
                   "of rank >= 2")


# -- complexity ------------------------------------------------------------

def letter_exponents(w):
    """Cyclic sequence of t-exponents (+1/-1 per letter) of a rank-1 word."""
    if w.T.rank != 1:
        raise ValueError("letter exponents need a rank-1 T part")
    seq = []
    for e in w.t_syllables():
        k = e[0] if w.T.kind == ABELIAN else sum(1 if x > 0 else -1 for x in e)
        seq.extend([1 if k > 0 else -1] * abs(k))
    return seq


def complexity_of_sequence(seq):
    """Complexity class of a cyclic +-1 exponent sequence."""
    if not seq:
        raise ValueError("empty exponent sequence")
    if all(e == seq[0] for e in seq):
        return ZERO
    pairs = [(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]
    no_pp = (1, 1) not in pairs
    no_mm = (-1, -1) not in pairs
    return ONE if (no_pp or no_mm) else HIGHER


def complexity(w):
    """Complexity class of a cyclically reduced rank-1 relator."""
    if not w.is_cyclically_reduced:
        raise ValueError("complexity is defined for cyclically reduced words")
    return complexity_of_sequence(letter_exponents(w))


# -- proper powers ---------------------------------------------------------

def is_proper_power(v):
    """Maximal-root decomposition v = u^k (k >= 2) of a free-group word.

    ``v`` must be cyclically reduced; returns (u, k) or None.  Because v is
    cyclically reduced, v = u^k holds in the free group iff v is the literal
    k-fold concatenation of u, so this is a string periodicity check.
    """
    v = tuple(v)
    if not v:
        raise ValueError("empty word")
    if free_reduce(v) != v or cyclic_word_decompose(v)[0]:
        raise ValueError("input must be cyclically reduced")
    n = len(v)
    for period in range(1, n // 2 + 1):
        if n % period:
            continue
        if v == v[:period] * (n // period):
            return v[:period], n // period
    return None


# -- form (1): the normalized complexity-1 relator -------------------------

@dataclass(frozen=True)
class Form1:
    """Relator shape  c * t * prod_i (b_i * t^-1 * a_i * t)  with a_i, b_i != 1."""

    c: tuple
    pairs: tuple          # ((b_0, a_0), ..., (b_m, a_m)), all nonidentity
    G: object = field(repr=False, default=None)
    T: object = field(repr=False, default=None)

    @property
    def m(self):
        return len(self.pairs) - 1

    def rebuild(self):
        t = self.T.generator(1, 1)
        t_inv = self.T.generator(1, -1)
        raw = [(G_FACTOR, self.c), (T_FACTOR, t)]
        for b, a in self.pairs:
            raw += [(G_FACTOR, b), (T_FACTOR, t_inv),
                    (G_FACTOR, a), (T_FACTOR, t)]
        return RelativeWord.from_syllables(self.G, self.T, raw)


def _cyclic_letter_pairs(w):
    """Pairs (h_i, e_i): coefficient h_i immediately before t-letter e_i.

    Multi-letter syllables are split into single letters with identity
    coefficients in between; a trailing coefficient is merged cyclically
    into the leading one (w must be cyclically reduced).
    """
    if not w.is_cyclically_reduced:
        raise ValueError("cyclically reduced input required")
    syl = list(w.syllables)
    lead = w.G.identity()
    if syl and syl[0][0] == G_FACTOR:
        lead = syl[0][1]
        syl = syl[1:]
    if syl and syl[-1][0] == G_FACTOR:
        # Possible only when the word starts with a T-syllable.
        lead = w.G.mul(syl[-1][1], lead)
        syl = syl[:-1]
    pairs = []
    pending = lead
    for f, e in syl:
        if f == G_FACTOR:
            pending = w.G.mul(pending, e)
            continue
        k = e[0] if w.T.kind == ABELIAN else sum(1 if x > 0 else -1 for x in e)
        sign = 1 if k > 0 else -1
        for i in range(abs(k)):
            pairs.append((pending, sign))
            pending = w.G.identity()
    if not w.G.is_identity(pending):
        # Trailing coefficient wraps around to the front.
        h0, e0 = pairs[0]
        pairs[0] = (w.G.mul(pending, h0), e0)
    return pairs


def to_form1(w):
    """Rotate a cyclically reduced unimodular complexity-1 word into form (1).

    A unimodular complexity-1 exponent sequence has p positive and p-1
    negative letters with no cyclically adjacent pair of negatives, so the
    positive-positive adjacency occurs exactly once; rotating the cyclic word
    to start at that adjacency yields  c t b_0 t^-1 a_0 t ... b_m t^-1 a_m t.
    """
    rep = is_unimodular_cyclic(w)
    if not rep.overall:
        raise ValueError("form (1) requires a unimodular word")
    if complexity(w) != ONE:
        raise ValueError("form (1) requires complexity One")
    pairs = _cyclic_letter_pairs(w)
    n = len(pairs)
    starts = [i for i in range(n)
              if pairs[i][1] == 1 and pairs[(i - 1) % n][1] == 1]
    assert len(starts) == 1, "unimodular complexity-1 words have a unique " \
                             "positive-positive adjacency"
    i = starts[0]
    rot = pairs[i:] + pairs[:i]
    # rot = (c, +), (b_0, -), (a_0, +), (b_1, -), (a_1, +), ...
    c = rot[0][0]
    body = rot[1:]
    assert len(body) % 2 == 0
    out = []
    for j in range(0, len(body), 2):
        b, eb = body[j]
        a, ea = body[j + 1]
        assert eb == -1 and ea == 1
        if w.G.is_identity(a) or w.G.is_identity(b):
            raise ValueError("degenerate form (1): identity a_i or b_i")
        out.append((b, a))
    return Form1(c, tuple(out), G=w.G, T=w.T)


# -- coset rewriting for noncyclic abelian T parts -------------------------

@dataclass(frozen=True)
class CosetEntry:
    coefficient: tuple
    label: tuple          # coset representative, also used as the label
    rep: tuple
    k: int
    prefix: tuple         # the prefix product this entry decomposes


@dataclass(frozen=True)
class CosetForm:
    t: tuple              # product of the T-syllables
    entries: tuple
    labels: frozenset     # X_1: distinct coset labels among the entries
    source: object        # the (rotated) word the reassembly identity uses

    def reassemble(self):
        """(prod_i  p_{i-1} g_i p_{i-1}^-1) * t, as a word in G * T."""
        w = self.source
        out = RelativeWord.identity(w.G, w.T)
        prefix = w.T.identity()
        i = 0
        for f, e in w.syllables:
            if f == G_FACTOR:
                conj = RelativeWord.from_syllables(
                    w.G, w.T,
                    [(T_FACTOR, prefix), (G_FACTOR, e),
                     (T_FACTOR, w.T.inv(prefix))])
                out = out.mul(conj)
                i += 1
            else:
                prefix = w.T.mul(prefix, e)
        return out.mul(RelativeWord.from_syllables(
            w.G, w.T, [(T_FACTOR, self.t)]))


def t_syllable_span_rank(w):
    """Rank of the subgroup of Z^r generated by the T-syllables."""
    from .backends import smith_invariants
    rows = [list(e) for e in w.t_syllables()]
    if not rows:
        return 0
    return sum(1 for d in smith_invariants(rows) if d != 0)


def coset_rewrite(w):
    """Coset data of the prefix products of the T-syllables, modulo <t>.

    Requires a free abelian T part, overall unimodularity, and a noncyclic
    T-syllable subgroup.  The word is first rotated (conjugated) so that it
    ends with a T-syllable, making the reassembly identity exact.
    """
    if w.T.kind != ABELIAN:
        raise ValueError("coset rewriting needs a free abelian T part")
    if not is_unimodular_general(w).overall:
        raise ValueError("coset rewriting needs a unimodular word")
    u, _ = w.cyclic_reduce()
    # Cyclic reduction can merge the outermost T-syllables, so the span
    # condition must be checked on the reduced word.
    if t_syllable_span_rank(u) < 2:
        raise ValueError("the T-syllables generate a cyclic subgroup")
    syl = list(u.syllables)
    if syl and syl[-1][0] == G_FACTOR:
        # Rotate the cyclic word so a T-syllable comes last.
        syl = syl[-1:] + syl[:-1]
    source = RelativeWord(w.G, w.T, tuple(syl))
    sigma = source.t_product()
    entries = []
    prefix = w.T.identity()
    for f, e in source.syllables:
        if f == G_FACTOR:
            rep, k = abelian_coset_data(sigma, prefix)
            entries.append(CosetEntry(e, rep, rep, k, prefix))
        else:
            prefix = w.T.mul(prefix, e)
    if not entries:
        # No coefficients at all: the single prefix 1 still carries a coset.
        rep, k = abelian_coset_data(sigma, w.T.identity())
        entries.append(CosetEntry(w.G.identity(), rep, rep, k,
                                  w.T.identity()))
    labels = frozenset(en.label for en in entries)
    return CosetForm(sigma, tuple(entries), labels, source)
