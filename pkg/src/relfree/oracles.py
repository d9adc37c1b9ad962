"""Brute-force reference oracles, independent of the main implementations.

These evaluate the defining conditions directly (enumeration, gcd of
minors, repeated multiplication) and exist so that the optimized code
paths can be cross-checked; the CLI exposes them for test harnesses.
"""

from __future__ import annotations

import math
from itertools import combinations

from .backends import free_reduce

ZERO = "Zero"
ONE = "One"
HIGHER = "Higher"


def brute_complexity(seq):
    """Complexity class of a cyclic +-1 sequence, straight off the definition."""
    if not seq:
        raise ValueError("empty sequence")
    n = len(seq)
    if len(set(seq)) == 1:
        return ZERO
    never_pp = True
    never_mm = True
    for i in range(n):
        a, b = seq[i], seq[(i + 1) % n]
        if a == 1 and b == 1:
            never_pp = False
        if a == -1 and b == -1:
            never_mm = False
    if never_pp or never_mm:
        return ONE
    return HIGHER


def brute_proper_power(v):
    """Find v = u^k with k >= 2 by trying every divisor k and computing u^k.

    Powers are computed by repeated free-group multiplication (not string
    periodicity), so this is an independent check of the main routine.
    Returns (u, k) with k maximal, or None.
    """
    v = tuple(v)
    n = len(v)
    for k in range(n, 1, -1):
        if n % k:
            continue
        u = v[:n // k]
        acc = ()
        for _ in range(k):
            acc = free_reduce(acc + u)
        if acc == v:
            return u, k
    return None


def _det(rows):
    """Integer determinant by cofactor expansion (small matrices only)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * _det(minor)
    return total


def gcd_minors_invariants(rows):
    """Divisor chain via gcd of k x k minors: prod(d_1..d_k) = gcd of minors."""
    if not rows or not rows[0]:
        return tuple()
    m, n = len(rows), len(rows[0])
    rows = [list(r) for r in rows]
    size = min(m, n)
    prods = [1]  # prods[k] = gcd of all k x k minors
    for k in range(1, size + 1):
        g = 0
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = math.gcd(g, abs(_det(sub)))
        prods.append(g)
    divisors = []
    for k in range(1, size + 1):
        if prods[k] == 0:
            divisors.append(0)
        else:
            divisors.append(prods[k] // prods[k - 1])
    return tuple(divisors)
