"""Brute-force reference pmfs by exhausting every urn arrangement.

Each of the C(N, m) placements of the first-color balls among the N draw
positions is equally likely, so walking every placement and tallying the
stopping time gives the exact distribution as a rational number. This is
deliberately formula-free: it shares nothing with the closed-form pmfs it
is used to validate.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .distributions import Dist, UrnParams


def _y_nh(seq: bytes, c: int) -> int:
    succ = fail = 0
    for ball in seq:
        if ball:
            succ += 1
            if succ == c:
                return fail
        else:
            fail += 1
    raise AssertionError("c <= m guarantees the c-th success is reached")


def _y_minnh(seq: bytes, c: int) -> int:
    succ = fail = 0
    for ball in seq:
        if ball:
            succ += 1
        else:
            fail += 1
        if succ == c or fail == c:
            return succ + fail - c
    raise AssertionError("c <= min(m, N-m) guarantees one color reaches c")


def _y_maxnh(seq: bytes, c: int) -> int:
    succ = fail = 0
    for ball in seq:
        if ball:
            succ += 1
        else:
            fail += 1
        if succ >= c and fail >= c:
            return succ + fail - 2 * c
    raise AssertionError("c <= min(m, N-m) guarantees both colors reach c")


_WALK = {Dist.NH: _y_nh, Dist.MINNH: _y_minnh, Dist.MAXNH: _y_maxnh}


def enumerate_pmf(dist: Dist, params: UrnParams) -> dict[int, Fraction]:
    """Exact pmf of an urn scheme by exhausting all C(N, m) orderings.

    Intended for small N (the position subsets are enumerated literally).
    Returns {y: probability} with Fraction values summing to exactly 1.
    """
    walk = _WALK[dist]
    N, m, c = params.N, params.m, params.c
    counts: dict[int, int] = {}
    for positions in itertools.combinations(range(N), m):
        seq = bytearray(N)
        for i in positions:
            seq[i] = 1
        y = walk(bytes(seq), c)
        counts[y] = counts.get(y, 0) + 1
    total = math.comb(N, m)
    return {y: Fraction(k, total) for y, k in sorted(counts.items())}
