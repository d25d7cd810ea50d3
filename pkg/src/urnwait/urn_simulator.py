"""Stochastic simulation of every sampling scheme, urn and Bernoulli alike.

The urn is never materialized: two remaining-count integers fully determine
the law of the next draw (color one comes up with probability
remaining1/total), which is equivalent to shuffling the urn up front.

Randomness comes from xoshiro256** 1.0 (Blackman & Vigna, 2018), seeded
through splitmix64, rather than platform default randomness: the algorithm
is fixed here, so identical seeds reproduce identical draw sequences on any
platform and any Python version. Integer draws use Lemire's multiply-shift
reduction with rejection, which is exactly uniform.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .distributions import (
    BernoulliParams,
    Dist,
    PmfTable,
    UrnParams,
)
from .errors import ParameterError

_M64 = (1 << 64) - 1
_TWO64 = 1 << 64


class Color(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class DrawOutcome:
    """One simulated experiment.

    y is the excess draw count beyond the scheme's minimum, terminal_color
    the color whose c-th ball ended the experiment, counts the balls of
    each color drawn by then. For the both-colors scheme counts is
    (c, c+y) or (c+y, c); for the either-color scheme exactly one count
    equals c.
    """

    y: int
    terminal_color: Color
    counts: tuple[int, int]


@dataclass(frozen=True)
class SimConfig:
    seed: int
    trials: int

    def __post_init__(self) -> None:
        if not isinstance(self.seed, int) or not 0 <= self.seed <= _M64:
            raise ParameterError(f"seed must be a 64-bit unsigned int, got {self.seed!r}")
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ParameterError(f"trials must be >= 1, got {self.trials!r}")


def _seed_state(seed: int) -> list[int]:
    """splitmix64 expansion of one word into the four xoshiro state words."""
    x = seed & _M64
    state = []
    for _ in range(4):
        x = (x + 0x9E3779B97F4A7C15) & _M64
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        state.append(z ^ (z >> 31))
    if not any(state):
        state[0] = 1  # the all-zero state is a fixed point
    return state


class Xoshiro256StarStar:
    """Seedable counter-quality generator with a pinned algorithm."""

    def __init__(self, seed: int) -> None:
        self._s = _seed_state(seed)

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s
        r = (s1 * 5) & _M64
        r = (((r << 7) | (r >> 57)) & _M64) * 9 & _M64
        t = (s1 << 17) & _M64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & _M64
        self._s = [s0, s1, s2, s3]
        return r

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randbelow(self, n: int) -> int:
        """Exactly uniform integer in [0, n)."""
        while True:
            prod = self.next_u64() * n
            low = prod & _M64
            if low >= n or low >= (_TWO64 - n) % n:
                return prod >> 64


# ---------------------------------------------------------------------------
# Single experiments
# ---------------------------------------------------------------------------


def _urn_trial(
    params: UrnParams, rng: Xoshiro256StarStar, scheme: Dist
) -> DrawOutcome:
    N, m, c = params.N, params.m, params.c
    rem1, rem2 = m, N - m
    n1 = n2 = 0
    while True:
        first = rng.randbelow(rem1 + rem2) < rem1
        if first:
            n1 += 1
            rem1 -= 1
        else:
            n2 += 1
            rem2 -= 1
        if scheme is Dist.MAXNH:
            if n1 >= c and n2 >= c:
                term = Color.FIRST if first else Color.SECOND
                return DrawOutcome(n1 + n2 - 2 * c, term, (n1, n2))
        elif scheme is Dist.MINNH:
            if n1 == c or n2 == c:
                term = Color.FIRST if n1 == c else Color.SECOND
                return DrawOutcome(n1 + n2 - c, term, (n1, n2))
        else:
            if n1 == c:
                return DrawOutcome(n2, Color.FIRST, (n1, n2))


def draw_until_both(params: UrnParams, seed: int) -> DrawOutcome:
    """Draw without replacement until both colors have appeared c times."""
    return _urn_trial(params, Xoshiro256StarStar(seed), Dist.MAXNH)


def draw_until_either(params: UrnParams, seed: int) -> DrawOutcome:
    """Draw without replacement until either color has appeared c times."""
    return _urn_trial(params, Xoshiro256StarStar(seed), Dist.MINNH)


def draw_until_c_successes(params: UrnParams, seed: int) -> DrawOutcome:
    """Draw without replacement until the c-th ball of the first color."""
    return _urn_trial(params, Xoshiro256StarStar(seed), Dist.NH)


def _bernoulli_trial(
    params: BernoulliParams, rng: Xoshiro256StarStar, scheme: Dist
) -> DrawOutcome:
    c, p = params.c, params.p
    n1 = n2 = 0
    while True:
        first = rng.random() < p
        if first:
            n1 += 1
        else:
            n2 += 1
        if scheme is Dist.MAXNB:
            if n1 >= c and n2 >= c:
                term = Color.FIRST if first else Color.SECOND
                return DrawOutcome(n1 + n2 - 2 * c, term, (n1, n2))
        elif scheme is Dist.MINNB:
            if n1 == c or n2 == c:
                term = Color.FIRST if n1 == c else Color.SECOND
                return DrawOutcome(n1 + n2 - c, term, (n1, n2))
        else:
            if n1 == c:
                return DrawOutcome(n2, Color.FIRST, (n1, n2))


def bernoulli_scheme(params: BernoulliParams, scheme: Dist, seed: int) -> DrawOutcome:
    """Run one of the three stopping rules on iid Bernoulli(p) draws."""
    if scheme not in (Dist.NB, Dist.MAXNB, Dist.MINNB):
        raise ParameterError(f"not a Bernoulli scheme: {scheme.value}")
    return _bernoulli_trial(params, Xoshiro256StarStar(seed), scheme)


# ---------------------------------------------------------------------------
# Histograms
# ---------------------------------------------------------------------------

_URN_SCHEMES = (Dist.NH, Dist.MINNH, Dist.MAXNH)


def _hist_urn(
    scheme: Dist, N: int, m: int, c: int, trials: int, seed: int
) -> dict[int, int]:
    # Hot loop: the generator step and the Lemire draw are inlined (one
    # continuous stream, same algorithm as Xoshiro256StarStar), since a
    # method call per ball drawn dominates the runtime at 10^6 trials.
    s0, s1, s2, s3 = _seed_state(seed)
    counts: dict[int, int] = {}
    is_max = scheme is Dist.MAXNH
    is_min = scheme is Dist.MINNH
    for _ in range(trials):
        rem1, rem2 = m, N - m
        n1 = n2 = 0
        while True:
            total = rem1 + rem2
            while True:
                r = (s1 * 5) & _M64
                r = (((r << 7) | (r >> 57)) & _M64) * 9 & _M64
                t = (s1 << 17) & _M64
                s2 ^= s0
                s3 ^= s1
                s1 ^= s2
                s0 ^= s3
                s2 ^= t
                s3 = ((s3 << 45) | (s3 >> 19)) & _M64
                prod = r * total
                low = prod & _M64
                if low >= total or low >= (_TWO64 - total) % total:
                    break
            if prod >> 64 < rem1:
                n1 += 1
                rem1 -= 1
            else:
                n2 += 1
                rem2 -= 1
            if is_max:
                if n1 >= c and n2 >= c:
                    y = n1 + n2 - 2 * c
                    break
            elif is_min:
                if n1 == c or n2 == c:
                    y = n1 + n2 - c
                    break
            elif n1 == c:
                y = n2
                break
        counts[y] = counts.get(y, 0) + 1
    return counts


def _hist_bernoulli(
    scheme: Dist, c: int, p: float, trials: int, seed: int
) -> dict[int, int]:
    s0, s1, s2, s3 = _seed_state(seed)
    counts: dict[int, int] = {}
    is_max = scheme is Dist.MAXNB
    is_min = scheme is Dist.MINNB
    scale = 2.0**-53
    for _ in range(trials):
        n1 = n2 = 0
        while True:
            r = (s1 * 5) & _M64
            r = (((r << 7) | (r >> 57)) & _M64) * 9 & _M64
            t = (s1 << 17) & _M64
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = ((s3 << 45) | (s3 >> 19)) & _M64
            if (r >> 11) * scale < p:
                n1 += 1
            else:
                n2 += 1
            if is_max:
                if n1 >= c and n2 >= c:
                    y = n1 + n2 - 2 * c
                    break
            elif is_min:
                if n1 == c or n2 == c:
                    y = n1 + n2 - c
                    break
            elif n1 == c:
                y = n2
                break
        counts[y] = counts.get(y, 0) + 1
    return counts


def empirical_pmf(
    scheme: Dist,
    params: UrnParams | BernoulliParams,
    config: SimConfig,
) -> PmfTable:
    """Normalized histogram of simulated y values over one seeded stream.

    The table is contiguous from y=0 with zero-frequency gaps filled in.
    """
    if scheme in _URN_SCHEMES:
        if not isinstance(params, UrnParams):
            raise ParameterError(f"{scheme.value} takes UrnParams")
        counts = _hist_urn(
            scheme, params.N, params.m, params.c, config.trials, config.seed
        )
    else:
        if not isinstance(params, BernoulliParams):
            raise ParameterError(f"{scheme.value} takes BernoulliParams")
        counts = _hist_bernoulli(
            scheme, params.c, params.p, config.trials, config.seed
        )
    top = max(counts)
    ys = list(range(top + 1))
    probs = [counts.get(y, 0) / config.trials for y in ys]
    return PmfTable(scheme, params, ys, probs, None)


def tv_distance(a: PmfTable, b: PmfTable) -> float:
    """Total variation distance (1/2) sum |a(y) - b(y)|, missing bins = 0."""
    n = max(len(a.probs), len(b.probs))
    pa = a.probs + [0.0] * (n - len(a.probs))
    pb = b.probs + [0.0] * (n - len(b.probs))
    return 0.5 * math.fsum(abs(x - y) for x, y in zip(pa, pb))
