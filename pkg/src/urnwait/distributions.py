"""Exact pmfs for the six waiting-time distributions of two-color sampling.

The finite-population family draws balls without replacement from an urn of N
balls, m of the first color. The infinite-population family draws iid
Bernoulli(p) trials. For each, three stopping rules give three distributions
of the excess draw count Y:

==========  =============================================  ==============
label       stopping rule                                  support
==========  =============================================  ==============
nb          c successes (failures counted)                 0..N-m / inf
maxnb       c of BOTH outcomes, draws beyond 2c            0.. inf
minnb       c of EITHER outcome, draws beyond c            0..c-1
nh          urn version of nb                              0..N-m
maxnh       urn version of maxnb                           0..max(m,N-m)-c
minnh       urn version of minnb                           0..c-1
==========  =============================================  ==============

The maximum negative hypergeometric (maxnh) is the centerpiece; the others
exist as its relatives and limiting partners.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import kernel
from .errors import DomainError, ParameterError

# Infinite supports are truncated where the remaining tail mass drops below
# this bound; the truncation point is recorded on the table.
TAIL_EPS = 1e-12


class Dist(str, enum.Enum):
    NB = "nb"
    MAXNB = "maxnb"
    MINNB = "minnb"
    NH = "nh"
    MAXNH = "maxnh"
    MINNH = "minnh"


@dataclass(frozen=True)
class UrnParams:
    """Finite population: N balls, m of the first color, target count c.

    Constraints: 1 <= c <= m < N and c <= N - m, so that c balls of both
    colors exist. Invalid triples are rejected at construction.
    """

    N: int
    m: int
    c: int

    def __post_init__(self) -> None:
        for name in ("N", "m", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParameterError(f"{name} must be an integer, got {v!r}")
        if not 1 <= self.c <= self.m < self.N:
            raise ParameterError(
                f"need 1 <= c <= m < N, got c={self.c}, m={self.m}, N={self.N}"
            )
        if self.c > self.N - self.m:
            raise ParameterError(
                f"need c <= N - m, got c={self.c}, N-m={self.N - self.m}"
            )


@dataclass(frozen=True)
class BernoulliParams:
    """Infinite population: success probability p, target count c."""

    c: int
    p: float

    def __post_init__(self) -> None:
        if not isinstance(self.c, int) or isinstance(self.c, bool) or self.c < 1:
            raise ParameterError(f"c must be an integer >= 1, got {self.c!r}")
        if not 0.0 < self.p < 1.0:
            raise ParameterError(f"p must lie strictly in (0, 1), got {self.p!r}")


@dataclass(frozen=True)
class PmfTable:
    """A distribution tabulated over its (possibly truncated) support.

    ys always starts at 0 and is contiguous. truncation is None for finite
    supports; for the infinite-support distributions it records the largest
    tabulated y, beyond which the untabulated tail mass is below TAIL_EPS.
    """

    dist: Dist
    params: UrnParams | BernoulliParams
    ys: list[int]
    probs: list[float]
    truncation: int | None = None


# ---------------------------------------------------------------------------
# Bernoulli-population pmfs
# ---------------------------------------------------------------------------


def nb_pmf(params: BernoulliParams, y: int) -> float:
    """Failures before the c-th success: C(c+y-1, c-1) p^c q^y."""
    if y < 0:
        return 0.0
    c, p = params.c, params.p
    lb = kernel.log_binomial(c + y - 1, c - 1)
    return math.exp(lb.logmag + c * math.log(p) + y * math.log1p(-p))


def maxnb_pmf(params: BernoulliParams, y: int) -> float:
    """Draws beyond 2c to see c of both outcomes: C(2c+y-1, c-1)(p^y + q^y)(pq)^c."""
    if y < 0:
        return 0.0
    c, p = params.c, params.p
    lp, lq = math.log(p), math.log1p(-p)
    lb = kernel.log_binomial(2 * c + y - 1, c - 1)
    a, b = y * lp, y * lq
    if a < b:
        a, b = b, a
    two_term = a + math.log1p(math.exp(b - a))
    return math.exp(lb.logmag + two_term + c * (lp + lq))


def minnb_pmf(params: BernoulliParams, y: int) -> float:
    """Draws beyond c to see c of either outcome: C(c+y-1, c-1)(p^c q^y + p^y q^c)."""
    c, p = params.c, params.p
    if y < 0 or y > c - 1:
        return 0.0
    lp, lq = math.log(p), math.log1p(-p)
    lb = kernel.log_binomial(c + y - 1, c - 1)
    a, b = c * lp + y * lq, y * lp + c * lq
    if a < b:
        a, b = b, a
    return math.exp(lb.logmag + a + math.log1p(math.exp(b - a)))


# ---------------------------------------------------------------------------
# Urn pmfs
# ---------------------------------------------------------------------------


def nh_pmf(params: UrnParams, y: int) -> float:
    """Failures before the c-th success without replacement.

    Pr[Y=y] = C(c+y-1, c-1) C(N-c-y, m-c) / C(N, m) for y in 0..N-m.
    """
    N, m, c = params.N, params.m, params.c
    if y < 0 or y > N - m:
        return 0.0
    v = kernel.signed_log_mul(
        kernel.log_binomial(c + y - 1, c - 1),
        kernel.log_binomial(N - c - y, m - c),
    )
    return kernel.signed_log_div(v, kernel.log_binomial(N, m)).to_real()


def minnh_pmf(params: UrnParams, y: int) -> float:
    """Draws beyond c to see c balls of either color.

    Pr[Y=y] = C(c+y-1, c-1) {C(m,c)C(N-m,y) + C(m,y)C(N-m,c)}
              / {C(c+y, c) C(N, c+y)} for y in 0..c-1.
    """
    N, m, c = params.N, params.m, params.c
    if y < 0 or y > c - 1:
        return 0.0
    s = kernel.signed_log_add(
        kernel.signed_log_mul(
            kernel.log_binomial(m, c), kernel.log_binomial(N - m, y)
        ),
        kernel.signed_log_mul(
            kernel.log_binomial(m, y), kernel.log_binomial(N - m, c)
        ),
    )
    num = kernel.signed_log_mul(kernel.log_binomial(c + y - 1, c - 1), s)
    den = kernel.signed_log_mul(
        kernel.log_binomial(c + y, c), kernel.log_binomial(N, c + y)
    )
    return kernel.signed_log_div(num, den).to_real()


def maxnh_pmf(params: UrnParams, y: int) -> float:
    """Draws beyond 2c to see c balls of both colors.

    Production path is the factorial-polynomial form

        Pr[Y=y] = C(2c+y-1, c-1) {m^(c+y) (N-m)^(c) + m^(c) (N-m)^(c+y)}
                  / N^(2c+y)

    for y in 0..max(m-c, N-m-c). A debug assertion cross-checks the
    independent binomial-coefficient form on every call.
    """
    N, m, c = params.N, params.m, params.c
    if y < 0 or y > max(m - c, N - m - c):
        return 0.0
    s = kernel.signed_log_add(
        kernel.signed_log_mul(
            kernel.falling_factorial(m, c + y), kernel.falling_factorial(N - m, c)
        ),
        kernel.signed_log_mul(
            kernel.falling_factorial(m, c), kernel.falling_factorial(N - m, c + y)
        ),
    )
    v = kernel.signed_log_mul(kernel.log_binomial(2 * c + y - 1, c - 1), s)
    out = kernel.signed_log_div(
        v, kernel.falling_factorial(N, 2 * c + y)
    ).to_real()
    if __debug__:
        alt = _maxnh_pmf_binom(params, y)
        # 1e-12 relative, plus a roundoff floor: the log-factorials behind
        # both paths are O(N log N), and one ulp of such a log already
        # exceeds 1e-12 once N reaches the thousands.
        slack = 1e-12 + 4 * sys.float_info.epsilon * kernel.log_factorial(N)
        assert abs(out - alt) <= slack * max(abs(out), abs(alt), 1e-300), (
            params,
            y,
            out,
            alt,
        )
    return out


def _maxnh_pmf_binom(params: UrnParams, y: int) -> float:
    """Binomial-coefficient form of maxnh_pmf; independent cross-check path.

    Pr[Y=y] = {c/(2c+y)} {C(m, c+y)C(N-m, c) + C(m, c)C(N-m, c+y)} / C(N, 2c+y)
    """
    N, m, c = params.N, params.m, params.c
    if y < 0 or y > max(m - c, N - m - c):
        return 0.0
    s = kernel.signed_log_add(
        kernel.signed_log_mul(
            kernel.log_binomial(m, c + y), kernel.log_binomial(N - m, c)
        ),
        kernel.signed_log_mul(
            kernel.log_binomial(m, c), kernel.log_binomial(N - m, c + y)
        ),
    )
    v = kernel.signed_log_scale(s, c / (2 * c + y))
    return kernel.signed_log_div(v, kernel.log_binomial(N, 2 * c + y)).to_real()


def maxnh_p0(params: UrnParams) -> float:
    """Closed form for Pr[Y=0] of maxnh: C(N-2c, m-c) C(2c, c) / C(N, m)."""
    N, m, c = params.N, params.m, params.c
    v = kernel.signed_log_mul(
        kernel.log_binomial(N - 2 * c, m - c), kernel.log_binomial(2 * c, c)
    )
    return kernel.signed_log_div(v, kernel.log_binomial(N, m)).to_real()


def exact_pmf(dist: Dist, params: UrnParams, y: int) -> Fraction:
    """Exact rational pmf for the urn distributions (big-integer path).

    Test-oracle companion of the float pmfs; only nh, minnh, and maxnh have
    rational masses.
    """
    N, m, c = params.N, params.m, params.c
    ffe = kernel.falling_factorial_exact
    if dist is Dist.NH:
        if y < 0 or y > N - m:
            return Fraction(0)
        return Fraction(
            math.comb(c + y - 1, c - 1) * math.comb(N - c - y, m - c),
            math.comb(N, m),
        )
    if dist is Dist.MINNH:
        if y < 0 or y > c - 1:
            return Fraction(0)
        num = math.comb(c + y - 1, c - 1) * (
            math.comb(m, c) * math.comb(N - m, y)
            + math.comb(m, y) * math.comb(N - m, c)
        )
        return Fraction(num, math.comb(c + y, c) * math.comb(N, c + y))
    if dist is Dist.MAXNH:
        if y < 0 or y > max(m - c, N - m - c):
            return Fraction(0)
        num = math.comb(2 * c + y - 1, c - 1) * (
            ffe(m, c + y) * ffe(N - m, c) + ffe(m, c) * ffe(N - m, c + y)
        )
        return Fraction(num, ffe(N, 2 * c + y))
    raise ParameterError(f"{dist.value} has no exact rational pmf")


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

_PMF = {
    Dist.NB: nb_pmf,
    Dist.MAXNB: maxnb_pmf,
    Dist.MINNB: minnb_pmf,
    Dist.NH: nh_pmf,
    Dist.MAXNH: maxnh_pmf,
    Dist.MINNH: minnh_pmf,
}

_URN_DISTS = (Dist.NH, Dist.MAXNH, Dist.MINNH)


def _check_params(dist: Dist, params: UrnParams | BernoulliParams) -> None:
    want = UrnParams if dist in _URN_DISTS else BernoulliParams
    if not isinstance(params, want):
        raise ParameterError(f"{dist.value} takes {want.__name__}")


def pmf(dist: Dist, params: UrnParams | BernoulliParams, y: int) -> float:
    """Dispatch to the named distribution's pmf."""
    _check_params(dist, params)
    return _PMF[dist](params, y)


def support(dist: Dist, params: UrnParams | BernoulliParams) -> range:
    """Closed-form support, or the truncated range for infinite supports.

    For nb and maxnb the upper end T is the smallest value whose remaining
    tail mass is below TAIL_EPS.
    """
    _check_params(dist, params)
    if dist is Dist.NH:
        return range(0, params.N - params.m + 1)
    if dist is Dist.MAXNH:
        N, m, c = params.N, params.m, params.c
        return range(0, max(m - c, N - m - c) + 1)
    if dist in (Dist.MINNH, Dist.MINNB):
        return range(0, params.c)
    f = _PMF[dist]
    cum = 0.0
    y = 0
    while True:
        cum += f(params, y)
        if 1.0 - cum < TAIL_EPS:
            return range(0, y + 1)
        y += 1


def pmf_table(dist: Dist, params: UrnParams | BernoulliParams) -> PmfTable:
    """Tabulate the pmf over its full (or truncated) support."""
    ys = list(support(dist, params))
    f = _PMF[dist]
    probs = [f(params, y) for y in ys]
    trunc = ys[-1] if dist in (Dist.NB, Dist.MAXNB) else None
    return PmfTable(dist, params, ys, probs, trunc)


def cdf(table: PmfTable, y: int) -> float:
    """Prefix-sum cdf of a tabulated distribution."""
    if y < 0:
        return 0.0
    return math.fsum(table.probs[: y + 1])


def quantile(table: PmfTable, u: float) -> int:
    """Smallest y with cdf(y) >= u."""
    if not 0.0 <= u <= 1.0:
        raise DomainError(f"quantile level must lie in [0, 1], got {u!r}")
    cum = 0.0
    for y, p in zip(table.ys, table.probs):
        cum += p
        if cum >= u:
            return y
    return table.ys[-1]  # float shortfall at u near 1


def mean(table: PmfTable) -> float:
    """Sum of y * p(y) over the table."""
    return math.fsum(y * p for y, p in zip(table.ys, table.probs))
