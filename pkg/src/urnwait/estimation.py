"""Estimating the urn composition m from one observed waiting time.

With (N, c) known and one observation y of the both-colors excess wait, the
m-dependent part of the log-likelihood is

    L(m) = log{ (m^(c) (N-m)^(c+y) + m^(c+y) (N-m)^(c)) / N^(2c+y) },

treated as a function of continuous m. It satisfies L(m) = L(N-m), so m and
N-m cannot be told apart and every estimate here is the full symmetric set.
m = N/2 is always a critical point; whether it is the global maximum or a
local minimum flanked by two symmetric maxima is decided by the sign of the
quantity phi below, which is negative for small y and grows with y.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import kernel
from .errors import DomainError, ParameterError

# Search brackets stay this far inside pole/zero points of the likelihood.
EDGE_CLIP = 1e-6
# Maximizer location tolerance.
M_TOL = 1e-8

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


class Classification(enum.Enum):
    GLOBAL_MAX_AT_HALF = "global_max_at_half"
    LOCAL_MIN_AT_HALF = "local_min_at_half"


@dataclass(frozen=True)
class CriticalPointReport:
    """Sign analysis of the critical point at m = N/2."""

    phi_value: float
    classification: Classification


@dataclass(frozen=True)
class LikelihoodProfile:
    N: int
    c: int
    y: int
    grid: list[float]
    values: list[float]
    maximizers: set[float]


def _check_nc(N: int, c: int, y: int) -> None:
    if c < 1 or 2 * c > N:
        raise ParameterError(f"no valid m exists for N={N}, c={c}")
    if y < 0:
        raise ParameterError(f"y must be nonnegative, got {y}")


def _terms(m: float, N: int, c: int, y: int) -> tuple:
    ff = kernel.falling_factorial
    t1 = kernel.signed_log_mul(ff(m, c), ff(N - m, c + y))
    t2 = kernel.signed_log_mul(ff(m, c + y), ff(N - m, c))
    return t1, t2


def _bracketed_sum(m: float, N: int, c: int, y: int):
    t1, t2 = _terms(m, N, c, y)
    s = kernel.signed_log_add(t1, t2)
    if s.sign <= 0:
        raise DomainError(
            f"likelihood kernel undefined: the bracketed sum is <= 0 at m={m}"
        )
    return t1, t2, s


def loglik_kernel(m: float, N: int, c: int, y: int) -> float:
    """L(m), defined wherever the two-term sum is positive."""
    _check_nc(N, c, y)
    den = kernel.falling_factorial(N, 2 * c + y)
    if den.sign == 0:
        raise DomainError(f"y={y} is impossible for N={N}, c={c}")
    _, _, s = _bracketed_sum(m, N, c, y)
    return s.logmag - den.logmag


def _recip_sums(x: float, k: int) -> tuple[float, float]:
    """(sum 1/(x-i), sum 1/(x-i)^2) for i = 0..k-1; poles raise."""
    h1 = h2 = 0.0
    for i in range(k):
        d = x - i
        if d == 0.0:
            raise DomainError(f"derivative pole at x={x}, i={i}")
        h1 += 1.0 / d
        h2 += 1.0 / (d * d)
    return h1, h2


def loglik_grad(m: float, N: int, c: int, y: int) -> float:
    """Analytic dL/dm via term-wise differentiation of the factorial polynomials."""
    _check_nc(N, c, y)
    t1, t2, s = _bracketed_sum(m, N, c, y)
    # T = m^(a) (N-m)^(b) has T' = T (sum_i 1/(m-i) - sum_j 1/(N-m-j)).
    g1 = _recip_sums(m, c)[0] - _recip_sums(N - m, c + y)[0]
    g2 = _recip_sums(m, c + y)[0] - _recip_sums(N - m, c)[0]
    num = kernel.signed_log_add(
        kernel.signed_log_scale(t1, g1), kernel.signed_log_scale(t2, g2)
    )
    return kernel.signed_log_div(num, s).to_real()


def loglik_hess(m: float, N: int, c: int, y: int) -> float:
    """Analytic d2L/dm2: S''/S - (S'/S)^2 with term-wise S' and S''."""
    _check_nc(N, c, y)
    t1, t2, s = _bracketed_sum(m, N, c, y)
    a1, a1sq = _recip_sums(m, c)
    b1, b1sq = _recip_sums(N - m, c + y)
    a2, a2sq = _recip_sums(m, c + y)
    b2, b2sq = _recip_sums(N - m, c)
    g1, g2 = a1 - b1, a2 - b2
    # T'' = T ((sum_i - sum_j)^2 - sum_i squares - sum_j squares)
    curv1 = g1 * g1 - a1sq - b1sq
    curv2 = g2 * g2 - a2sq - b2sq
    snum = kernel.signed_log_add(
        kernel.signed_log_scale(t1, curv1), kernel.signed_log_scale(t2, curv2)
    )
    gnum = kernel.signed_log_add(
        kernel.signed_log_scale(t1, g1), kernel.signed_log_scale(t2, g2)
    )
    sp = kernel.signed_log_div(gnum, s).to_real()
    return kernel.signed_log_div(snum, s).to_real() - sp * sp


def phi(N: int, c: int, y: int) -> float:
    """Curvature sign of L at m = N/2.

    phi = sum_{0<=k<k'<=y-1} 1/((N/2-c-k)(N/2-c-k')) - sum_{i=0}^{c-1} (N/2-i)^{-2};
    sign(phi) = sign(L''(N/2)). The pairwise sum is empty for y <= 1, so phi
    starts negative and increases with y. Odd N evaluates at real N/2.
    """
    _check_nc(N, c, y)
    recips = []
    for k in range(y):
        d = N / 2 - c - k
        if d == 0.0:
            raise DomainError(f"phi undefined: N/2 - c - k vanishes at k={k}")
        recips.append(1.0 / d)
    total = math.fsum(recips)
    squares = math.fsum(r * r for r in recips)
    pairwise = 0.5 * (total * total - squares)
    penalty = math.fsum(1.0 / (N / 2 - i) ** 2 for i in range(c))
    return pairwise - penalty


def classify_critical_point(N: int, c: int, y: int) -> CriticalPointReport:
    v = phi(N, c, y)
    kind = (
        Classification.GLOBAL_MAX_AT_HALF
        if v < 0
        else Classification.LOCAL_MIN_AT_HALF
    )
    return CriticalPointReport(v, kind)


def _golden_max(f, a: float, b: float, width: float) -> tuple[float, float]:
    """Golden-section bracket shrink for a maximum of f on [a, b]."""
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > width:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
    return a, b


def mle(N: int, c: int, y: int) -> set[float]:
    """Maximum-likelihood estimates of m, always as the symmetric set.

    If phi < 0 the likelihood peaks at N/2 and {N/2} is returned. Otherwise
    the maximum on [N/2, N-c] is located by golden-section search refined by
    bisection on the gradient, and {m_hat, N - m_hat} is returned.
    """
    p = phi(N, c, y)
    half = N / 2
    if p < 0:
        return {half}

    def f(m: float) -> float:
        try:
            return loglik_kernel(m, N, c, y)
        except DomainError:
            return -math.inf

    lo, hi = half, N - c - EDGE_CLIP
    a, b = _golden_max(f, lo, hi, 1e-6)
    try:
        ga, gb = loglik_grad(a, N, c, y), loglik_grad(b, N, c, y)
    except DomainError:
        ga, gb = -1.0, -1.0  # force the fallback below
    if ga >= 0.0 >= gb:
        while b - a > M_TOL * 1e-2:
            mid = 0.5 * (a + b)
            if loglik_grad(mid, N, c, y) > 0.0:
                a = mid
            else:
                b = mid
    else:
        a, b = _golden_max(f, a, b, M_TOL * 1e-2)
    m_hat = 0.5 * (a + b)
    return {m_hat, N - m_hat}


def profile(
    N: int, c: int, y: int, grid_spec: tuple[float, float, float]
) -> LikelihoodProfile:
    """L on an inclusive lo:hi:step grid, plus the maximizer set."""
    lo, hi, step = grid_spec
    if step <= 0 or hi < lo:
        raise ParameterError(f"bad grid {lo}:{hi}:{step}")
    n = round((hi - lo) / step)
    grid = [lo + k * step for k in range(n + 1)]
    values = [loglik_kernel(g, N, c, y) for g in grid]
    return LikelihoodProfile(N, c, y, grid, values, mle(N, c, y))
