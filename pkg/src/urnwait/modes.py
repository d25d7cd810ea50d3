"""Mode structure of the both-colors waiting-time distribution.

The pmf always has a local mode at y=0 (the first two masses sit in the
fixed ratio (c+1)/c), and depending on (N, m, c) may grow a second interior
mode. This module locates the modes of a tabulated pmf and scans m to find
where the distribution stays unimodal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import Dist, PmfTable, UrnParams, maxnh_pmf, pmf_table
from .errors import DomainError, ParameterError

# Log-space pmf evaluation carries last-digit noise, so equality of adjacent
# masses (a plateau) is declared at this relative tolerance.
EQ_RTOL = 1e-12


@dataclass(frozen=True)
class ModeReport:
    """Local maxima of a pmf table.

    modes always contains 0; is_unimodal means exactly one mode. p0_over_p1
    is the first mass ratio, nan for a single-point support.
    """

    modes: list[int]
    is_unimodal: bool
    p0_over_p1: float


def _eq(a: float, b: float) -> bool:
    return abs(a - b) <= EQ_RTOL * max(abs(a), abs(b))


def local_modes(table: PmfTable) -> ModeReport:
    """Find local maxima; an equal-valued plateau counts once, at its left end."""
    ys, probs = table.ys, table.probs
    n = len(probs)
    modes = []
    i = 0
    while i < n:
        j = i
        while j + 1 < n and _eq(probs[j + 1], probs[j]):
            j += 1
        rising = i == 0 or probs[i] > probs[i - 1]
        falling = j == n - 1 or probs[j + 1] < probs[j]
        if rising and falling:
            modes.append(ys[i])
        i = j + 1
    ratio = probs[0] / probs[1] if n >= 2 else math.nan
    return ModeReport(modes, len(modes) == 1, ratio)


def p0_p1_ratio(params: UrnParams) -> float:
    """Pr[Y=0]/Pr[Y=1]; always equals (c+1)/c when y=1 is in support."""
    N, m, c = params.N, params.m, params.c
    if max(m - c, N - m - c) < 1:
        raise DomainError("support is {0}: the ratio needs y=1 in support")
    return maxnh_pmf(params, 0) / maxnh_pmf(params, 1)


def _is_degenerate(N: int, m: int, c: int) -> bool:
    # All N balls must be drawn: point mass at 0.
    return N == 2 * c and m == c


def unimodal_m_range(N: int, c: int) -> list[tuple[int, int]]:
    """All m whose distribution is unimodal, as maximal intervals (lo, hi).

    m runs over the valid band c..N-c; the degenerate point mass at
    m = c = N/2 is excluded from the scan. Raises when no valid m exists.
    """
    if not (isinstance(N, int) and isinstance(c, int)) or c < 1 or c > N - c:
        raise ParameterError(f"no valid m for N={N}, c={c}")
    good = []
    for m in range(c, N - c + 1):
        if _is_degenerate(N, m, c):
            continue
        report = local_modes(pmf_table(Dist.MAXNH, UrnParams(N, m, c)))
        if report.is_unimodal:
            good.append(m)
    intervals: list[tuple[int, int]] = []
    for m in good:
        if intervals and m == intervals[-1][1] + 1:
            intervals[-1] = (intervals[-1][0], m)
        else:
            intervals.append((m, m))
    return intervals
