"""Growth diagnostics for the maximal-antichain counts.

The diagonal counts grow like powers of the unique root in (3, 4) of
``a^3 - 3a^2 - a - 1``; the successive ratios of exact counts approach
it from below.  Antichain counts grow by a factor approaching 4, so the
maximal fraction of all antichains shrinks toward zero.  Ratios are
always formed from exact integers and converted to float last.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .counting import count_antichains, count_maximal_simple


def _characteristic(a: float) -> float:
    return ((a - 3.0) * a - 1.0) * a - 1.0


def rho_radical() -> float:
    """Closed form of the growth root, by radicals."""
    s = math.sqrt(33.0)
    return (3.0 + (54.0 - 6.0 * s) ** (1.0 / 3.0) + (6.0 * (9.0 + s)) ** (1.0 / 3.0)) / 3.0


def rho() -> float:
    """The growth root, bracketed in (3, 4) then polished by Newton.

    The quartic fixed-point form ``a = 4 - 2/a - 1/a^3`` also admits the
    root ``a = 1``, rejected since the counts grow; the cubic above has
    exactly one root in the bracket.  The numeric root must agree with
    the radical closed form to 1e-10.
    """
    lo, hi = 3.0, 4.0
    for _ in range(60):
        mid = (lo + hi) / 2.0
        if _characteristic(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    x = (lo + hi) / 2.0
    for _ in range(5):
        slope = (3.0 * x - 6.0) * x - 1.0
        x -= _characteristic(x) / slope
    if abs(x - rho_radical()) > 1e-10:
        raise ArithmeticError("bracketed root and radical form disagree")
    return x


def ratio_series(mmax: int) -> list[float]:
    """Successive diagonal ratios ``f(m, m) / f(m-1, m-1)`` for m = 2..mmax."""
    if mmax < 2:
        raise ValueError("mmax must be at least 2")
    diag = [count_maximal_simple(m, m) for m in range(mmax + 1)]
    return [diag[m] / diag[m - 1] for m in range(2, mmax + 1)]


def density_series(mmax: int) -> list[float]:
    """Maximal fraction of all antichains on the diagonal, m = 1..mmax."""
    if mmax < 1:
        raise ValueError("mmax must be at least 1")
    return [
        count_maximal_simple(m, m) / count_antichains(m, m) for m in range(1, mmax + 1)
    ]


def antichain_growth_ratio(m: int) -> float:
    """Successive antichain ratio ``(2m+2)(2m+1) / (m+1)^2``; tends to 4."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return (2 * m + 2) * (2 * m + 1) / (m + 1) ** 2


@dataclass(frozen=True)
class GrowthRow:
    """One diagonal size of the growth report."""

    m: int
    maximal_count: int
    ratio: float
    density: float


def growth_report(mmax: int) -> list[GrowthRow]:
    """Rows m = 2..mmax combining exact counts, ratio and density."""
    if mmax < 2:
        raise ValueError("mmax must be at least 2")
    rows = []
    for m in range(2, mmax + 1):
        current = count_maximal_simple(m, m)
        previous = count_maximal_simple(m - 1, m - 1)
        rows.append(GrowthRow(m, current, current / previous,
                              current / count_antichains(m, m)))
    return rows
