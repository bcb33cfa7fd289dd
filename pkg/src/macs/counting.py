"""Exact counts of antichains and maximal antichains, four ways.

All arithmetic is on Python integers, so every value is exact at any
size.  The number of antichains in ``[m1] x [m2]`` is the binomial
``C(m1 + m2, m1)``.  Maximal antichains are counted by four independent
routes that must agree everywhere they overlap:

* a diagonal recurrence of depth four (conjectural, division by ``m``
  must always be exact, contributed by A. P. Heinz on OEIS A171155);
* an explicit double sum over words classified by their number of ``d``
  letters and of ``hv``/``vh`` transitions;
* a double recurrence pairing the full count with the count of
  constrained walks whose first move is ``h``;
* a simple recurrence obtained by splitting maximal antichains by their
  unique element on the top-left boundary hook of the grid.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import comb

from .errors import MethodDisagreementError, NonIntegerStepError


def count_antichains(m1: int, m2: int) -> int:
    """Number of antichains in ``[m1] x [m2]``: ``C(m1 + m2, m1)``."""
    if m1 < 0 or m2 < 0:
        raise ValueError("sizes must be non-negative")
    return comb(m1 + m2, m1)


# ---------------------------------------------------------------------------
# diagonal recurrence (conjectural)

_heinz_lock = threading.Lock()
_heinz: list[int] = [1, 1, 3, 9]  # published values for m = 0..3


def count_maximal_heinz(m: int) -> int:
    """Diagonal count via the depth-four recurrence.

    ``m * f(m) = (4m-3) f(m-1) - (2m-5) f(m-2) + f(m-3) - (m-3) f(m-4)``
    for ``m >= 4``, seeded with the published values 1, 1, 3, 9.  The
    recurrence has no known proof; if the bracket ever failed to divide
    by ``m`` the conjecture would be false, so inexact division raises
    instead of truncating.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    with _heinz_lock:
        while len(_heinz) <= m:
            n = len(_heinz)
            bracket = (
                (4 * n - 3) * _heinz[n - 1]
                - (2 * n - 5) * _heinz[n - 2]
                + _heinz[n - 3]
                - (n - 3) * _heinz[n - 4]
            )
            q, r = divmod(bracket, n)
            if r:
                raise NonIntegerStepError(
                    f"bracket {bracket} not divisible by m={n} (remainder {r})"
                )
            _heinz.append(q)
        return _heinz[m]


def heinz_bracket_divisible(limit: int) -> bool:
    """Run the diagonal recurrence to ``limit``; False on any inexact step."""
    try:
        count_maximal_heinz(limit)
    except NonIntegerStepError:
        return False
    return True


# ---------------------------------------------------------------------------
# explicit double sum


@dataclass(frozen=True)
class TransitionProfile:
    """One row of the word-count breakdown for a diagonal size.

    ``k`` is the number of ``d`` letters, ``t`` the number of
    transitions amid the remaining ``h``/``v`` letters (0 only for the
    all-d word), ``schema_count`` the number of h/v arrangements
    starting with ``h``, and ``insertion_count`` the number of ways to
    place the ``k - t`` free ``d`` letters.
    """

    k: int
    t: int
    schema_count: int
    insertion_count: int
    term: int

    @property
    def doubled(self) -> int:
        """Contribution to the total: h-first and v-first schemas pair up,
        except for the all-d word which has no letters to mirror."""
        return self.term if self.t == 0 else 2 * self.term


def _binom(n: int, r: int) -> int:
    # Zero outside the Pascal triangle, including negative upper index.
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)


def explicit_breakdown(m: int) -> list[TransitionProfile]:
    """All (k, t) rows of the explicit word count for ``[m] x [m]``.

    Words avoiding both ``hv`` and ``vh`` with ``k`` d's and ``l = m - k``
    h's and v's have ``t`` transitions with ``1 <= t <= min(k, 2l - 1)``:
    each transition consumes a separating ``d``, and ``2l - 1`` is the
    most transitions ``l`` h's and ``l`` v's can form.  There are
    ``C(l-1, floor(t/2)) * C(l-1, floor((t-1)/2))`` h-first schemas and
    ``C(2l + k - t, k - t)`` multiset placements of the leftover d's.
    """
    if m < 1:
        raise ValueError("m must be positive")
    rows = []
    for k in range(1, m):
        l = m - k
        for t in range(1, min(k, 2 * l - 1) + 1):
            schemas = _binom(l - 1, t // 2) * _binom(l - 1, (t - 1) // 2)
            insertions = _binom(2 * m - k - t, k - t)
            rows.append(TransitionProfile(k, t, schemas, insertions, schemas * insertions))
    rows.append(TransitionProfile(m, 0, 1, 1, 1))
    return rows


def count_maximal_explicit(m: int) -> int:
    """Diagonal count by summing the doubled breakdown rows."""
    return sum(row.doubled for row in explicit_breakdown(m))


# ---------------------------------------------------------------------------
# double recurrence

_double_lock = threading.Lock()
_double_full: dict[tuple[int, int], int] = {}
_double_h_first: dict[tuple[int, int], int] = {}
_double_size = -1


def _double_base(m1: int, m2: int) -> tuple[int, int] | None:
    if m1 == 0 or m2 == 0:
        return 1, 0
    if m1 == 1:
        return m2, 0
    if m2 == 1:
        return m1, m1 - 1
    return None


def _ensure_double(size: int) -> None:
    """Eagerly fill the square tables up to ``size``.

    Cells are filled by increasing ``m1 + m2``; within an anti-diagonal
    the h-first values come first since the full count at (m1, m2) reads
    the h-first value at (m2, m1) on the same anti-diagonal.
    """
    global _double_size
    if size <= _double_size:
        return
    for i in range(size + 1):
        for j in range(size + 1):
            base = _double_base(i, j)
            if base is not None:
                _double_full[i, j], _double_h_first[i, j] = base
    for s in range(4, 2 * size + 1):
        cells = [(i, s - i) for i in range(2, size + 1) if 2 <= s - i <= size]
        for i, j in cells:
            if (i, j) not in _double_h_first:
                _double_h_first[i, j] = (
                    _double_full[i - 1, j]
                    - _double_full[i - 1, j - 1]
                    + _double_h_first[i - 1, j - 1]
                )
        for i, j in cells:
            if (i, j) not in _double_full:
                _double_full[i, j] = (
                    _double_h_first[i, j]
                    + _double_h_first[j, i]
                    + _double_full[i - 1, j - 1]
                )
    _double_size = size


def count_maximal_double(m1: int, m2: int) -> tuple[int, int]:
    """Full and h-first counts for ``[m1] x [m2]`` via the paired recurrence.

    ``full(m1, m2) = hfirst(m1, m2) + hfirst(m2, m1) + full(m1-1, m2-1)``
    and ``hfirst(m1, m2) = full(m1-1, m2) - full(m1-1, m2-1)
    + hfirst(m1-1, m2-1)``, with first row/column read off the walk
    definition: ``full(1, n) = n``, ``hfirst(1, n) = 0``,
    ``hfirst(n, 1) = n - 1``.
    """
    if m1 < 1 or m2 < 1:
        raise ValueError("sizes must be positive")
    with _double_lock:
        _ensure_double(max(m1, m2))
        return _double_full[m1, m2], _double_h_first[m1, m2]


# ---------------------------------------------------------------------------
# simple recurrence

_simple_lock = threading.Lock()
_simple: dict[tuple[int, int], int] = {}
_simple_size = -1


def _ensure_simple(size: int) -> None:
    global _simple_size
    if size <= _simple_size:
        return
    for i in range(size + 1):
        _simple[i, 0] = 1
        _simple[0, i] = 1
    for s in range(2, 2 * size + 1):
        for i in range(1, size + 1):
            j = s - i
            if not (1 <= j <= size) or (i, j) in _simple:
                continue
            _simple[i, j] = (
                _simple[i - 1, j - 1]
                + sum(_simple[r, j - 1] for r in range(i - 1))
                + sum(_simple[i - 1, c] for c in range(j - 1))
            )
    _simple_size = size


def count_maximal_simple(m1: int, m2: int) -> int:
    """Count via the boundary-hook split.

    Every maximal antichain contains exactly one element of the hook
    ``{(1, j)} U {(i, m2)}``; removing the points comparable to that
    element leaves a smaller grid, giving
    ``f(m1, m2) = f(m1-1, m2-1) + sum f(i, m2-1) + sum f(m1-1, j)``
    with ``f(n, 0) = f(0, n) = 1`` (the empty antichain is the unique
    maximal antichain of an empty grid).
    """
    if m1 < 0 or m2 < 0:
        raise ValueError("sizes must be non-negative")
    with _simple_lock:
        _ensure_simple(max(m1, m2))
        return _simple[m1, m2]


# ---------------------------------------------------------------------------
# assembled table


@dataclass(frozen=True)
class CountTable:
    """Cross-validated grids of counts, indexed ``[m1][m2]`` from 0."""

    max1: int
    max2: int
    antichains: tuple[tuple[int, ...], ...]
    maximal: tuple[tuple[int, ...], ...]
    maximal_h_first: tuple[tuple[int, ...], ...]

    _CSV_KEYS = {"dE": "antichains", "dF": "maximal", "dFh": "maximal_h_first"}

    def grid(self, which: str) -> tuple[tuple[int, ...], ...]:
        try:
            return getattr(self, self._CSV_KEYS[which])
        except KeyError:
            raise ValueError(f"unknown table {which!r}, expected dE, dF or dFh") from None

    def to_csv(self, which: str) -> str:
        """CSV with header ``m2=1..N`` and one row per ``m1``, LF endings."""
        grid = self.grid(which)
        lines = [",".join(f"m2={j}" for j in range(1, self.max2 + 1))]
        for i in range(1, self.max1 + 1):
            lines.append(",".join(str(grid[i][j]) for j in range(1, self.max2 + 1)))
        return "\n".join(lines) + "\n"


def build_table(max1: int, max2: int, verify: bool = True) -> CountTable:
    """Fill all three grids and cross-check the counting methods.

    The maximal grid comes from the simple recurrence and the h-first
    grid from the double recurrence; with ``verify`` the two rectangular
    methods are compared cell by cell and the diagonal additionally
    against the depth-four recurrence and the explicit sum.
    """
    if max1 < 1 or max2 < 1:
        raise ValueError("table sizes must be positive")
    antichains = tuple(
        tuple(count_antichains(i, j) for j in range(max2 + 1)) for i in range(max1 + 1)
    )
    maximal = tuple(
        tuple(count_maximal_simple(i, j) for j in range(max2 + 1)) for i in range(max1 + 1)
    )
    h_first = []
    for i in range(max1 + 1):
        row = []
        for j in range(max2 + 1):
            if i == 0 or j == 0:
                row.append(0)
                continue
            full, hf = count_maximal_double(i, j)
            if verify and full != maximal[i][j]:
                raise MethodDisagreementError(
                    f"simple={maximal[i][j]} vs double={full} at ({i},{j})"
                )
            row.append(hf)
        h_first.append(tuple(row))
    if verify:
        for m in range(1, min(max1, max2) + 1):
            diag = maximal[m][m]
            via_heinz = count_maximal_heinz(m)
            if via_heinz != diag:
                raise MethodDisagreementError(
                    f"simple={diag} vs heinz={via_heinz} at ({m},{m})"
                )
            via_explicit = count_maximal_explicit(m)
            if via_explicit != diag:
                raise MethodDisagreementError(
                    f"simple={diag} vs explicit={via_explicit} at ({m},{m})"
                )
    return CountTable(max1, max2, antichains, maximal, tuple(h_first))
