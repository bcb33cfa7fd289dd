"""The product of two finite chains and its dominance orders.

Points of the grid ``[m1] x [m2]`` (1-based on both axes) are ordered by

* dominance: ``(x, y) >* (z, w)`` iff ``x >= z``, ``y >= w`` and at least
  one inequality is strict;
* strong dominance: both coordinates strictly greater.

A set of points is an antichain (pairwise incomparable under dominance),
a chain (pairwise comparable under dominance), a strict chain (pairwise
comparable under strong dominance) or a weak antichain (pairwise
incomparable under strong dominance).  Each antichain induces two 0/1
step matrices, whose zero regions are the points dominated by, or
dominating, some element; the elements themselves are the "noses" of
those staircases.  Overlaying both matrices gives the augmentation
matrix: its ones mark exactly the points that can be added one at a
time, so a set is maximal iff its augmentation matrix is null.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterator, Literal

from .errors import (
    NotAntichainError,
    NotStepMatrixError,
    NotStrictChainError,
    WrongKindError,
)

Point = tuple[int, int]

SetKind = Literal["antichain", "strict_chain"]

_POINT_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


@dataclass(frozen=True, order=True)
class GridShape:
    """Size of the two chains whose product is the ambient poset."""

    m1: int
    m2: int

    def __post_init__(self) -> None:
        if self.m1 < 1 or self.m2 < 1:
            raise ValueError(f"grid shape must be at least 1x1, got {self.m1}x{self.m2}")

    @classmethod
    def parse(cls, text: str) -> "GridShape":
        """Parse ``'5x6'`` (case-insensitive separator)."""
        m = re.fullmatch(r"\s*(\d+)\s*[xX]\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"expected a shape like '5x6', got {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.m1}x{self.m2}"

    def points(self) -> Iterator[Point]:
        """All grid points in row-major order."""
        for x in range(1, self.m1 + 1):
            for y in range(1, self.m2 + 1):
                yield (x, y)


def dominates(p: Point, q: Point) -> bool:
    """True iff ``p >* q``: componentwise >= with at least one strict."""
    return p[0] >= q[0] and p[1] >= q[1] and p != q


def strongly_dominates(p: Point, q: Point) -> bool:
    """True iff both coordinates of ``p`` strictly exceed those of ``q``."""
    return p[0] > q[0] and p[1] > q[1]


def comparable(p: Point, q: Point) -> bool:
    """Comparability under dominance (used by the antichain tests)."""
    return dominates(p, q) or dominates(q, p)


def strongly_comparable(p: Point, q: Point) -> bool:
    """Comparability under strong dominance (used by the chain tests)."""
    return strongly_dominates(p, q) or strongly_dominates(q, p)


@dataclass(frozen=True)
class Classification:
    """Outcome of the four pairwise set classifications."""

    is_antichain: bool
    is_chain: bool
    is_strict_chain: bool
    is_weak_antichain: bool


@dataclass(frozen=True)
class PointSet:
    """An ordered, duplicate-free set of grid points.

    Points are normalized to ascending x, ties broken by ascending y;
    for an antichain this makes the y coordinates strictly descending.
    The normalization is what makes text round-trips and codec
    round-trips exact identities.
    """

    shape: GridShape
    points: tuple[Point, ...] = field(default=())

    def __post_init__(self) -> None:
        pts = tuple(sorted((int(x), int(y)) for x, y in self.points))
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points in point set")
        for x, y in pts:
            if not (1 <= x <= self.shape.m1 and 1 <= y <= self.shape.m2):
                raise ValueError(f"point ({x},{y}) outside grid {self.shape}")
        object.__setattr__(self, "points", pts)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self.points

    @classmethod
    def from_text(cls, text: str, shape: GridShape) -> "PointSet":
        """Parse the ``(x,y);(x,y);...`` text form (empty string = empty set)."""
        stripped = text.strip()
        if not stripped:
            return cls(shape, ())
        pts = []
        for chunk in stripped.split(";"):
            m = _POINT_RE.fullmatch(chunk.strip())
            if not m:
                raise ValueError(f"cannot parse point {chunk!r}")
            pts.append((int(m.group(1)), int(m.group(2))))
        return cls(shape, tuple(pts))

    def to_text(self) -> str:
        return ";".join(f"({x},{y})" for x, y in self.points)


def classify(s: PointSet) -> Classification:
    """Classify a point set by all four pairwise definitions.

    The empty set and singletons satisfy every definition vacuously.
    """
    pairs = list(combinations(s.points, 2))
    return Classification(
        is_antichain=all(not comparable(p, q) for p, q in pairs),
        is_chain=all(comparable(p, q) for p, q in pairs),
        is_strict_chain=all(strongly_comparable(p, q) for p, q in pairs),
        is_weak_antichain=all(not strongly_comparable(p, q) for p, q in pairs),
    )


def require_antichain(s: PointSet) -> PointSet:
    if not classify(s).is_antichain:
        raise NotAntichainError(f"not an antichain: {s.to_text() or '{}'}")
    return s


def require_strict_chain(s: PointSet) -> PointSet:
    if not classify(s).is_strict_chain:
        raise NotStrictChainError(f"not a strict chain: {s.to_text() or '{}'}")
    return s


class MatrixRole(str, Enum):
    """Role tag of a 0/1 matrix: which staircase (or overlay) it encodes."""

    NW_STEP = "NW_step"
    SE_STEP = "SE_step"
    NE_STEP = "NE_step"
    SW_STEP = "SW_step"
    AUGMENTATION = "augmentation"


# Staircase closure: the neighbour offsets every zero of the role must
# propagate to.  Noses are the zeros exposed in the opposite directions.
_CLOSURE = {
    MatrixRole.NW_STEP: ((-1, 0), (0, -1)),
    MatrixRole.SE_STEP: ((1, 0), (0, 1)),
    MatrixRole.NE_STEP: ((-1, 0), (0, 1)),
    MatrixRole.SW_STEP: ((1, 0), (0, -1)),
}


@dataclass(frozen=True)
class BinaryMatrix:
    """A 0/1 matrix over the grid, tagged with the role it plays.

    Rows are indexed by ``[m1]`` top to bottom and columns by ``[m2]``
    left to right; ``bit(x, y)`` uses the same 1-based coordinates as
    the grid points.
    """

    shape: GridShape
    rows: tuple[tuple[int, ...], ...]
    role: MatrixRole

    def __post_init__(self) -> None:
        if len(self.rows) != self.shape.m1 or any(len(r) != self.shape.m2 for r in self.rows):
            raise ValueError("matrix dimensions do not match shape")
        if any(b not in (0, 1) for r in self.rows for b in r):
            raise ValueError("matrix entries must be 0 or 1")

    def bit(self, x: int, y: int) -> int:
        return self.rows[x - 1][y - 1]

    def zeros(self) -> tuple[Point, ...]:
        return tuple(p for p in self.shape.points() if self.bit(*p) == 0)

    def ones(self) -> tuple[Point, ...]:
        return tuple(p for p in self.shape.points() if self.bit(*p) == 1)

    @property
    def is_null(self) -> bool:
        return all(b == 0 for r in self.rows for b in r)

    def to_text(self) -> str:
        return "\n".join("".join(str(b) for b in r) for r in self.rows)

    def is_step_matrix(self) -> bool:
        """Check the staircase closure for this matrix's role tag."""
        if self.role not in _CLOSURE:
            return False
        offsets = _CLOSURE[self.role]
        for x, y in self.zeros():
            for dx, dy in offsets:
                nx, ny = x + dx, y + dy
                if 1 <= nx <= self.shape.m1 and 1 <= ny <= self.shape.m2:
                    if self.bit(nx, ny) != 0:
                        return False
        return True


def _matrix_from_zero_test(shape: GridShape, role: MatrixRole, is_zero) -> BinaryMatrix:
    rows = tuple(
        tuple(0 if is_zero((x, y)) else 1 for y in range(1, shape.m2 + 1))
        for x in range(1, shape.m1 + 1)
    )
    return BinaryMatrix(shape, rows, role)


def step_matrices(ac: PointSet) -> tuple[BinaryMatrix, BinaryMatrix]:
    """The two step matrices of an antichain.

    The NW matrix has zeros at the elements and at every point dominated
    by an element; the SE matrix has zeros at the elements and at every
    point dominating an element.  The antichain is exactly the nose set
    of both.
    """
    require_antichain(ac)
    elems = set(ac.points)
    nw = _matrix_from_zero_test(
        ac.shape, MatrixRole.NW_STEP,
        lambda p: p in elems or any(dominates(e, p) for e in elems),
    )
    se = _matrix_from_zero_test(
        ac.shape, MatrixRole.SE_STEP,
        lambda p: p in elems or any(dominates(p, e) for e in elems),
    )
    return nw, se


def strict_chain_step_matrices(sc: PointSet) -> tuple[BinaryMatrix, BinaryMatrix]:
    """The NE/SW step matrix pair of a strict chain.

    Zeros of the NE matrix sit at points weakly left of and weakly above
    some element in (row, column) terms, i.e. ``x <= a and y >= b``;
    zeros of the SW matrix at points with ``x >= a and y <= b``.  Both
    regions consist of positions that cannot extend the chain, and the
    chain elements are the noses of each staircase.
    """
    require_strict_chain(sc)
    elems = set(sc.points)
    ne = _matrix_from_zero_test(
        sc.shape, MatrixRole.NE_STEP,
        lambda p: any(p[0] <= a and p[1] >= b for a, b in elems),
    )
    sw = _matrix_from_zero_test(
        sc.shape, MatrixRole.SW_STEP,
        lambda p: any(p[0] >= a and p[1] <= b for a, b in elems),
    )
    return ne, sw


def augmentation_matrix(s: PointSet, kind: SetKind = "antichain") -> BinaryMatrix:
    """Matrix whose ones mark the points addable to ``s`` one at a time.

    For an antichain a point is blocked iff it is an element or
    dominance-comparable to one; for a strict chain iff it is an element
    or fails strong comparability with one.
    """
    elems = set(s.points)
    if kind == "antichain":
        if not classify(s).is_antichain:
            raise WrongKindError(f"not an antichain: {s.to_text() or '{}'}")
        blocked = lambda p: p in elems or any(comparable(p, e) for e in elems)
    elif kind == "strict_chain":
        if not classify(s).is_strict_chain:
            raise WrongKindError(f"not a strict chain: {s.to_text() or '{}'}")
        blocked = lambda p: p in elems or any(
            e != p and not strongly_comparable(p, e) for e in elems
        )
    else:
        raise WrongKindError(f"unknown kind {kind!r}")
    return _matrix_from_zero_test(s.shape, MatrixRole.AUGMENTATION, blocked)


def noses(m: BinaryMatrix) -> PointSet:
    """Extremal zeros of a step matrix.

    For the NW role these are the dominance-maximal zeros, for SE the
    dominance-minimal ones; for the NE/SW roles the noses recover the
    strict chain that generated the staircase.
    """
    if m.role not in _CLOSURE:
        raise NotStepMatrixError(f"matrix role {m.role.value} carries no noses")
    if not m.is_step_matrix():
        raise NotStepMatrixError("staircase property violated")
    # A nose is a zero whose closure neighbours in the opposite directions
    # are ones (or outside the grid).
    offsets = [(-dx, -dy) for dx, dy in _CLOSURE[m.role]]
    out = []
    for x, y in m.zeros():
        exposed = True
        for dx, dy in offsets:
            nx, ny = x + dx, y + dy
            if 1 <= nx <= m.shape.m1 and 1 <= ny <= m.shape.m2 and m.bit(nx, ny) == 0:
                exposed = False
                break
        if exposed:
            out.append((x, y))
    return PointSet(m.shape, tuple(out))


def has_consecutive_ones(m: BinaryMatrix) -> bool:
    """True iff no row or column contains a zero between two ones."""

    def line_ok(bits: tuple[int, ...]) -> bool:
        try:
            first = bits.index(1)
        except ValueError:
            return True
        last = len(bits) - 1 - bits[::-1].index(1)
        return 0 not in bits[first:last + 1]

    return all(line_ok(r) for r in m.rows) and all(
        line_ok(tuple(r[j] for r in m.rows)) for j in range(m.shape.m2)
    )


def is_maximal(s: PointSet, kind: SetKind = "antichain") -> bool:
    """True iff no single point can be added while keeping the kind."""
    return augmentation_matrix(s, kind).is_null
