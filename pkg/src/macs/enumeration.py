"""Exhaustive streams of words, point sets and walks, plus the oracle.

Every stream is duplicate-free and emitted in lexicographic order of the
word encoding (with ``d < h < v``), so golden outputs are reproducible.
The brute-force count filters the full antichain stream through the
augmentation-matrix maximality test; it deliberately avoids the
``vh``-free shortcut so the two maximality routes stay independent.

Enumeration is guarded by ``m1 + m2 <= 20`` by default; the environment
variable ``MACS_MAX_ENUM`` overrides the bound.
"""

from __future__ import annotations

import os
from itertools import combinations
from typing import Iterator

from .codec import Walk, word_to_antichain, word_to_strict_chain
from .errors import TooLargeError
from .poset import GridShape, PointSet, augmentation_matrix

DEFAULT_MAX_ENUM = 20


def enumeration_limit() -> int:
    raw = os.environ.get("MACS_MAX_ENUM")
    if raw is None:
        return DEFAULT_MAX_ENUM
    try:
        return int(raw)
    except ValueError:
        raise TooLargeError(f"MACS_MAX_ENUM must be an integer, got {raw!r}") from None


def _guard(shape: GridShape) -> GridShape:
    limit = enumeration_limit()
    if shape.m1 + shape.m2 > limit:
        raise TooLargeError(
            f"shape {shape} exceeds the enumeration guard m1+m2 <= {limit}"
        )
    return shape


def _words(shape: GridShape, maximal: bool) -> Iterator[str]:
    # Depth-first over d < h < v; r1/r2 are the row and column moves
    # still owed.  Canonical words forbid v after h; maximal words also
    # forbid h after v, leaving single-letter blocks between d's.
    def rec(prefix: str, r1: int, r2: int, prev: str) -> Iterator[str]:
        if r1 == 0 and r2 == 0:
            yield prefix
            return
        if r1 and r2:
            yield from rec(prefix + "d", r1 - 1, r2 - 1, "d")
        if r2 and not (maximal and prev == "v"):
            yield from rec(prefix + "h", r1, r2 - 1, "h")
        if r1 and prev != "h":
            yield from rec(prefix + "v", r1 - 1, r2, "v")

    yield from rec("", shape.m1, shape.m2, "")


def enumerate_canonical_words(shape: GridShape) -> Iterator[str]:
    """All canonical words of the shape; one per antichain."""
    yield from _words(_guard(shape), maximal=False)


def enumerate_maximal_words(shape: GridShape) -> Iterator[str]:
    """Canonical words avoiding ``vh`` too; one per maximal antichain."""
    yield from _words(_guard(shape), maximal=True)


def enumerate_antichains(shape: GridShape) -> Iterator[PointSet]:
    for word in enumerate_canonical_words(shape):
        yield word_to_antichain(word, shape)


def enumerate_strict_chains(shape: GridShape) -> Iterator[PointSet]:
    for word in enumerate_canonical_words(shape):
        yield word_to_strict_chain(word, shape)


def enumerate_maximal_antichains(shape: GridShape) -> Iterator[PointSet]:
    for word in enumerate_maximal_words(shape):
        yield word_to_antichain(word, shape)


def enumerate_walks(shape: GridShape, orientation: str = "up") -> Iterator[Walk]:
    """All ``C(m1 + m2, m1)`` step sequences, lexicographic with H < V."""
    _guard(shape)
    n = shape.m1 + shape.m2
    for positions in combinations(range(n), shape.m1):
        steps = ["V"] * n
        for p in positions:
            steps[p] = "H"
        yield Walk("".join(steps), orientation)


def brute_force_count_maximal(shape: GridShape) -> int:
    """Count maximal antichains by exhaustion plus augmentation nullity.

    Independent of the word-level maximality criterion: each antichain
    is tested by building its augmentation matrix.
    """
    count = 0
    for antichain in enumerate_antichains(shape):
        if augmentation_matrix(antichain, "antichain").is_null:
            count += 1
    return count
