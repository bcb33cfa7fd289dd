"""Bijections between point sets, three-letter words, alignments and walks.

A grid line across the ``(m1+1) x (m2+1)`` lattice of cell corners is
written as a word over ``{h, v, d}``.  Read as a strict-chain line the
word runs from the NW corner to the SE corner: ``v`` steps down a row,
``h`` steps right a column and ``d`` crosses a chain cell diagonally.
Read as an antichain line the same alphabet runs from the NE corner to
the SW corner, with ``h`` now stepping left and ``d`` crossing the
antichain cell anti-diagonally.  Canonical words list all ``v`` moves
before the ``h`` moves between consecutive ``d`` moves, so the substring
``hv`` never occurs; representation is unique under that convention.
A word encodes a maximal set iff it additionally avoids ``vh``.

Alignments of two strings (order-preserving partial matchings, equal
whenever they match the same pairs) are the same objects in disguise:
``d`` is a matched column, ``v`` an unmatched letter of string 1, ``h``
an unmatched letter of string 2.  Alternate skips, a skipped letter of
string 1 directly followed by a skipped letter of string 2, appear in
the word as ``vh``; an alignment admits a new match iff it has them.

Monotone lattice walks of unit steps encode the same sets yet again:
the endpoints of advance-then-descend (``H`` then ``V``) step pairs of a
descending walk form an antichain on grid nodes, and of an ascending
walk a strict chain.  The set is maximal iff no ``V`` then ``H`` pair is
disjoint from every ``H`` then ``V`` pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from string import ascii_uppercase
from typing import Literal

from .errors import (
    LengthMismatchError,
    NonCanonicalWordError,
    NotAntichainError,
    WrongOrientationError,
)
from .poset import (
    GridShape,
    Point,
    PointSet,
    classify,
    require_strict_chain,
)

WORD_ALPHABET = "dhv"

Orientation = Literal["up", "down"]


def validate_word(word: str, shape: GridShape | None = None) -> str:
    """Check canonical form and, when a shape is given, letter counts.

    Letter counts determine the shape: ``count(v) + count(d) = m1`` and
    ``count(h) + count(d) = m2``.
    """
    bad = set(word) - set(WORD_ALPHABET)
    if bad:
        raise ValueError(f"word may only use letters h, v, d; got {sorted(bad)}")
    if "hv" in word:
        raise NonCanonicalWordError(f"word {word!r} contains the substring 'hv'")
    if shape is not None:
        m1 = word.count("v") + word.count("d")
        m2 = word.count("h") + word.count("d")
        if (m1, m2) != (shape.m1, shape.m2):
            raise LengthMismatchError(
                f"word {word!r} encodes a {m1}x{m2} grid, expected {shape}"
            )
    return word


def word_shape(word: str) -> GridShape:
    """Shape implied by a word's letter counts."""
    validate_word(word)
    return GridShape(word.count("v") + word.count("d"),
                     word.count("h") + word.count("d"))


def word_is_maximal(word: str) -> bool:
    """A canonical word encodes a maximal set iff ``vh`` never occurs."""
    validate_word(word)
    return "vh" not in word


def _encode(points: tuple[Point, ...], m1: int, m2: int) -> str:
    # Shared by the strict-chain and alignment encoders: elements ascend
    # strictly in both coordinates, each inter-element gap contributes
    # its v block then its h block, then the d crossing.
    parts = []
    px, py = 0, 0
    for x, y in points:
        parts.append("v" * (x - px - 1) + "h" * (y - py - 1) + "d")
        px, py = x, y
    parts.append("v" * (m1 - px) + "h" * (m2 - py))
    return "".join(parts)


# ---------------------------------------------------------------------------
# dominance duality


def antichain_to_strict_chain(a: PointSet) -> PointSet:
    """Reflect the second coordinate: ``(x, y) -> (x, m2 + 1 - y)``.

    An involution exchanging antichains and strict chains; it preserves
    maximality since it preserves the augmentation structure.
    """
    if not classify(a).is_antichain:
        raise NotAntichainError(f"not an antichain: {a.to_text() or '{}'}")
    m2 = a.shape.m2
    return PointSet(a.shape, tuple((x, m2 + 1 - y) for x, y in a))


def strict_chain_to_antichain(sc: PointSet) -> PointSet:
    """Inverse direction of the same reflection."""
    require_strict_chain(sc)
    m2 = sc.shape.m2
    return PointSet(sc.shape, tuple((x, m2 + 1 - y) for x, y in sc))


# ---------------------------------------------------------------------------
# words


def strict_chain_to_word(sc: PointSet) -> str:
    """Encode a strict chain as the canonical word of its grid line."""
    require_strict_chain(sc)
    return _encode(sc.points, sc.shape.m1, sc.shape.m2)


def word_to_strict_chain(word: str, shape: GridShape | None = None) -> PointSet:
    """Decode a canonical word along the NW-to-SE grid line.

    The cursor starts at corner (0, 0); ``v`` moves to (r+1, c), ``h``
    to (r, c+1) and ``d`` to (r+1, c+1), crossing cell (r+1, c+1) which
    is the next chain element.
    """
    validate_word(word, shape)
    if shape is None:
        shape = word_shape(word)
    r = c = 0
    pts = []
    for ch in word:
        if ch == "v":
            r += 1
        elif ch == "h":
            c += 1
        else:
            pts.append((r + 1, c + 1))
            r, c = r + 1, c + 1
    return PointSet(shape, tuple(pts))


def antichain_to_word(a: PointSet) -> str:
    """Encode an antichain as the canonical word of its grid line.

    Equals, letter for letter, the word of the dual strict chain; only
    the geometric reading of ``h`` and ``d`` differs.
    """
    return strict_chain_to_word(antichain_to_strict_chain(a))


def word_to_antichain(word: str, shape: GridShape | None = None) -> PointSet:
    """Decode a canonical word along the NE-to-SW grid line.

    The cursor starts at corner (0, m2); ``v`` moves to (r+1, c), ``h``
    to (r, c-1) and ``d`` to (r+1, c-1), crossing cell (r+1, c) which is
    the next antichain element.
    """
    validate_word(word, shape)
    if shape is None:
        shape = word_shape(word)
    r, c = 0, shape.m2
    pts = []
    for ch in word:
        if ch == "v":
            r += 1
        elif ch == "h":
            c -= 1
        else:
            pts.append((r + 1, c))
            r, c = r + 1, c - 1
    return PointSet(shape, tuple(pts))


# ---------------------------------------------------------------------------
# alignments


@dataclass(frozen=True)
class Alignment:
    """An order-preserving partial matching of two strings.

    Only the matched index pairs matter; the familiar two-row rendering
    with ``-`` for skips is a derived display, not part of identity.
    """

    len1: int
    len2: int
    matches: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.len1 < 1 or self.len2 < 1:
            raise ValueError("string lengths must be positive")
        prev = (0, 0)
        for i, j in self.matches:
            if not (1 <= i <= self.len1 and 1 <= j <= self.len2):
                raise ValueError(f"match ({i},{j}) out of bounds")
            if not (i > prev[0] and j > prev[1]):
                raise ValueError("matches must strictly increase in both strings")
            prev = (i, j)

    @classmethod
    def from_json(cls, text: str) -> "Alignment":
        data = json.loads(text)
        return cls(int(data["len1"]), int(data["len2"]),
                   tuple((int(i), int(j)) for i, j in data.get("matches", [])))

    def to_json(self) -> str:
        return json.dumps({"len1": self.len1, "len2": self.len2,
                           "matches": [list(m) for m in self.matches]})

    def render(self, string1: str | None = None, string2: str | None = None) -> str:
        """Two-row display with ``-`` for skips, columns in word order.

        Defaults: string 1 uses A, B, C, ...; string 2 uses the tail of
        the alphabet (XYZ for length 3, UVWXYZ for length 6).
        """
        if string1 is None:
            string1 = ascii_uppercase[: self.len1]
        if string2 is None:
            string2 = ascii_uppercase[-self.len2:]
        if len(string1) != self.len1 or len(string2) != self.len2:
            raise ValueError("rendering strings must match the alignment lengths")
        top, bottom = [], []
        i = j = 0
        for ch in alignment_to_word(self):
            if ch == "v":
                top.append(string1[i]); bottom.append("-"); i += 1
            elif ch == "h":
                top.append("-"); bottom.append(string2[j]); j += 1
            else:
                top.append(string1[i]); bottom.append(string2[j]); i += 1; j += 1
        return " ".join(top) + "\n" + " ".join(bottom)


def alignment_to_word(al: Alignment) -> str:
    """Canonical word of an alignment: ``d`` per match, ``v`` per skipped
    letter of string 1, ``h`` per skipped letter of string 2, the v's of
    each gap written before its h's."""
    return _encode(al.matches, al.len1, al.len2)


def word_to_alignment(word: str) -> Alignment:
    """Inverse of :func:`alignment_to_word`; lengths come from the counts."""
    shape = word_shape(word)
    chain = word_to_strict_chain(word, shape)
    return Alignment(shape.m1, shape.m2, chain.points)


def alignment_has_alternate_skips(al: Alignment) -> bool:
    """True iff some gap skips in string 1 then in string 2 (``vh`` in the
    word), i.e. iff the alignment can still be augmented."""
    return "vh" in alignment_to_word(al)


# ---------------------------------------------------------------------------
# walks


@dataclass(frozen=True)
class Walk:
    """A monotone lattice walk of unit steps.

    ``H`` advances the first coordinate.  An ``up`` walk runs from
    (0, 0) to (m1, m2) with ``V`` raising the second coordinate; a
    ``down`` walk runs from (0, m2) to (m1, 0) with ``V`` lowering it.
    """

    steps: str
    orientation: Orientation = "up"

    def __post_init__(self) -> None:
        steps = self.steps.upper()
        if set(steps) - set("HV"):
            raise ValueError(f"walk steps must be H or V, got {self.steps!r}")
        if self.orientation not in ("up", "down"):
            raise ValueError(f"orientation must be 'up' or 'down', got {self.orientation!r}")
        object.__setattr__(self, "steps", steps)

    @property
    def shape(self) -> GridShape:
        return GridShape(self.steps.count("H"), self.steps.count("V"))

    def vertices(self) -> list[Point]:
        """Walk vertices after each step (start corner excluded)."""
        if self.orientation == "up":
            x, y, dy = 0, 0, 1
        else:
            x, y, dy = 0, self.shape.m2, -1
        out = []
        for ch in self.steps:
            if ch == "H":
                x += 1
            else:
                y += dy
            out.append((x, y))
        return out


def _advance_descend_pairs(steps: str) -> list[int]:
    # Indices i with steps[i] == 'H' and steps[i+1] == 'V'.  Such pairs
    # can never overlap, so each step belongs to at most one of them.
    return [i for i in range(len(steps) - 1) if steps[i] == "H" and steps[i + 1] == "V"]


def _disjoint_descend_advance_pairs(steps: str) -> list[int]:
    paired: set[int] = set()
    for i in _advance_descend_pairs(steps):
        paired.update((i, i + 1))
    return [
        i
        for i in range(len(steps) - 1)
        if steps[i] == "V" and steps[i + 1] == "H"
        and i not in paired and i + 1 not in paired
    ]


def _require_orientation(walk: Walk, orientation: Orientation) -> None:
    if walk.orientation != orientation:
        raise WrongOrientationError(
            f"expected an '{orientation}' walk, got '{walk.orientation}'"
        )


def walk_to_strict_chain(walk: Walk) -> PointSet:
    """Endpoints of the HV step pairs of an ascending walk.

    The endpoints lie in ``[m1] x [m2]`` and always form a strict chain.
    """
    _require_orientation(walk, "up")
    verts = walk.vertices()
    pts = tuple(verts[i + 1] for i in _advance_descend_pairs(walk.steps))
    return PointSet(walk.shape, pts)


def walk_strict_chain_is_maximal(walk: Walk) -> bool:
    """True iff no VH pair is disjoint from every HV pair."""
    _require_orientation(walk, "up")
    return not _disjoint_descend_advance_pairs(walk.steps)


def walk_to_antichain(walk: Walk) -> tuple[Point, ...]:
    """Endpoints of the HV step pairs of a descending walk.

    Returned in the walk's own 0-based node coordinates, which may
    include 0 (e.g. an endpoint on the bottom edge); mapping into the
    1-based poset goes through the word codec, never through walks.
    """
    _require_orientation(walk, "down")
    verts = walk.vertices()
    return tuple(verts[i + 1] for i in _advance_descend_pairs(walk.steps))


def walk_antichain_is_maximal(walk: Walk) -> bool:
    """True iff no VH pair is disjoint from every HV pair."""
    _require_orientation(walk, "down")
    return not _disjoint_descend_advance_pairs(walk.steps)


def walk_augmenting_points(walk: Walk) -> tuple[Point, ...]:
    """Where each disjoint VH pair shows the encoded set can still grow.

    For an ascending walk this is the pair's endpoint, which extends the
    decoded strict chain directly.  For a descending walk it is the turn
    vertex between the V and the H step; rerouting the walk through the
    opposite corner of that cell creates a new HV endpoint there.
    """
    verts = walk.vertices()
    disjoint = _disjoint_descend_advance_pairs(walk.steps)
    if walk.orientation == "up":
        return tuple(verts[i + 1] for i in disjoint)
    return tuple(verts[i] for i in disjoint)


def walk_to_word(walk: Walk) -> str:
    """Collapse each HV pair to ``d`` and rename the leftover steps.

    A leftover ``H`` advances the walk's first coordinate, which the
    word alphabet calls ``v``; a leftover ``V`` becomes ``h``.  The
    remaining letters of each inter-``d`` segment are normalized to v's
    first, which changes neither the letter counts nor the decoded set.
    """
    steps = walk.steps
    raw = []
    i = 0
    while i < len(steps):
        if i + 1 < len(steps) and steps[i] == "H" and steps[i + 1] == "V":
            raw.append("d")
            i += 2
        else:
            raw.append("v" if steps[i] == "H" else "h")
            i += 1
    segments = "".join(raw).split("d")
    canonical = "d".join("v" * s.count("v") + "h" * s.count("h") for s in segments)
    return canonical
