"""Word, alignment and walk codecs against the worked examples and
exhaustive round trips."""

import pytest
from hypothesis import given, strategies as st

from macs import (
    Alignment,
    GridShape,
    LengthMismatchError,
    NonCanonicalWordError,
    NotAntichainError,
    NotStrictChainError,
    PointSet,
    Walk,
    WrongOrientationError,
    alignment_has_alternate_skips,
    alignment_to_word,
    antichain_to_strict_chain,
    antichain_to_word,
    classify,
    enumerate_antichains,
    enumerate_canonical_words,
    enumerate_strict_chains,
    enumerate_walks,
    is_maximal,
    strict_chain_to_antichain,
    strict_chain_to_word,
    validate_word,
    walk_antichain_is_maximal,
    walk_augmenting_points,
    walk_strict_chain_is_maximal,
    walk_to_antichain,
    walk_to_strict_chain,
    walk_to_word,
    word_is_maximal,
    word_shape,
    word_to_alignment,
    word_to_antichain,
    word_to_strict_chain,
)

S56 = GridShape(5, 6)
REFERENCE_WALK = "HVVHHVHVHHV"  # 11-step walk with one disjoint descend-advance pair


def ps(shape, *pts):
    return PointSet(shape, tuple(pts))


# ---------------------------------------------------------------------------
# duality


def test_duality_worked_example():
    assert antichain_to_strict_chain(ps(S56, (2, 4), (4, 2))) == ps(S56, (2, 3), (4, 5))
    assert strict_chain_to_antichain(ps(S56, (2, 3), (4, 5))) == ps(S56, (2, 4), (4, 2))


def test_duality_edge_cases():
    assert antichain_to_strict_chain(PointSet(S56)) == PointSet(S56)
    assert antichain_to_strict_chain(ps(S56, (1, 6))) == ps(S56, (1, 1))


def test_duality_rejects_wrong_kind():
    with pytest.raises(NotAntichainError):
        antichain_to_strict_chain(ps(S56, (2, 3), (4, 5)))
    with pytest.raises(NotStrictChainError):
        strict_chain_to_antichain(ps(S56, (2, 4), (4, 2)))


# ---------------------------------------------------------------------------
# words


def test_strict_chain_word_examples():
    assert strict_chain_to_word(ps(S56, (2, 3), (4, 5))) == "vhhdvhdvh"
    assert strict_chain_to_word(PointSet(GridShape(2, 3))) == "vvhhh"
    assert strict_chain_to_word(ps(GridShape(1, 1), (1, 1))) == "d"


def test_word_to_strict_chain_examples():
    assert word_to_strict_chain("vhhdvhdvh", S56) == ps(S56, (2, 3), (4, 5))
    assert word_to_strict_chain("d", GridShape(1, 1)) == ps(GridShape(1, 1), (1, 1))
    assert word_to_strict_chain("vvhhh", GridShape(2, 3)) == PointSet(GridShape(2, 3))


def test_antichain_word_examples():
    assert antichain_to_word(ps(S56, (2, 4), (4, 2))) == "vhhdvhdvh"
    assert word_to_antichain("d", GridShape(1, 1)) == ps(GridShape(1, 1), (1, 1))
    assert word_to_antichain("vvdhh", GridShape(3, 3)) == ps(GridShape(3, 3), (3, 3))


def test_word_validation():
    with pytest.raises(NonCanonicalWordError):
        validate_word("vhvhv")  # contains hv
    with pytest.raises(LengthMismatchError):
        validate_word("d", GridShape(1, 2))
    with pytest.raises(ValueError):
        validate_word("vxd")
    assert word_shape("vhhdvhdvh") == S56


def test_word_is_maximal_examples():
    assert not word_is_maximal("vhhdvhdvh")
    assert word_is_maximal("ddd")
    assert word_is_maximal("vvdhh")
    with pytest.raises(NonCanonicalWordError):
        word_is_maximal("dhv")


def test_word_round_trip_all_strict_chains_up_to_5x5():
    for m1 in range(1, 6):
        for m2 in range(1, 6):
            shape = GridShape(m1, m2)
            for chain in enumerate_strict_chains(shape):
                assert word_to_strict_chain(strict_chain_to_word(chain), shape) == chain


def test_word_round_trip_all_462_antichains_of_5x6():
    seen = 0
    for a in enumerate_antichains(S56):
        word = antichain_to_word(a)
        assert word_to_antichain(word, S56) == a
        assert strict_chain_to_antichain(antichain_to_strict_chain(a)) == a
        seen += 1
    assert seen == 462


def test_duality_commutes_with_encoding_on_5x6():
    for a in enumerate_antichains(S56):
        assert antichain_to_word(a) == strict_chain_to_word(antichain_to_strict_chain(a))


@pytest.mark.parametrize("m1,m2", [(m1, m2) for m1 in range(1, 6) for m2 in range(1, 6)])
def test_word_maximality_matches_augmentation(m1, m2):
    shape = GridShape(m1, m2)
    for word in enumerate_canonical_words(shape):
        flag = word_is_maximal(word)
        assert flag == is_maximal(word_to_antichain(word, shape), "antichain")
        assert flag == is_maximal(word_to_strict_chain(word, shape), "strict_chain")


# ---------------------------------------------------------------------------
# alignments


def test_alignment_word_short_example():
    # Strings of lengths 4 and 3 matching only the second letters; the
    # canonical form lists both trailing skips of string 1 before the
    # skip of string 2.
    assert alignment_to_word(Alignment(4, 3, ((2, 2),))) == "vhdvvh"


def test_alignment_word_long_example():
    assert alignment_to_word(Alignment(5, 6, ((2, 3), (4, 5)))) == "vhhdvhdvh"
    assert alignment_to_word(Alignment(1, 1, ((1, 1),))) == "d"


def test_word_to_alignment_inverse():
    al = word_to_alignment("vhhdvhdvh")
    assert al == Alignment(5, 6, ((2, 3), (4, 5)))
    for word in enumerate_canonical_words(GridShape(3, 4)):
        assert alignment_to_word(word_to_alignment(word)) == word


def test_alignment_validation():
    with pytest.raises(ValueError):
        Alignment(3, 3, ((2, 2), (2, 3)))  # first index repeats
    with pytest.raises(ValueError):
        Alignment(3, 3, ((4, 1),))
    with pytest.raises(ValueError):
        Alignment(0, 3)


def test_alignment_json_round_trip():
    al = Alignment(5, 6, ((2, 3), (4, 5)))
    assert Alignment.from_json(al.to_json()) == al
    assert Alignment.from_json('{"len1": 2, "len2": 2, "matches": []}') == Alignment(2, 2)


def test_alignment_render_matches_published_layout():
    # Canonical layout: all string-1 skips of a gap precede the string-2 ones.
    assert Alignment(4, 3, ((2, 2),)).render("ABCD", "XYZ").splitlines() == [
        "A - B C D -",
        "- X Y - - Z",
    ]
    assert Alignment(5, 6, ((2, 3), (4, 5))).render().splitlines() == [
        "A - - B C - D E -",
        "- U V W - X Y - Z",
    ]


def test_alternate_skips_examples():
    assert alignment_has_alternate_skips(Alignment(5, 6, ((2, 3), (4, 5))))
    assert not alignment_has_alternate_skips(Alignment(3, 3, ((1, 1), (2, 2), (3, 3))))
    assert not alignment_has_alternate_skips(Alignment(1, 2, ((1, 1),)))


def test_alternate_skips_iff_chain_augmentable_up_to_4x4():
    for m1 in range(1, 5):
        for m2 in range(1, 5):
            shape = GridShape(m1, m2)
            for word in enumerate_canonical_words(shape):
                al = word_to_alignment(word)
                chain = word_to_strict_chain(word, shape)
                assert alignment_has_alternate_skips(al) == (
                    not is_maximal(chain, "strict_chain")
                )


# ---------------------------------------------------------------------------
# walks


def test_reference_walk_up():
    walk = Walk(REFERENCE_WALK, "up")
    chain = walk_to_strict_chain(walk)
    assert chain == ps(GridShape(6, 5), (1, 1), (3, 3), (4, 4), (6, 5))
    assert not walk_strict_chain_is_maximal(walk)
    assert walk_augmenting_points(walk) == ((2, 2),)


def test_reference_walk_down():
    walk = Walk(REFERENCE_WALK, "down")
    assert walk_to_antichain(walk) == ((1, 4), (3, 2), (4, 1), (6, 0))
    assert not walk_antichain_is_maximal(walk)
    assert walk_augmenting_points(walk) == ((1, 3),)


def test_walk_small_examples():
    assert walk_to_strict_chain(Walk("HVHV", "up")) == ps(
        GridShape(2, 2), (1, 1), (2, 2))
    assert walk_strict_chain_is_maximal(Walk("HVHV", "up"))
    # All advances then all descents: the single turn is the only element.
    assert walk_to_strict_chain(Walk("HHHVV", "up")) == ps(GridShape(3, 2), (3, 1))
    assert walk_strict_chain_is_maximal(Walk("HHHVV", "up"))


def test_walk_orientation_enforced():
    with pytest.raises(WrongOrientationError):
        walk_to_strict_chain(Walk("HV", "down"))
    with pytest.raises(WrongOrientationError):
        walk_to_antichain(Walk("HV", "up"))
    with pytest.raises(ValueError):
        Walk("HX", "up")


def test_walk_to_word_collapse():
    assert walk_to_word(Walk(REFERENCE_WALK, "up")) == "dvhddvd"
    assert word_to_strict_chain("dvhddvd", GridShape(6, 5)) == ps(
        GridShape(6, 5), (1, 1), (3, 3), (4, 4), (6, 5))


def test_walk_word_correspondence_exhaustive():
    # Collapsing advance-descend pairs and renaming the leftovers gives a
    # canonical word that decodes to the same chain, for m1 + m2 <= 10.
    for m1 in range(1, 6):
        for m2 in range(1, 6):
            shape = GridShape(m1, m2)
            for walk in enumerate_walks(shape, "up"):
                word = walk_to_word(walk)
                assert validate_word(word, shape) == word
                assert word_to_strict_chain(word, shape) == walk_to_strict_chain(walk)


def test_walk_maximality_matches_decoded_chain_exhaustive():
    for m1 in range(1, 6):
        for m2 in range(1, 6):
            shape = GridShape(m1, m2)
            for walk in enumerate_walks(shape, "up"):
                chain = walk_to_strict_chain(walk)
                assert classify(chain).is_strict_chain
                assert walk_strict_chain_is_maximal(walk) == is_maximal(
                    chain, "strict_chain")


def test_up_walk_augmenting_points_extend_the_chain():
    for m1 in range(1, 5):
        for m2 in range(1, 5):
            for walk in enumerate_walks(GridShape(m1, m2), "up"):
                chain = walk_to_strict_chain(walk)
                for extra in walk_augmenting_points(walk):
                    grown = PointSet(walk.shape, chain.points + (extra,))
                    assert classify(grown).is_strict_chain


def test_down_walk_matches_word_route_shifted():
    # Node coordinates of a descending walk sit one below the poset row
    # of the word decode: (x, y) on the walk is the cell (x, y + 1).
    for m1 in range(1, 5):
        for m2 in range(1, 5):
            shape = GridShape(m1, m2)
            for walk in enumerate_walks(shape, "down"):
                grid_points = walk_to_antichain(walk)
                decoded = word_to_antichain(walk_to_word(walk), shape)
                assert decoded.points == tuple(
                    sorted((x, y + 1) for x, y in grid_points))
                assert walk_antichain_is_maximal(walk) == is_maximal(
                    decoded, "antichain")


def test_down_walk_mirrors_up_walk():
    # Reflecting the second coordinate maps the ascending decode onto
    # the descending one.
    for m1 in range(1, 5):
        for m2 in range(1, 5):
            shape = GridShape(m1, m2)
            for walk in enumerate_walks(shape, "up"):
                chain = walk_to_strict_chain(walk)
                mirrored = Walk(walk.steps, "down")
                assert walk_to_antichain(mirrored) == tuple(
                    (x, m2 - y) for x, y in chain)


def test_down_walk_count_of_distinct_antichains():
    # Each of the C(m1+m2, m1) walks encodes a different point set.
    for m1 in range(1, 5):
        for m2 in range(1, 5):
            shape = GridShape(m1, m2)
            seen = {walk_to_antichain(w) for w in enumerate_walks(shape, "down")}
            from macs import count_antichains
            assert len(seen) == count_antichains(m1, m2)


# ---------------------------------------------------------------------------
# property-based round trips


@st.composite
def antichain_sets(draw):
    m1 = draw(st.integers(1, 8))
    m2 = draw(st.integers(1, 8))
    k = draw(st.integers(0, min(m1, m2)))
    xs = sorted(draw(st.sets(st.integers(1, m1), min_size=k, max_size=k)))
    ys = sorted(draw(st.sets(st.integers(1, m2), min_size=k, max_size=k)),
                reverse=True)
    return PointSet(GridShape(m1, m2), tuple(zip(xs, ys)))


@given(antichain_sets())
def test_word_round_trip_property(a):
    word = antichain_to_word(a)
    assert word_to_antichain(word, a.shape) == a
    assert word_is_maximal(word) == is_maximal(a, "antichain")


@given(st.text(alphabet="HV", min_size=2, max_size=16))
def test_walk_collapse_property(steps):
    if "H" not in steps or "V" not in steps:
        return
    walk = Walk(steps, "up")
    word = walk_to_word(walk)
    assert word_to_strict_chain(word, walk.shape) == walk_to_strict_chain(walk)
