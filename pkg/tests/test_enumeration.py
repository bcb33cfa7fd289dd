"""Exhaustive streams: counts, order, independence of the oracle."""

import pytest

from macs import (
    GridShape,
    TooLargeError,
    brute_force_count_maximal,
    classify,
    count_antichains,
    count_maximal_simple,
    enumerate_antichains,
    enumerate_canonical_words,
    enumerate_maximal_antichains,
    enumerate_maximal_words,
    enumerate_walks,
    is_maximal,
)


def test_words_of_1x1():
    assert list(enumerate_canonical_words(GridShape(1, 1))) == ["d", "vh"]
    assert list(enumerate_maximal_words(GridShape(1, 1))) == ["d"]


def test_maximal_words_of_2x3():
    assert list(enumerate_maximal_words(GridShape(2, 3))) == [
        "ddh", "dhd", "hdd", "hhdv", "vdhh",
    ]


def test_word_counts_match_binomials_up_to_sum_12():
    for m1 in range(1, 12):
        for m2 in range(1, 12):
            if m1 + m2 > 12:
                continue
            shape = GridShape(m1, m2)
            words = list(enumerate_canonical_words(shape))
            assert len(words) == count_antichains(m1, m2)
            assert len(set(words)) == len(words)
            assert words == sorted(words)  # lexicographic, d < h < v


def test_maximal_word_counts_match_recurrence():
    for m1 in range(1, 7):
        for m2 in range(1, 7):
            shape = GridShape(m1, m2)
            words = list(enumerate_maximal_words(shape))
            assert len(words) == count_maximal_simple(m1, m2)
            assert len(set(words)) == len(words)
    assert sum(1 for _ in enumerate_maximal_words(GridShape(7, 7))) == 817
    assert sum(1 for _ in enumerate_maximal_words(GridShape(8, 8))) == 2599


def test_enumerated_antichains_classify():
    shape = GridShape(3, 4)
    sets = list(enumerate_antichains(shape))
    assert len(sets) == count_antichains(3, 4)
    assert len(set(sets)) == len(sets)
    for s in sets:
        assert classify(s).is_antichain


def test_enumerated_maximal_antichains():
    assert sorted(s.to_text() for s in enumerate_maximal_antichains(GridShape(2, 2))) == [
        "(1,1)", "(1,2);(2,1)", "(2,2)",
    ]
    row = list(enumerate_maximal_antichains(GridShape(1, 5)))
    assert len(row) == 5 and all(len(s) == 1 for s in row)
    assert sum(1 for _ in enumerate_maximal_antichains(GridShape(3, 3))) == 9
    for s in enumerate_maximal_antichains(GridShape(4, 4)):
        assert is_maximal(s, "antichain")


def test_brute_force_counts():
    assert brute_force_count_maximal(GridShape(1, 1)) == 1
    assert brute_force_count_maximal(GridShape(4, 6)) == 75
    assert brute_force_count_maximal(GridShape(7, 7)) == 817


def test_boundary_hook_hits_every_maximal_antichain_once():
    # The top-left boundary hook {(1, j)} U {(i, m2)} meets each maximal
    # antichain in exactly one point; this is what drives the simple
    # recurrence.
    for m1 in range(1, 6):
        for m2 in range(1, 6):
            shape = GridShape(m1, m2)
            hook = {(1, j) for j in range(1, m2 + 1)} | {
                (i, m2) for i in range(1, m1 + 1)
            }
            for s in enumerate_maximal_antichains(shape):
                assert len(set(s.points) & hook) == 1


def test_walk_stream():
    walks = list(enumerate_walks(GridShape(2, 2), "up"))
    assert [w.steps for w in walks] == [
        "HHVV", "HVHV", "HVVH", "VHHV", "VHVH", "VVHH",
    ]
    assert len(list(enumerate_walks(GridShape(1, 1), "down"))) == 2
    assert any(w.steps == "HVVHHVHVHHV" for w in enumerate_walks(GridShape(6, 5), "up"))


def test_enumeration_guard(monkeypatch):
    with pytest.raises(TooLargeError):
        list(enumerate_canonical_words(GridShape(11, 10)))
    with pytest.raises(TooLargeError):
        brute_force_count_maximal(GridShape(15, 15))
    monkeypatch.setenv("MACS_MAX_ENUM", "22")
    assert sum(1 for _ in enumerate_canonical_words(GridShape(1, 21))) == 22
    monkeypatch.setenv("MACS_MAX_ENUM", "five")
    with pytest.raises(TooLargeError):
        list(enumerate_canonical_words(GridShape(1, 1)))
