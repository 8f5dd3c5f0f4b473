"""The naive oracle: dual representations must always agree."""

import random

import pytest

from concise.plain import PlainSet, bitmap_from_sorted, list_op, plain_op


def test_plain_op_examples():
    assert plain_op(PlainSet([1, 2]), PlainSet([2, 3]), "and").elements == [2]
    x = PlainSet([4, 9, 100])
    assert plain_op(x, PlainSet(), "or").elements == [4, 9, 100]


def test_membership_and_len():
    p = PlainSet([3, 5, 5, 1])  # constructor sorts and dedupes
    assert p.elements == [1, 3, 5]
    assert len(p) == 3
    assert 5 in p and 2 not in p and -1 not in p


def test_negative_rejected():
    with pytest.raises(ValueError):
        PlainSet([-1, 3])


def test_memory_words():
    assert PlainSet().memory_words("bitmap") == 0
    assert PlainSet().memory_words("array") == 0
    assert PlainSet(range(32)).memory_words("bitmap") == 1
    assert PlainSet([10**6]).memory_words("bitmap") == 31_251
    assert PlainSet([10**6]).memory_words("array") == 1
    with pytest.raises(ValueError):
        PlainSet().memory_words("tree")


def test_bitmap_matches_elements():
    p = PlainSet([0, 5, 64])
    assert p.bitmap == (1 << 0) | (1 << 5) | (1 << 64)
    assert bitmap_from_sorted([]) == 0


def test_list_op_rejects_unknown():
    with pytest.raises(ValueError):
        list_op([1], [2], "nand")


def test_thousand_random_pairs_paths_agree():
    # plain_op cross-checks internally; this sweeps it over random pairs
    rng = random.Random(42)
    for _ in range(1000):
        n = rng.choice([300, 2000])
        a = PlainSet(rng.sample(range(n), rng.randrange(0, min(n, 120))))
        b = PlainSet(rng.sample(range(n), rng.randrange(0, min(n, 120))))
        for op, pyop in (("and", set.__and__), ("or", set.__or__),
                         ("xor", set.__xor__), ("andnot", set.__sub__)):
            r = plain_op(a, b, op)
            assert r.elements == sorted(pyop(set(a.elements), set(b.elements)))
