"""ConciseSet construction, membership, serialization, add/remove."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from _reference import reference_words
from concise import (
    AppendOrderError,
    ConciseSet,
    InvalidWordError,
    MalformedHeaderError,
    MAX_ALLOWED_INTEGER,
    OutOfRangeError,
    TruncatedInputError,
)
from concise.sets import _compress_tail


def words_of(values):
    return ConciseSet(values).words


class TestAppendTraces:
    def test_first_append_block_zero(self):
        assert words_of([0]) == [0x80000001]

    def test_first_append_block_one(self):
        assert words_of([31]) == [0x80000000, 0x80000001]

    def test_first_append_far_block(self):
        # two whole zero blocks, then bit 0 of block 2
        assert words_of([62]) == [0x00000001, 0x80000001]

    def test_gap_merges_one_bit_literal_into_mixed_fill(self):
        assert words_of([0, 62]) == [0x02000001, 0x80000001]

    def test_same_block_append(self):
        assert words_of([0, 1]) == [0x80000003]

    def test_multi_bit_literal_does_not_merge(self):
        # previous literal has two bits, so the gap becomes its own word:
        # a single zero block stays a literal, two become a pure fill
        assert words_of([0, 1, 62]) == [0x80000003, 0x80000000, 0x80000001]
        assert words_of([0, 1, 93]) == [0x80000003, 0x00000001, 0x80000001]

    def test_fig2_style_fixture(self):
        values = list(range(62)) + [93, 1023]
        expect = [0x40000001, 0x80000000, 0x0200001D, 0x80000001]
        assert words_of(values) == expect
        assert reference_words(values, mixed=True) == expect

    def test_traces_match_reference_encoder(self):
        for values in ([0], [31], [62], [0, 62], [0, 1], [0, 1, 62], [0, 1, 93]):
            assert words_of(values) == reference_words(values, mixed=True)


class TestCompress:
    def test_dirty_literal_plus_zero_literal(self):
        ws = [0x80000001, 0x80000000]
        _compress_tail(ws, True, 0x01FFFFFF)
        assert ws == [0x02000001]

    def test_same_type_fill_extension(self):
        ws = [0x00000001, 0x80000000]
        _compress_tail(ws, True, 0x01FFFFFF)
        assert ws == [0x00000002]

    def test_opposite_fill_untouched(self):
        ws = [0x00000001, 0xFFFFFFFF]
        _compress_tail(ws, True, 0x01FFFFFF)
        assert ws == [0x00000001, 0xFFFFFFFF]

    def test_non_homogeneous_tail_untouched(self):
        ws = [0x80000003]
        _compress_tail(ws, True, 0x01FFFFFF)
        assert ws == [0x80000003]

    def test_ones_literal_merges_into_one_fill(self):
        ws = [0xFFFFFFFF, 0xFFFFFFFF]
        _compress_tail(ws, True, 0x01FFFFFF)
        assert ws == [0x40000001]

    def test_dirty_ones_literal_forms_mixed_one_fill(self):
        # all ones except bit 30, then a full block
        ws = [0xFFFFFFFF ^ (1 << 30), 0xFFFFFFFF]
        _compress_tail(ws, True, 0x01FFFFFF)
        assert ws == [0x40000001 | (31 << 25)]

    def test_saturated_count_is_not_extended(self):
        full = 0x01FFFFFF  # zero fill at count capacity
        ws = [full, 0x80000000]
        _compress_tail(ws, True, 0x01FFFFFF)
        assert ws == [full, 0x80000000]


class TestAppendContract:
    def test_not_greater_raises(self):
        s = ConciseSet([5])
        with pytest.raises(AppendOrderError):
            s.append(5)
        with pytest.raises(AppendOrderError):
            s.append(4)

    def test_out_of_range(self):
        s = ConciseSet()
        with pytest.raises(OutOfRangeError):
            s.append(-1)
        with pytest.raises(OutOfRangeError):
            s.append(MAX_ALLOWED_INTEGER + 1)

    def test_from_sorted_rejects_unsorted_and_duplicates(self):
        with pytest.raises(AppendOrderError):
            ConciseSet([3, 2])
        with pytest.raises(AppendOrderError):
            ConciseSet.from_sorted([3, 3])

    def test_max_integer_representable(self):
        s = ConciseSet([MAX_ALLOWED_INTEGER])
        assert MAX_ALLOWED_INTEGER in s
        assert s.to_list() == [MAX_ALLOWED_INTEGER]
        s2 = ConciseSet([0])
        s2.append(MAX_ALLOWED_INTEGER)
        assert s2.to_list() == [0, MAX_ALLOWED_INTEGER]
        s2.check_invariants()


class TestQueries:
    def test_contains_fig2_semantics(self):
        s = ConciseSet(list(range(62)) + [93, 1023])
        assert 93 in s
        assert all(v not in s for v in (94, 500, 1022))
        assert 1023 in s

    def test_contains_empty_and_out_of_range(self):
        assert 7 not in ConciseSet()
        s = ConciseSet(range(10000))
        assert 10000 not in s
        assert -3 not in s

    def test_cardinality(self):
        assert len(ConciseSet()) == 0
        assert ConciseSet([0, 62]).cardinality() == 2
        dense = ConciseSet(range(100))
        assert len(dense) == 100
        sparse = ConciseSet([0, 10_000, 20_000])
        assert len(sparse) == 3

    def test_cardinality_of_mixed_fills(self):
        from concise.words import WordKind, make_fill
        ten_zeros_one_flip = make_fill(WordKind.ZERO_FILL, 10, 1)
        s = ConciseSet._from_parts([ten_zeros_one_flip], 0)
        assert s.cardinality() == 1
        ten_ones_one_hole = make_fill(WordKind.ONE_FILL, 10, 4)
        t = ConciseSet._from_parts([ten_ones_one_hole], 309)
        assert t.cardinality() == 310 - 1

    def test_iteration_and_bool(self):
        assert list(ConciseSet([1, 5, 99])) == [1, 5, 99]
        assert not ConciseSet()
        assert ConciseSet([0])

    def test_equality_is_semantic(self):
        a = ConciseSet([0, 62])
        b = ConciseSet() | ConciseSet([0, 62])
        assert a == b
        assert a != ConciseSet([0, 63])
        assert ConciseSet() == ConciseSet()

    def test_repr_small_and_large(self):
        assert "0, 62" in repr(ConciseSet([0, 62]))
        assert "cardinality=100" in repr(ConciseSet(range(100)))


class TestAddRemove:
    def test_examples(self):
        assert ConciseSet([0, 62]).remove(62).to_list() == [0]
        assert ConciseSet().add(5).to_list() == [5]
        assert ConciseSet([5]).remove(9).to_list() == [5]

    def test_add_leaves_original_untouched(self):
        s = ConciseSet([10])
        t = s.add(3)
        assert s.to_list() == [10]
        assert t.to_list() == [3, 10]

    def test_add_beyond_max_uses_append_path(self):
        s = ConciseSet([1])
        t = s.add(100)
        assert t.words == ConciseSet([1, 100]).words

    def test_range_guard(self):
        with pytest.raises(OutOfRangeError):
            ConciseSet().add(MAX_ALLOWED_INTEGER + 1)
        with pytest.raises(OutOfRangeError):
            ConciseSet([1]).remove(-1)


class TestSerialization:
    def test_empty_golden_bytes(self):
        assert ConciseSet().serialize() == bytes.fromhex(
            "434e4353" "01" "00" "00000000" "ffffffff")

    def test_round_trip_is_bit_exact(self):
        for values in ([], [0], [0, 62], list(range(200)), [5, 10**6]):
            s = ConciseSet(values)
            t = ConciseSet.deserialize(s.serialize())
            assert t.words == s.words
            assert t.max == s.max

    def test_truncated(self):
        data = ConciseSet([1, 2, 3]).serialize()
        with pytest.raises(TruncatedInputError):
            ConciseSet.deserialize(data[:10])
        with pytest.raises(TruncatedInputError):
            ConciseSet.deserialize(data[:-1])

    def test_bad_magic_and_version(self):
        good = ConciseSet([1]).serialize()
        with pytest.raises(MalformedHeaderError):
            ConciseSet.deserialize(b"XXXX" + good[4:])
        with pytest.raises(MalformedHeaderError):
            ConciseSet.deserialize(good[:4] + b"\x02" + good[5:])
        with pytest.raises(MalformedHeaderError):
            ConciseSet.deserialize(good + b"\x00")

    def test_max_mismatch_rejected(self):
        data = bytearray(ConciseSet([1]).serialize())
        data[10] = 9  # declared max no longer matches the content
        with pytest.raises(InvalidWordError):
            ConciseSet.deserialize(bytes(data))

    def test_single_block_fill_is_decodable(self):
        # the encoder never writes a count-0 fill, but readers accept one
        import struct
        words = [0x00000000, 0x80000001]  # 1-block zero fill, then bit 31
        data = (b"CNCS\x01\x00" + struct.pack("<II", 2, 31)
                + struct.pack("<2I", *words))
        s = ConciseSet.deserialize(data)
        assert s.to_list() == [31]

    def test_block_capacity_enforced(self):
        import struct
        words = [0x01FFFFFF, 0x01FFFFFF, 0xFFFFFFFF]  # far past the range cap
        data = (b"CNCS\x01\x00" + struct.pack("<II", 3, 1)
                + struct.pack("<3I", *words))
        with pytest.raises(InvalidWordError):
            ConciseSet.deserialize(data)

    @staticmethod
    def _foreign(words, maxv):
        import struct
        return ConciseSet.deserialize(
            b"CNCS\x01\x00" + struct.pack("<II", len(words), maxv)
            + struct.pack(f"<{len(words)}I", *words))

    def test_foreign_trailing_mixed_fill_survives_append(self):
        # a stream may end in a mixed zero fill whose flip bit is max
        s = self._foreign([0x02000004], 0)  # 5 blocks, only bit 0 set
        assert s.to_list() == [0]
        assert s.words == [0x02000004]  # kept verbatim
        s.append(3)   # same block as max
        assert s.to_list() == [0, 3]
        s.check_invariants()
        t = self._foreign([0x02000004], 0)
        t.append(200)  # far beyond the fill
        assert t.to_list() == [0, 200]
        t.check_invariants()

    def test_foreign_trailing_zero_words_survive_append(self):
        s = self._foreign([0x80000001, 0x00000002, 0x80000000], 0)
        assert s.to_list() == [0]
        s.append(40)
        assert s.to_list() == [0, 40]
        s.check_invariants()


values_lists = st.lists(
    st.integers(0, 4000), unique=True, max_size=120).map(sorted)


@given(values=values_lists)
@settings(max_examples=200)
def test_round_trip_decode(values):
    s = ConciseSet(values)
    assert s.to_list() == values
    assert len(s) == len(values)
    s.check_invariants()


@given(values=values_lists)
@settings(max_examples=100)
def test_canonical_form_matches_reference(values):
    assert ConciseSet(values).words == reference_words(values, mixed=True)


@given(values=st.lists(st.integers(0, MAX_ALLOWED_INTEGER),
                       unique=True, max_size=40).map(sorted))
@settings(max_examples=100)
def test_full_range_round_trip(values):
    s = ConciseSet(values)
    assert s.to_list() == values
    assert ConciseSet.deserialize(s.serialize()).words == s.words


def test_from_sorted_is_deterministic():
    rng = random.Random(5)
    values = sorted(rng.sample(range(10**6), 500))
    assert ConciseSet(values).words == ConciseSet(values).words


def test_word_count_bound_for_append_built_sets():
    rng = random.Random(6)
    for _ in range(200):
        n = rng.randrange(1, 80)
        values = sorted(rng.sample(range(rng.choice([80, 1000, 10**5])), n))
        s = ConciseSet(values)
        assert s.word_count <= len(values) + 1
