"""Compressed integer sets over word-aligned run-length encoded bitmaps.

Two encodings share one engine:

* :class:`ConciseSet` packs runs of homogeneous 31-bit blocks into fill
  words whose 5-bit position field can additionally flip one bit of the
  run's first block ("mixed" fills).  A maximally sparse set of n integers
  costs about n words.
* :class:`WahSet` is the plain word-aligned hybrid baseline: same literal
  layout, pure fills only, block count stored directly.  The same sparse
  set costs about 2n words.

Sets are built by appending integers in strictly increasing order, which is
amortized O(1) per element.  All set-algebra operations work directly on
the compressed form, one 31-bit block at a time, bulk-skipping aligned runs
of homogeneous blocks, and return new sets.  A set that is no longer being
appended to is safe to share between threads; nothing mutates it.
"""

import enum
import struct
from typing import Iterable, Iterator, List, Optional

from .errors import (
    AppendOrderError,
    InvalidWordError,
    MalformedHeaderError,
    OutOfRangeError,
    TruncatedInputError,
)
from .words import (
    ALL_ONES_LITERAL,
    ALL_ZEROS_LITERAL,
    BLOCK_BITS,
    Format,
    MAX_ALLOWED_INTEGER,
    WAH_MAX_ALLOWED_INTEGER,
)

__all__ = [
    "Op",
    "ConciseSet",
    "WahSet",
    "WordCursor",
    "perform_operation",
    "load_set",
]

_EMPTY_MAX_SENTINEL = 0xFFFFFFFF
_HEADER = struct.Struct("<4sBBII")  # magic, version, reserved, word count, max


class Op(enum.IntEnum):
    """Binary set operations; ANDNOT is left minus right."""

    AND = 0
    OR = 1
    XOR = 2
    ANDNOT = 3


def _compress_tail(words: List[int], mixed: bool, cmask: int) -> None:
    """Fold a homogeneous trailing literal into the word before it.

    Mirrors the per-append compression step: a same-type fill grows by one
    block, an all-same or (CONCISE only) single-dirty-bit literal collapses
    with the trailing literal into a two-block fill.  A fill whose count
    field is saturated is left alone so the count never carries into the
    position bits.
    """
    if len(words) < 2:
        return
    w = words[-1]
    if w == ALL_ZEROS_LITERAL:
        one = False
    elif w == ALL_ONES_LITERAL:
        one = True
    else:
        return
    prev = words[-2]
    if prev < 0x80000000:
        if bool(prev & 0x40000000) == one and (prev & cmask) != cmask:
            words.pop()
            words[-1] = prev + 1
        return
    if mixed:
        pw = (prev ^ 0xFFFFFFFF) if one else (prev & 0x7FFFFFFF)
        if pw == 0:
            words.pop()
            words[-1] = 0x40000001 if one else 0x00000001
        elif pw & (pw - 1) == 0:
            words.pop()
            words[-1] = (0x40000001 if one else 0x00000001) | (pw.bit_length() << 25)
    else:
        if prev == (ALL_ONES_LITERAL if one else ALL_ZEROS_LITERAL):
            words.pop()
            words[-1] = 0x40000002 if one else 0x00000002


def _append_run(words: List[int], one: bool, nblocks: int,
                mixed: bool, cmask: int, cadj: int) -> None:
    """Append a run of homogeneous blocks, merging with the tail.

    Handles every canonical merge a block-at-a-time append would perform:
    extending a same-type fill, turning adjacent homogeneous literals into
    fills, and (CONCISE) absorbing a one-dirty-bit literal as the run's
    flipped first block.  Saturated count fields start a fresh word.
    """
    tbit = 0x40000000 if one else 0
    homog = ALL_ONES_LITERAL if one else ALL_ZEROS_LITERAL
    while nblocks > 0:
        if words:
            prev = words[-1]
            if prev < 0x80000000 and bool(prev & 0x40000000) == one:
                room = cmask - (prev & cmask)
                if room:
                    take = nblocks if nblocks < room else room
                    words[-1] = prev + take
                    nblocks -= take
                    continue
            elif prev >= 0x80000000:
                if prev == homog:
                    words.pop()
                    nblocks += 1
                    continue
                if mixed:
                    pw = (prev ^ 0xFFFFFFFF) if one else (prev & 0x7FFFFFFF)
                    if pw and pw & (pw - 1) == 0:
                        take = nblocks if nblocks < cmask else cmask
                        words.pop()
                        words.append(tbit | (pw.bit_length() << 25) | take)
                        nblocks -= take
                        continue
        if nblocks == 1:
            words.append(homog)
            return
        take = nblocks if nblocks < cmask + cadj else cmask + cadj
        words.append(tbit | (take - cadj))
        nblocks -= take


def _trim_trailing_zeros(words: List[int], mixed: bool) -> None:
    """Drop trailing words that hold no set bits.

    A trailing mixed zero fill keeps only its flipped bit, re-emitted as a
    literal; everything after the greatest set bit disappears.
    """
    while words:
        w = words[-1]
        if w == ALL_ZEROS_LITERAL:
            words.pop()
        elif w < 0x80000000 and not (w & 0x40000000):
            if mixed and (w >> 25) & 31:
                words[-1] = 0x80000000 | (1 << (((w >> 25) & 31) - 1))
                return
            words.pop()
        else:
            return


def _append_encoded(words: List[int], w: int,
                    mixed: bool, cmask: int, cadj: int) -> None:
    """Append an already-encoded word to a result, merging with the tail."""
    if w >= 0x80000000:
        words.append(w)
        _compress_tail(words, mixed, cmask)
        return
    if mixed and (w >> 25) & 31:
        # mixed fill: the interior flipped bit rules out any merge
        words.append(w)
        return
    _append_run(words, bool(w & 0x40000000), (w & cmask) + cadj, mixed, cmask, cadj)


def _content_max(words: List[int], cmask: int, cadj: int, mixed: bool) -> Optional[int]:
    """Greatest set bit across a word array, or None when all zeros."""
    base = 0
    best = None
    for w in words:
        if w >= 0x80000000:
            payload = w & 0x7FFFFFFF
            if payload:
                best = base * BLOCK_BITS + payload.bit_length() - 1
            base += 1
        else:
            blocks = (w & cmask) + cadj
            if w & 0x40000000:
                best = (base + blocks) * BLOCK_BITS - 1
            elif mixed:
                pos = (w >> 25) & 31
                if pos:
                    best = base * BLOCK_BITS + pos - 1
            base += blocks
    return best


def _perform(a: "_WordAlignedSet", b: "_WordAlignedSet",
             op: int, use_skip: bool = True) -> "_WordAlignedSet":
    cls = type(a)
    if type(b) is not cls:
        raise TypeError(f"cannot combine {cls.__name__} with {type(b).__name__}")
    opc = int(op)
    if not 0 <= opc <= 3:
        raise ValueError(f"unknown operation: {op!r}")
    if a._max is None:
        return b.copy() if opc in (Op.OR, Op.XOR) else cls()
    if b._max is None:
        return cls() if opc == Op.AND else a.copy()

    mixed = cls._MIXED
    cmask = cls._CMASK
    cadj = cls._CADJ
    awords = a._words
    bwords = b._words
    na = len(awords)
    nb = len(bwords)
    ai = bi = 0
    # per-side streaming state, refreshed once per word: `lit` is the next
    # block's literal, `tail` the literal of this word's remaining blocks
    # (lit != tail only while a mixed fill's flipped block is pending),
    # `kind` the fill type (-1 for literal words), `avail` blocks left
    a_lit = a_tail = b_lit = b_tail = 0
    a_kind = b_kind = -1
    a_avail = b_avail = 0
    r: List[int] = []
    rappend = r.append

    while True:
        if not a_avail:
            if ai == na:
                break
            w = awords[ai]
            ai += 1
            if w >= 0x80000000:
                a_lit = w
                a_kind = -1
                a_avail = 1
            else:
                if w & 0x40000000:
                    a_kind = 1
                    a_tail = ALL_ONES_LITERAL
                else:
                    a_kind = 0
                    a_tail = ALL_ZEROS_LITERAL
                a_lit = a_tail
                if mixed:
                    p = (w >> 25) & 31
                    if p:
                        a_lit = a_tail ^ (1 << (p - 1))
                a_avail = (w & cmask) + cadj
        if not b_avail:
            if bi == nb:
                break
            w = bwords[bi]
            bi += 1
            if w >= 0x80000000:
                b_lit = w
                b_kind = -1
                b_avail = 1
            else:
                if w & 0x40000000:
                    b_kind = 1
                    b_tail = ALL_ONES_LITERAL
                else:
                    b_kind = 0
                    b_tail = ALL_ZEROS_LITERAL
                b_lit = b_tail
                if mixed:
                    p = (w >> 25) & 31
                    if p:
                        b_lit = b_tail ^ (1 << (p - 1))
                b_avail = (w & cmask) + cadj

        if opc == 0:
            x = a_lit & b_lit
        elif opc == 1:
            x = a_lit | b_lit
        elif opc == 2:
            x = (a_lit ^ b_lit) | 0x80000000
        else:
            x = (a_lit & (b_lit ^ 0xFFFFFFFF)) | 0x80000000
        a_avail -= 1
        a_lit = a_tail
        b_avail -= 1
        b_lit = b_tail
        if x == ALL_ZEROS_LITERAL:
            # fast path for the dominant merge: grow an open zero fill
            if r and r[-1] < 0x40000000 and (r[-1] & cmask) != cmask:
                r[-1] += 1
            else:
                rappend(x)
                _compress_tail(r, mixed, cmask)
        elif x == ALL_ONES_LITERAL:
            if r and 0x40000000 <= r[-1] < 0x80000000 and (r[-1] & cmask) != cmask:
                r[-1] += 1
            else:
                rappend(x)
                _compress_tail(r, mixed, cmask)
        else:
            rappend(x)

        while use_skip:
            # while the result tail is an open fill, bulk-skip aligned runs,
            # crossing word boundaries as long as the pattern continues
            rl = r[-1]
            if rl >= 0x80000000:
                break
            if not a_avail:
                if ai == na:
                    break
                w = awords[ai]
                ai += 1
                if w >= 0x80000000:
                    a_lit = w
                    a_kind = -1
                    a_avail = 1
                else:
                    if w & 0x40000000:
                        a_kind = 1
                        a_tail = ALL_ONES_LITERAL
                    else:
                        a_kind = 0
                        a_tail = ALL_ZEROS_LITERAL
                    a_lit = a_tail
                    if mixed:
                        p = (w >> 25) & 31
                        if p:
                            a_lit = a_tail ^ (1 << (p - 1))
                    a_avail = (w & cmask) + cadj
            if not b_avail:
                if bi == nb:
                    break
                w = bwords[bi]
                bi += 1
                if w >= 0x80000000:
                    b_lit = w
                    b_kind = -1
                    b_avail = 1
                else:
                    if w & 0x40000000:
                        b_kind = 1
                        b_tail = ALL_ONES_LITERAL
                    else:
                        b_kind = 0
                        b_tail = ALL_ZEROS_LITERAL
                    b_lit = b_tail
                    if mixed:
                        p = (w >> 25) & 31
                        if p:
                            b_lit = b_tail ^ (1 << (p - 1))
                    b_avail = (w & cmask) + cadj
            # a run is skippable while pure; a pending flipped block or a
            # literal word may only be jumped when the other side's pure run
            # absorbs it (the op result cannot depend on its content)
            a_pure = a_kind >= 0 and a_lit == a_tail
            b_pure = b_kind >= 0 and b_lit == b_tail
            if opc == 2:
                if not (a_pure and b_pure):
                    break
                h = a_kind ^ b_kind
            else:
                absorbs_a = b_pure and b_kind == (0 if opc == 0 else 1)
                absorbs_b = a_pure and a_kind == (1 if opc == 1 else 0)
                if not ((a_pure or absorbs_a) and (b_pure or absorbs_b)):
                    break
                if absorbs_a or absorbs_b:
                    h = 1 if opc == 1 else 0
                elif opc == 0:
                    h = a_kind & b_kind
                elif opc == 1:
                    h = a_kind | b_kind
                else:
                    h = a_kind & (b_kind ^ 1)
            if h != (rl >> 30) & 1:
                break
            s = a_avail if a_avail < b_avail else b_avail
            room = cmask - (rl & cmask)
            if s > room:
                s = room
            if not s:
                break
            r[-1] = rl + s
            a_avail -= s
            a_lit = a_tail
            b_avail -= s
            b_lit = b_tail

    a_left = a_avail or ai < na
    if opc == 1 or opc == 2:
        if a_left:
            _copy_tail_state(r, awords, ai, a_avail, mixed, cmask, cadj)
        elif b_avail or bi < nb:
            _copy_tail_state(r, bwords, bi, b_avail, mixed, cmask, cadj)
    elif opc == 3 and a_left:
        _copy_tail_state(r, awords, ai, a_avail, mixed, cmask, cadj)

    _trim_trailing_zeros(r, mixed)

    out = cls()
    if r:
        out._words = r
        out._max = _content_max(r, cmask, cadj, mixed)
    return out


def _copy_tail(r: List[int], words: List[int], i: int, o: int,
               mixed: bool, cmask: int, cadj: int) -> None:
    """Append the unconsumed remainder of one operand to a result."""
    if o:
        w = words[i]
        blocks = (w & cmask) + cadj
        _append_run(r, bool(w & 0x40000000), blocks - o, mixed, cmask, cadj)
        i += 1
    n = len(words)
    while i < n:
        _append_encoded(r, words[i], mixed, cmask, cadj)
        i += 1


def _copy_tail_state(r: List[int], words: List[int], next_i: int, avail: int,
                     mixed: bool, cmask: int, cadj: int) -> None:
    """Copy the remainder given streaming state (next index, blocks left)."""
    if avail:
        i = next_i - 1
        w = words[i]
        blocks = 1 if w >= 0x80000000 else (w & cmask) + cadj
        _copy_tail(r, words, i, blocks - avail, mixed, cmask, cadj)
    else:
        _copy_tail(r, words, next_i, 0, mixed, cmask, cadj)


def perform_operation(a: "_WordAlignedSet", b: "_WordAlignedSet", op: Op,
                      *, use_skip: bool = True) -> "_WordAlignedSet":
    """Apply a bitwise set operation over two compressed sets of one format.

    ``use_skip`` disables the aligned-run bulk skip when False; the output
    is word-identical either way (the slow path exists for verification).
    """
    return _perform(a, b, op, use_skip)


class _WordAlignedSet:
    """Shared engine for both encodings; use ConciseSet or WahSet."""

    __slots__ = ("_words", "_max")

    _FORMAT: Format
    _MIXED: bool
    _CMASK: int
    _CADJ: int
    _MAX_VALUE: int
    _MAGIC: bytes

    def __init__(self, values: Iterable[int] = ()):
        self._words: List[int] = []
        self._max: Optional[int] = None
        for v in values:
            self.append(v)

    @classmethod
    def from_sorted(cls, values: Iterable[int]):
        """Build a set from strictly increasing integers.

        Rejects unsorted or duplicated input with AppendOrderError.
        """
        return cls(values)

    @classmethod
    def _from_parts(cls, words: List[int], maxv: Optional[int]):
        out = cls()
        out._words = words
        out._max = maxv
        return out

    # -- construction ------------------------------------------------------

    def append(self, i: int) -> None:
        """Add an integer strictly greater than everything in the set.

        This is the fast construction path (amortized O(1)); use add() for
        a pure insert-anywhere that returns a new set.
        """
        if i < 0 or i > self._MAX_VALUE:
            raise OutOfRangeError(f"{i} outside [0, {self._MAX_VALUE}]")
        words = self._words
        last = self._max
        if last is None:
            f = i // BLOCK_BITS
            if f == 1:
                words.append(ALL_ZEROS_LITERAL)
            elif f > 1:
                words.append(f - self._CADJ)  # pure zero fill of f blocks
            words.append(0x80000000 | (1 << (i % BLOCK_BITS)))
            self._max = i
            return
        if i <= last:
            raise AppendOrderError(f"{i} not greater than current max {last}")
        w = words[-1]
        if w == ALL_ZEROS_LITERAL or (w < 0x80000000 and not (w & 0x40000000)):
            # deserialized streams may carry content-free words (or a mixed
            # zero fill) after the greatest bit; the append arithmetic below
            # needs the last word to end at max's block
            _trim_trailing_zeros(words, self._MIXED)
        b = i - last + (last % BLOCK_BITS)
        if b >= BLOCK_BITS:
            z = b // BLOCK_BITS - 1  # whole zero blocks before the new bit
            if z:
                prev = words[-1]
                pw = prev & 0x7FFFFFFF
                if self._MIXED and prev >= 0x80000000 and pw and pw & (pw - 1) == 0:
                    # fold the one-bit literal and the gap into a mixed fill
                    assert z <= self._CMASK
                    words[-1] = (pw.bit_length() << 25) | z
                elif z == 1:
                    words.append(ALL_ZEROS_LITERAL)
                else:
                    words.append(z - self._CADJ)
            words.append(0x80000000 | (1 << (b % BLOCK_BITS)))
        else:
            words[-1] |= 1 << b
        self._max = i
        _compress_tail(words, self._MIXED, self._CMASK)

    def copy(self):
        return type(self)._from_parts(list(self._words), self._max)

    # -- queries -----------------------------------------------------------

    @property
    def max(self) -> Optional[int]:
        """Greatest stored integer, or None when empty."""
        return self._max

    @property
    def words(self) -> List[int]:
        """Copy of the compressed word array."""
        return list(self._words)

    @property
    def word_count(self) -> int:
        return len(self._words)

    def __bool__(self) -> bool:
        return self._max is not None

    def __contains__(self, i: int) -> bool:
        if self._max is None or i < 0 or i > self._max:
            return False
        cmask = self._CMASK
        cadj = self._CADJ
        target = i // BLOCK_BITS
        base = 0
        for w in self._words:
            if w >= 0x80000000:
                if base == target:
                    return bool(w & (1 << (i - base * BLOCK_BITS)))
                base += 1
            else:
                blocks = (w & cmask) + cadj
                if target < base + blocks:
                    one = bool(w & 0x40000000)
                    if self._MIXED and target == base:
                        pos = (w >> 25) & 31
                        if pos and i == base * BLOCK_BITS + pos - 1:
                            return not one
                    return one
                base += blocks
            if base > target:
                return False
        return False

    def __len__(self) -> int:
        return self.cardinality()

    def cardinality(self) -> int:
        """Number of stored integers (popcount over the compressed form)."""
        cmask = self._CMASK
        cadj = self._CADJ
        n = 0
        for w in self._words:
            if w >= 0x80000000:
                n += (w & 0x7FFFFFFF).bit_count()
            else:
                mixed_bit = 1 if self._MIXED and (w >> 25) & 31 else 0
                if w & 0x40000000:
                    n += BLOCK_BITS * ((w & cmask) + cadj) - mixed_bit
                else:
                    n += mixed_bit
        return n

    def to_list(self) -> List[int]:
        """All stored integers in ascending order."""
        cmask = self._CMASK
        cadj = self._CADJ
        mixed = self._MIXED
        out: List[int] = []
        ap = out.append
        ext = out.extend
        base = 0
        for w in self._words:
            if w >= 0x80000000:
                payload = w & 0x7FFFFFFF
                while payload:
                    lsb = payload & -payload
                    ap(base + lsb.bit_length() - 1)
                    payload ^= lsb
                base += BLOCK_BITS
            else:
                span = BLOCK_BITS * ((w & cmask) + cadj)
                pos = (w >> 25) & 31 if mixed else 0
                if w & 0x40000000:
                    if pos:
                        flip = base + pos - 1
                        ext(range(base, flip))
                        ext(range(flip + 1, base + span))
                    else:
                        ext(range(base, base + span))
                elif pos:
                    ap(base + pos - 1)
                base += span
        return out

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_list())

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        if self._max != other._max:
            return False
        if self._words == other._words:
            return True
        # operation results need not be word-identical to append-built sets
        return self.to_list() == other.to_list()

    __hash__ = None

    def __repr__(self) -> str:
        n = self.cardinality()
        if n <= 16:
            return f"{type(self).__name__}({self.to_list()!r})"
        return (f"<{type(self).__name__} cardinality={n} max={self._max} "
                f"words={len(self._words)}>")

    # -- set algebra (all return new sets) ---------------------------------

    def intersection(self, other):
        return _perform(self, other, Op.AND)

    def union(self, other):
        return _perform(self, other, Op.OR)

    def symmetric_difference(self, other):
        return _perform(self, other, Op.XOR)

    def difference(self, other):
        return _perform(self, other, Op.ANDNOT)

    __and__ = intersection
    __or__ = union
    __xor__ = symmetric_difference
    __sub__ = difference

    def add(self, i: int):
        """New set with i added; appends when i is beyond the current max."""
        if i < 0 or i > self._MAX_VALUE:
            raise OutOfRangeError(f"{i} outside [0, {self._MAX_VALUE}]")
        if self._max is None or i > self._max:
            c = self.copy()
            c.append(i)
            return c
        return _perform(self, type(self)([i]), Op.OR)

    def remove(self, i: int):
        """New set without i (set difference against a singleton)."""
        if i < 0 or i > self._MAX_VALUE:
            raise OutOfRangeError(f"{i} outside [0, {self._MAX_VALUE}]")
        return _perform(self, type(self)([i]), Op.ANDNOT)

    # -- serialization ------------------------------------------------------

    def serialize(self) -> bytes:
        """Bit-exact byte form: 6-byte header, word count, max, LE words."""
        if self._max is None:
            maxf = _EMPTY_MAX_SENTINEL
        else:
            if self._max >= _EMPTY_MAX_SENTINEL:
                raise OutOfRangeError("max exceeds the 32-bit serialization field")
            maxf = self._max
        head = _HEADER.pack(self._MAGIC, 1, 0, len(self._words), maxf)
        if not self._words:
            return head
        return head + struct.pack(f"<{len(self._words)}I", *self._words)

    @classmethod
    def deserialize(cls, data: bytes):
        """Parse and validate a serialized set.

        Raises MalformedHeaderError, TruncatedInputError, or
        InvalidWordError.  Accepts any decodable word stream whose content
        matches the declared max, including single-block CONCISE fills that
        the encoder itself never emits.
        """
        if len(data) < _HEADER.size:
            raise TruncatedInputError(
                f"need {_HEADER.size} header bytes, got {len(data)}")
        magic, version, _reserved, count, maxf = _HEADER.unpack_from(data)
        if magic != cls._MAGIC:
            raise MalformedHeaderError(f"bad magic {magic!r}")
        if version != 1:
            raise MalformedHeaderError(f"unsupported version {version}")
        need = _HEADER.size + 4 * count
        if len(data) < need:
            raise TruncatedInputError(f"need {need} bytes, got {len(data)}")
        if len(data) > need:
            raise MalformedHeaderError(f"{len(data) - need} trailing bytes")
        words = list(struct.unpack_from(f"<{count}I", data, _HEADER.size))
        if not words:
            if maxf != _EMPTY_MAX_SENTINEL:
                raise InvalidWordError("no words but max is set")
            return cls()
        if maxf == _EMPTY_MAX_SENTINEL:
            raise InvalidWordError("words present but max is the empty sentinel")
        cmask = cls._CMASK
        cadj = cls._CADJ
        total_blocks = 0
        for w in words:
            if w >= 0x80000000:
                total_blocks += 1
            else:
                blocks = (w & cmask) + cadj
                if blocks == 0:
                    raise InvalidWordError(f"zero-length fill {w:#010x}")
                total_blocks += blocks
        if total_blocks > cls._MAX_VALUE // BLOCK_BITS + 1:
            raise InvalidWordError(
                f"{total_blocks} blocks exceed the representable range")
        content = _content_max(words, cmask, cadj, cls._MIXED)
        if content != maxf:
            raise InvalidWordError(f"declared max {maxf}, content max {content}")
        return cls._from_parts(words, maxf)

    # -- diagnostics ---------------------------------------------------------

    def check_invariants(self) -> None:
        """Assert the canonical-form invariants the encoder maintains."""
        words = self._words
        if self._max is None:
            assert not words, "empty set with words"
            return
        assert words, "nonempty set without words"
        cmask = self._CMASK
        cadj = self._CADJ
        for w in words:
            assert 0 <= w <= 0xFFFFFFFF, f"word out of range: {w:#x}"
            if w < 0x80000000:
                assert (w & cmask) + cadj >= 2, f"single-block fill: {w:#010x}"
        for prev, w in zip(words, words[1:]):
            if prev < 0x80000000 and w < 0x80000000:
                both_pure = not self._MIXED or (
                    (prev >> 25) & 31 == 0 and (w >> 25) & 31 == 0)
                same_type = (prev ^ w) & 0x40000000 == 0
                saturated = (prev & cmask) == cmask
                assert not (both_pure and same_type and not saturated), \
                    f"mergeable fills {prev:#010x} {w:#010x}"
        content = _content_max(words, cmask, cadj, self._MIXED)
        assert content == self._max, f"max {self._max} != content {content}"


class ConciseSet(_WordAlignedSet):
    """Integer set compressed with mixed-fill word-aligned run lengths.

    Stores any subset of [0, 1 040 187 422].  Construct from ascending
    values (``ConciseSet([3, 5, 99])``) or incrementally via append().
    """

    __slots__ = ()

    _FORMAT = Format.CONCISE
    _MIXED = True
    _CMASK = 0x01FFFFFF
    _CADJ = 1
    _MAX_VALUE = MAX_ALLOWED_INTEGER
    _MAGIC = b"CNCS"


class WahSet(_WordAlignedSet):
    """Word-aligned hybrid baseline: pure fills only, direct block counts."""

    __slots__ = ()

    _FORMAT = Format.WAH
    _MIXED = False
    _CMASK = 0x3FFFFFFF
    _CADJ = 0
    _MAX_VALUE = WAH_MAX_ALLOWED_INTEGER
    _MAGIC = b"WAHS"


class WordCursor:
    """Block-granular reader over a set's compressed words.

    next_literal() returns one literal word per 31-bit block, expanding
    fills on the fly; block_offset is the index of the next block to
    return within the current word (always 0 on a literal word).
    """

    __slots__ = ("_words", "_cmask", "_cadj", "_mixed", "word_index", "block_offset")

    def __init__(self, s: _WordAlignedSet):
        self._words = s._words
        self._cmask = s._CMASK
        self._cadj = s._CADJ
        self._mixed = s._MIXED
        self.word_index = 0
        self.block_offset = 0

    def has_more(self) -> bool:
        return self.word_index < len(self._words)

    def next_literal(self) -> int:
        """Literal for the current block; advances by one block."""
        if self.word_index >= len(self._words):
            raise StopIteration("cursor exhausted")
        w = self._words[self.word_index]
        if w >= 0x80000000:
            self.word_index += 1
            return w
        lit = ALL_ONES_LITERAL if w & 0x40000000 else ALL_ZEROS_LITERAL
        if self.block_offset == 0 and self._mixed:
            pos = (w >> 25) & 31
            if pos:
                lit ^= 1 << (pos - 1)
        self.block_offset += 1
        if self.block_offset == (w & self._cmask) + self._cadj:
            self.word_index += 1
            self.block_offset = 0
        return lit

    def remaining_fill_length(self) -> int:
        """Pure blocks in the current fill after the current position.

        0 for literal words and exhausted cursors.
        """
        if self.word_index >= len(self._words):
            return 0
        w = self._words[self.word_index]
        if w >= 0x80000000:
            return 0
        return (w & self._cmask) + self._cadj - self.block_offset - 1

    def skip(self, nblocks: int) -> None:
        """Advance the cursor nblocks blocks, crossing words as needed."""
        while nblocks > 0:
            if self.word_index >= len(self._words):
                raise StopIteration("cursor exhausted")
            w = self._words[self.word_index]
            blocks = 1 if w >= 0x80000000 else (w & self._cmask) + self._cadj
            avail = blocks - self.block_offset
            if nblocks < avail:
                self.block_offset += nblocks
                return
            nblocks -= avail
            self.word_index += 1
            self.block_offset = 0

    def __iter__(self) -> "WordCursor":
        return self

    __next__ = next_literal


def load_set(data: bytes) -> _WordAlignedSet:
    """Deserialize either format, dispatching on the magic bytes."""
    if len(data) >= 4:
        if data[:4] == ConciseSet._MAGIC:
            return ConciseSet.deserialize(data)
        if data[:4] == WahSet._MAGIC:
            return WahSet.deserialize(data)
    raise MalformedHeaderError(f"unrecognized magic {data[:4]!r}")
