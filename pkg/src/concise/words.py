"""Bit-exact codec for single 32-bit words of the CONCISE and WAH encodings.

Every compressed bitmap in this package is an array of 32-bit words, each
holding either one uncompressed 31-bit block or a run of homogeneous blocks:

    literal             1 bbbbbbbbbbbbbbbbbbbbbbbbbbbbbbb     (31 payload bits)
    CONCISE fill        0 t ppppp ccccccccccccccccccccccccc   (5 pos, 25 count)
    WAH fill            0 t cccccccccccccccccccccccccccccc    (30 count)

Bit 0 of a literal payload is the smallest integer of its block.  A fill's
type bit ``t`` selects all-zero or all-one blocks.  A CONCISE fill stores the
number of blocks minus one in its count field and may flip a single bit of
the run's first block: position 0 means a pure fill, position p in [1, 31]
flips bit p - 1.  A WAH fill stores the block count directly and has no
position field.

This module is the single source of truth for these layouts.  The set
classes inline the same bit arithmetic in their hot paths; the functions
here are the reference the tests hold them to.
"""

import enum

__all__ = [
    "Format",
    "WordKind",
    "BLOCK_BITS",
    "LITERAL_FLAG",
    "FILL_TYPE_BIT",
    "PAYLOAD_MASK",
    "ALL_ZEROS_LITERAL",
    "ALL_ONES_LITERAL",
    "CONCISE_COUNT_MASK",
    "WAH_COUNT_MASK",
    "POSITION_SHIFT",
    "POSITION_MASK",
    "MAX_ALLOWED_INTEGER",
    "WAH_MAX_ALLOWED_INTEGER",
    "classify",
    "is_literal",
    "literal_payload",
    "make_literal",
    "fill_blocks",
    "fill_position",
    "expand_fill_block",
    "make_fill",
    "word_blocks",
]

BLOCK_BITS = 31

LITERAL_FLAG = 0x80000000
FILL_TYPE_BIT = 0x40000000
PAYLOAD_MASK = 0x7FFFFFFF
ALL_ZEROS_LITERAL = 0x80000000
ALL_ONES_LITERAL = 0xFFFFFFFF

CONCISE_COUNT_MASK = 0x01FFFFFF
WAH_COUNT_MASK = 0x3FFFFFFF
POSITION_SHIFT = 25
POSITION_MASK = 0x1F

# One CONCISE fill spans at most 2**25 blocks, so the greatest storable
# integer is 31 * 2**25 + 30.  The analogous WAH limit comes from its
# 30-bit count field.
MAX_ALLOWED_INTEGER = BLOCK_BITS * 2**25 + 30
WAH_MAX_ALLOWED_INTEGER = BLOCK_BITS * (2**30 - 1) + 30


class Format(enum.Enum):
    """Which fill layout a word uses."""

    CONCISE = "concise"
    WAH = "wah"


class WordKind(enum.Enum):
    LITERAL = "literal"
    ZERO_FILL = "zero_fill"
    ONE_FILL = "one_fill"


def classify(word: int, fmt: Format = Format.CONCISE) -> WordKind:
    """Classify a word as literal, zero fill, or one fill.

    Total over all 2**32 raw values; the format only matters for the
    interpretation of fill internals, not for classification.
    """
    if word & LITERAL_FLAG:
        return WordKind.LITERAL
    if word & FILL_TYPE_BIT:
        return WordKind.ONE_FILL
    return WordKind.ZERO_FILL


def is_literal(word: int) -> bool:
    return bool(word & LITERAL_FLAG)


def literal_payload(word: int) -> int:
    """The 31 content bits of a literal word."""
    if not word & LITERAL_FLAG:
        raise ValueError(f"not a literal word: {word:#010x}")
    return word & PAYLOAD_MASK


def make_literal(bits: int) -> int:
    """Wrap a 31-bit block as a literal word."""
    if not 0 <= bits <= PAYLOAD_MASK:
        raise ValueError(f"block content out of range: {bits:#x}")
    return LITERAL_FLAG | bits


def fill_blocks(word: int, fmt: Format = Format.CONCISE) -> int:
    """Number of 31-bit blocks a fill word represents.

    CONCISE stores blocks - 1 in its count field; WAH stores the count
    directly.  A CONCISE count field of zero (one block) is never produced
    by the encoder but decodes fine.
    """
    if word & LITERAL_FLAG:
        raise ValueError(f"not a fill word: {word:#010x}")
    if fmt is Format.CONCISE:
        return (word & CONCISE_COUNT_MASK) + 1
    return word & WAH_COUNT_MASK


def fill_position(word: int) -> int:
    """Position field of a CONCISE fill: 0 for pure, p flips bit p - 1."""
    if word & LITERAL_FLAG:
        raise ValueError(f"not a fill word: {word:#010x}")
    return (word >> POSITION_SHIFT) & POSITION_MASK


def expand_fill_block(word: int, block_idx: int, fmt: Format = Format.CONCISE) -> int:
    """Literal word for the block_idx-th block of a fill.

    Only block 0 of a CONCISE mixed fill differs from the pure pattern.
    """
    nblocks = fill_blocks(word, fmt)
    if not 0 <= block_idx < nblocks:
        raise IndexError(f"block {block_idx} out of range for {nblocks}-block fill")
    one = bool(word & FILL_TYPE_BIT)
    lit = ALL_ONES_LITERAL if one else ALL_ZEROS_LITERAL
    if fmt is Format.CONCISE and block_idx == 0:
        pos = (word >> POSITION_SHIFT) & POSITION_MASK
        if pos:
            if one:
                lit ^= 1 << (pos - 1)
            else:
                lit |= 1 << (pos - 1)
    return lit


def make_fill(kind: WordKind, blocks: int, position: int = 0,
              fmt: Format = Format.CONCISE) -> int:
    """Encode a fill word; inverse of the accessors above.

    Raises OverflowError when blocks exceeds the count field capacity.
    """
    if kind is WordKind.LITERAL:
        raise ValueError("literal is not a fill kind")
    if blocks < 1:
        raise ValueError(f"fill must span at least one block, got {blocks}")
    word = FILL_TYPE_BIT if kind is WordKind.ONE_FILL else 0
    if fmt is Format.CONCISE:
        if blocks > CONCISE_COUNT_MASK + 1:
            raise OverflowError(f"{blocks} blocks exceeds CONCISE count field")
        if not 0 <= position <= 31:
            raise ValueError(f"position out of range: {position}")
        return word | (position << POSITION_SHIFT) | (blocks - 1)
    if blocks > WAH_COUNT_MASK:
        raise OverflowError(f"{blocks} blocks exceeds WAH count field")
    if position != 0:
        raise ValueError("WAH fills have no position field")
    return word | blocks


def word_blocks(word: int, fmt: Format = Format.CONCISE) -> int:
    """Blocks spanned by any word: 1 for a literal, fill_blocks otherwise."""
    if word & LITERAL_FLAG:
        return 1
    return fill_blocks(word, fmt)
