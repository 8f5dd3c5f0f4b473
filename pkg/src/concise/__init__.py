"""Compressed integer sets over word-aligned run-length encoded bitmaps."""

from .datagen import GeneratorSpec, generate
from .errors import (
    AppendOrderError,
    InvalidWordError,
    MalformedHeaderError,
    OutOfRangeError,
    SerializationError,
    TruncatedInputError,
)
from .plain import PlainSet, plain_op
from .sets import ConciseSet, Op, WahSet, WordCursor, load_set, perform_operation
from .words import Format, MAX_ALLOWED_INTEGER, WAH_MAX_ALLOWED_INTEGER, WordKind

__version__ = "0.1.0"

__all__ = [
    "ConciseSet",
    "WahSet",
    "PlainSet",
    "WordCursor",
    "Op",
    "Format",
    "WordKind",
    "GeneratorSpec",
    "generate",
    "perform_operation",
    "plain_op",
    "load_set",
    "MAX_ALLOWED_INTEGER",
    "WAH_MAX_ALLOWED_INTEGER",
    "OutOfRangeError",
    "AppendOrderError",
    "SerializationError",
    "MalformedHeaderError",
    "InvalidWordError",
    "TruncatedInputError",
    "__version__",
]
