"""Exception types shared across the package."""


class OutOfRangeError(ValueError):
    """Integer outside the representable range of the encoding."""


class AppendOrderError(ValueError):
    """Append of a value that is not strictly greater than the current max."""


class SerializationError(ValueError):
    """Base class for errors raised while reading a serialized set."""


class MalformedHeaderError(SerializationError):
    """Bad magic, unsupported version, or trailing data."""


class InvalidWordError(SerializationError):
    """Word stream is structurally valid but semantically inconsistent."""


class TruncatedInputError(SerializationError):
    """Byte stream ends before the declared content."""
