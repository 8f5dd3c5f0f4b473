"""Naive uncompressed integer sets used as ground truth and baselines.

A PlainSet keeps two redundant representations: a sorted list of elements
and an uncompressed bitmap (one Python int, bit i set iff i is stored).
Set operations are computed over BOTH representations with independent
code paths and cross-checked against each other before returning, so this
module can falsify the compressed implementations.  It deliberately shares
no code with them and makes no attempt to be fast.
"""

from typing import Iterable, List, Sequence

__all__ = ["PlainSet", "plain_op", "list_op", "bitmap_from_sorted"]

_OPS = ("and", "or", "xor", "andnot")


def bitmap_from_sorted(values: Sequence[int]) -> int:
    """Uncompressed bitmap (as one int) for a sorted value list."""
    if not values:
        return 0
    buf = bytearray(values[-1] // 8 + 1)
    for v in values:
        buf[v >> 3] |= 1 << (v & 7)
    return int.from_bytes(buf, "little")


def list_op(a: Sequence[int], b: Sequence[int], op: str) -> List[int]:
    """Merge-walk set operation over two sorted duplicate-free lists."""
    out: List[int] = []
    i = j = 0
    na, nb = len(a), len(b)
    if op == "and":
        while i < na and j < nb:
            x, y = a[i], b[j]
            if x == y:
                out.append(x)
                i += 1
                j += 1
            elif x < y:
                i += 1
            else:
                j += 1
    elif op == "or":
        while i < na and j < nb:
            x, y = a[i], b[j]
            if x == y:
                out.append(x)
                i += 1
                j += 1
            elif x < y:
                out.append(x)
                i += 1
            else:
                out.append(y)
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
    elif op == "xor":
        while i < na and j < nb:
            x, y = a[i], b[j]
            if x == y:
                i += 1
                j += 1
            elif x < y:
                out.append(x)
                i += 1
            else:
                out.append(y)
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
    elif op == "andnot":
        while i < na and j < nb:
            x, y = a[i], b[j]
            if x == y:
                i += 1
                j += 1
            elif x < y:
                out.append(x)
                i += 1
            else:
                j += 1
        out.extend(a[i:])
    else:
        raise ValueError(f"unknown op {op!r}, expected one of {_OPS}")
    return out


class PlainSet:
    """Sorted element list plus lazily built uncompressed bitmap."""

    __slots__ = ("elements", "_bitmap")

    def __init__(self, values: Iterable[int] = ()):
        elems = sorted(set(values))
        if elems and elems[0] < 0:
            raise ValueError("negative values not allowed")
        self.elements: List[int] = elems
        self._bitmap = None

    @property
    def bitmap(self) -> int:
        if self._bitmap is None:
            self._bitmap = bitmap_from_sorted(self.elements)
        return self._bitmap

    def __contains__(self, i: int) -> bool:
        return bool(i >= 0 and (self.bitmap >> i) & 1)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlainSet):
            return NotImplemented
        return self.elements == other.elements

    __hash__ = None

    def __repr__(self) -> str:
        return f"PlainSet({self.elements!r})"

    @property
    def max(self):
        return self.elements[-1] if self.elements else None

    def memory_words(self, representation: str = "bitmap") -> int:
        """32-bit words this set costs as a raw bitmap or a plain array."""
        if representation == "bitmap":
            if not self.elements:
                return 0
            return (self.elements[-1] + 1 + 31) // 32
        if representation == "array":
            return len(self.elements)
        raise ValueError(f"unknown representation {representation!r}")


def plain_op(a: PlainSet, b: PlainSet, op: str, cross_check: bool = True) -> PlainSet:
    """Set operation computed by merge walk and, independently, by bitmap.

    The two paths must agree; disagreement raises AssertionError.
    """
    merged = list_op(a.elements, b.elements, op)
    if cross_check:
        x, y = a.bitmap, b.bitmap
        if op == "and":
            bits = x & y
        elif op == "or":
            bits = x | y
        elif op == "xor":
            bits = x ^ y
        else:
            bits = x & ~y
        assert bitmap_from_sorted(merged) == bits, \
            f"list and bitmap paths disagree for {op}"
    out = PlainSet.__new__(PlainSet)
    out.elements = merged
    out._bitmap = None
    return out
