"""Partitions, cells, and skew shapes.

A partition is a plain tuple of weakly decreasing positive integers (no
trailing zeros; the empty tuple is the empty partition).  A cell is a
``(row, col)`` pair of 1-based integers, rows growing downwards (English
notation).  Everything here is immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

Cell = tuple[int, int]
Partition = tuple[int, ...]


def as_partition(parts) -> Partition:
    """Normalize an iterable of parts to a partition tuple.

    Trailing zeros are dropped; raises ValueError if the parts are not
    weakly decreasing nonnegative integers.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse the text encoding: comma-separated parts; "0" or "" is empty."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition: {text!r}") from None
    return as_partition(parts)


def format_partition(p: Partition) -> str:
    """Inverse of parse_partition; the empty partition renders as "0"."""
    return ",".join(str(x) for x in p) if p else "0"


def size(p: Partition) -> int:
    return sum(p)


def part(p: Partition, i: int) -> int:
    """The i-th part (1-based), zero beyond the length."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def cells(p: Partition) -> list[Cell]:
    """Cells of the Young diagram in row-major order."""
    return [(i + 1, j + 1) for i, row in enumerate(p) for j in range(row)]


def contains(inner: Partition, outer: Partition) -> bool:
    """Componentwise containment, padding with zeros."""
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def union(p: Partition, q: Partition) -> Partition:
    """Multiset union of parts."""
    return tuple(sorted(p + q, reverse=True))


def doubled_square(p: Partition) -> Partition:
    """Each part doubled and repeated twice, e.g. (3,2) -> (6,6,4,4)."""
    out: list[int] = []
    for x in p:
        out += [2 * x, 2 * x]
    return tuple(out)


def staircase(k: int) -> Partition:
    """The staircase (k-1, k-2, ..., 1); k = 1 gives the empty partition."""
    if k < 1:
        raise ValueError("staircase index must be >= 1")
    return tuple(range(k - 1, 0, -1))


def blocks(p: Partition) -> list[tuple[int, int]]:
    """Consecutive intervals of [1, |p|] with lengths the parts of p.

    Returned as inclusive (lo, hi) pairs.
    """
    out = []
    start = 1
    for x in p:
        out.append((start, start + x - 1))
        start += x
    return out


def max_des(p: Partition) -> set[int]:
    """Largest possible descent set over standard fillings of shape p.

    Defined for even |p| = 2n as [2n-1] minus the partial column sums
    conj(p)_1 + ... + conj(p)_j for j in [p_1 - 1].
    """
    n2 = size(p)
    if n2 % 2 != 0:
        raise ValueError("maxDes defined for even size")
    conj = conjugate(p)
    removed = set()
    acc = 0
    for j in range(max(part(p, 1) - 1, 0)):
        acc += conj[j]
        removed.add(acc)
    return set(range(1, n2)) - removed


@dataclass(frozen=True)
class SkewShape:
    """A skew Young diagram outer/inner with inner contained in outer."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if not contains(self.inner, self.outer):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return size(self.outer) - size(self.inner)

    def cells(self) -> frozenset[Cell]:
        return frozenset(
            (i + 1, j + 1)
            for i, row in enumerate(self.outer)
            for j in range(part(self.inner, i + 1), row)
        )

    def is_straight(self) -> bool:
        return not self.inner

    def __str__(self) -> str:
        if self.inner:
            return f"{format_partition(self.outer)}/{format_partition(self.inner)}"
        return format_partition(self.outer)


def parse_skew(text: str) -> SkewShape:
    """Parse "outer" or "outer/inner" in the partition text encoding."""
    if "/" in text:
        outer, inner = text.split("/", 1)
        return SkewShape(parse_partition(outer), parse_partition(inner))
    return SkewShape(parse_partition(text))


def shape_of_cells(cs) -> SkewShape:
    """The skew shape with exactly the given cells; raises if none exists.

    Rows that are empty between occupied rows are allowed (they occur when
    restricting a tableau to a late interval of entries); such a row gets the
    minimal inner/outer value consistent with the rows below.
    """
    cs = set(cs)
    if not cs:
        return SkewShape((), ())
    nrows = max(r for r, _ in cs)
    outer = [0] * nrows
    inner = [0] * nrows
    for r in range(nrows, 0, -1):
        cols = sorted(c for rr, c in cs if rr == r)
        if cols:
            lo, hi = cols[0], cols[-1]
            if cols != list(range(lo, hi + 1)):
                raise ValueError("cells do not form a skew shape (gap in a row)")
            outer[r - 1], inner[r - 1] = hi, lo - 1
        else:
            outer[r - 1] = inner[r - 1] = outer[r] if r < nrows else 0
    if any(inner[i] < inner[i + 1] for i in range(nrows - 1)):
        raise ValueError("cells do not form a skew shape")
    try:
        return SkewShape(tuple(outer), tuple(inner))
    except ValueError:
        raise ValueError("cells do not form a skew shape") from None


def star(p: Partition, q: Partition) -> SkewShape:
    """Disconnected skew shape with p placed strictly left of and below q."""
    w = part(p, 1)
    outer = tuple(w + x for x in q) + p
    inner = (w,) * len(q)
    return SkewShape(outer, inner)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n))


@cache
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for head in range(min(n, largest), 0, -1):
        for tail in _partitions(n - head, head):
            out.append((head,) + tail)
    return tuple(out)
