"""Tableaux on arbitrary cell sets: validation, statistics, and enumeration.

A tableau is stored sparsely as an immutable map cell -> entry, so
restriction and the intermediate states of sliding/switching (whose supports
need not be skew shapes) are first-class values.  Validation follows the
two-condition column-strictness on any cell set: entries weakly increase
along NW-SE comparable pairs and strictly increase down columns.
"""

from __future__ import annotations

from functools import cache

from .shapes import (
    Cell,
    Partition,
    SkewShape,
    blocks,
    cells as partition_cells,
    shape_of_cells,
    size,
)


class Tableau:
    """Immutable filling of a finite set of cells by positive integers."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries):
        items = {}
        for (r, c), v in dict(entries).items():
            r, c, v = int(r), int(c), int(v)
            if r < 1 or c < 1:
                raise ValueError(f"cell ({r},{c}) out of range")
            if v < 1:
                raise ValueError(f"entry {v} at ({r},{c}) must be positive")
            items[(r, c)] = v
        self._entries = items
        self._hash = hash(frozenset(items.items()))

    @property
    def n(self) -> int:
        return len(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self._entries

    def __getitem__(self, cell: Cell) -> int:
        return self._entries[cell]

    def get(self, cell: Cell, default=None):
        return self._entries.get(cell, default)

    def cells(self) -> set[Cell]:
        return set(self._entries)

    def items(self):
        return self._entries.items()

    def entries(self) -> dict[Cell, int]:
        return dict(self._entries)

    def shape(self) -> SkewShape:
        """The skew shape of the support; raises if it is not skew."""
        return shape_of_cells(self._entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self._entries == other._entries

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Tableau({format_tableau(self)!r})"


EMPTY_TABLEAU = Tableau({})


def from_rows(rows) -> Tableau:
    """Build a tableau from row lists; None marks an absent (inner) cell."""
    entries = {}
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v is not None:
                entries[(i + 1, j + 1)] = v
    return Tableau(entries)


def to_rows(t: Tableau) -> list[list[int | None]]:
    """Row lists padded with None on absent cells, cols 1..rightmost."""
    if not t.n:
        return []
    nrows = max(r for r, _ in t.cells())
    out: list[list[int | None]] = []
    for r in range(1, nrows + 1):
        row_cells = {c: v for (rr, c), v in t.items() if rr == r}
        width = max(row_cells) if row_cells else 0
        out.append([row_cells.get(c) for c in range(1, width + 1)])
    return out


def parse_tableau(text: str) -> Tableau:
    """Parse the text format: rows split by "/", entries by spaces, "." absent.

    Example: ". . 2 4/. . 5/1 3".
    """
    entries = {}
    for i, row in enumerate(text.split("/")):
        toks = row.split()
        for j, tok in enumerate(toks):
            if tok == ".":
                continue
            try:
                entries[(i + 1, j + 1)] = int(tok)
            except ValueError:
                raise ValueError(f"cannot parse tableau entry {tok!r}") from None
    return Tableau(entries)


def format_tableau(t: Tableau) -> str:
    return "/".join(
        " ".join("." if v is None else str(v) for v in row) for row in to_rows(t)
    )


def tableau_to_json(t: Tableau) -> dict:
    """Schema: {outer, inner, rows} with null marking absent cells."""
    shape = t.shape()
    return {
        "outer": list(shape.outer),
        "inner": list(shape.inner),
        "rows": to_rows(t),
    }


def is_column_strict(t: Tableau) -> bool:
    """Weak increase on NW-SE comparable pairs, strict increase down columns."""
    items = list(t.items())
    for idx, ((i, j), v) in enumerate(items):
        for (i2, j2), v2 in items[idx + 1 :]:
            if i <= i2 and j <= j2:
                if v > v2 or (j == j2 and i < i2 and v == v2):
                    return False
            elif i2 <= i and j2 <= j:
                if v2 > v or (j == j2 and v2 == v):
                    return False
    return True


def weight(t: Tableau) -> tuple[int, ...]:
    """Occurrence counts of 1, 2, ..., trailing zeros trimmed."""
    if not t.n:
        return ()
    top = max(t._entries.values())
    counts = [0] * top
    for v in t._entries.values():
        counts[v - 1] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def is_standard(t: Tableau) -> bool:
    """Column-strict with entries exactly 1..n, each once."""
    return sorted(t._entries.values()) == list(range(1, t.n + 1)) and is_column_strict(t)


def as_standard(t: Tableau) -> Tableau:
    """Validate standardness, returning the tableau unchanged."""
    if not is_standard(t):
        raise ValueError(f"tableau is not standard: {format_tableau(t)}")
    return t


def standardize(t: Tableau) -> Tableau:
    """Replace entries by 1..n, breaking ties left to right."""
    if not is_column_strict(t):
        raise ValueError("standardize requires a column-strict tableau")
    order = sorted(t.items(), key=lambda kv: (kv[1], kv[0][1], kv[0][0]))
    return Tableau({cell: k + 1 for k, (cell, _) in enumerate(order)})


def restrict(t: Tableau, lo: int, hi: int) -> Tableau:
    """Subtableau on the cells with entries in the interval [lo, hi]."""
    if not (1 <= lo and hi <= t.n):
        raise ValueError(f"interval [{lo},{hi}] out of range for n={t.n}")
    return Tableau({cell: v for cell, v in t.items() if lo <= v <= hi})


def row_of(t: Tableau, value: int) -> int:
    for (r, _), v in t.items():
        if v == value:
            return r
    raise ValueError(f"{value} not in tableau")


def descent_set(t: Tableau) -> set[int]:
    """Entries i such that i+1 lies in a lower row; requires standardness."""
    rows = {}
    for (r, _), v in t.items():
        rows[v] = r
    return {i for i in range(1, t.n) if rows[i + 1] > rows[i]}


def maj(t: Tableau) -> int:
    return sum(descent_set(t))


def block_descents(t: Tableau, lam: Partition, i: int) -> set[int]:
    """Descents internal to the i-th block of lam, shifted to start at 1."""
    lo, hi = blocks(lam)[i - 1]
    des = descent_set(t)
    return {d - (lo - 1) for d in des if lo <= d and d + 1 <= hi}


def block_maj(t: Tableau, lam: Partition, i: int) -> int:
    return sum(block_descents(t, lam, i))


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Rows read left to right, bottom row first."""
    return tuple(
        v for cell, v in sorted(t.items(), key=lambda kv: (-kv[0][0], kv[0][1]))
    )


def is_yamanouchi(word) -> bool:
    """Every suffix has at least as many i's as (i+1)'s, for all i."""
    counts: dict[int, int] = {}
    for v in reversed(tuple(word)):
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def is_lr_tableau(t: Tableau, nu: Partition) -> bool:
    """Column-strict of weight nu with Yamanouchi reading word."""
    return (
        is_column_strict(t)
        and weight(t) == tuple(nu)
        and is_yamanouchi(reading_word(t))
    )


def canonical_one(lam: Partition) -> Tableau:
    """The tableau of shape lam whose row i is filled with i."""
    return Tableau({(i, j): i for (i, j) in partition_cells(lam)})


def canonical_row_filling(lam: Partition) -> Tableau:
    """The standard tableau of shape lam filled row by row with 1..n."""
    return Tableau(
        {cell: k + 1 for k, cell in enumerate(partition_cells(lam))}
    )


def column_filling(lam: Partition) -> Tableau:
    """The standard tableau of shape lam filled column by column with 1..n."""
    cols = sorted(partition_cells(lam), key=lambda rc: (rc[1], rc[0]))
    return Tableau({cell: k + 1 for k, cell in enumerate(cols)})


def tableau_sort_key(t: Tableau):
    """Total-order key: size first, then the reading word lexicographically."""
    return (t.n, reading_word(t))


def tableau_leq(p: Tableau, q: Tableau) -> bool:
    return tableau_sort_key(p) <= tableau_sort_key(q)


def enumerate_syt(shape: SkewShape) -> list[Tableau]:
    """All standard tableaux of the skew shape, in a fixed deterministic order.

    Generated by removing the largest entry from an outer corner, corners
    scanned top to bottom; the order is by that removal sequence.
    """
    return [Tableau(dict(f)) for f in _syt_fillings(shape.outer, shape.inner)]


@cache
def _syt_fillings(outer: Partition, inner: Partition):
    n = size(outer) - size(inner)
    if n == 0:
        return ((),)
    out = []
    for i, row in enumerate(outer):
        # outer corner of `outer` lying outside `inner`
        if row == (inner[i] if i < len(inner) else 0):
            continue
        if i + 1 < len(outer) and outer[i + 1] == row:
            continue
        smaller = list(outer)
        smaller[i] -= 1
        while smaller and smaller[-1] == 0:
            smaller.pop()
        for f in _syt_fillings(tuple(smaller), inner):
            out.append(f + (((i + 1, row), n),))
    return tuple(out)


def enumerate_ssyt(shape: SkewShape, wt: tuple[int, ...]) -> list[Tableau]:
    """All column-strict fillings of the shape with the exact weight."""
    cs = sorted(shape.cells())
    results: list[Tableau] = []
    remaining = list(wt)

    def place(idx: int, entries: dict[Cell, int]):
        if idx == len(cs):
            results.append(Tableau(dict(entries)))
            return
        r, c = cs[idx]
        left = entries.get((r, c - 1))
        above = entries.get((r - 1, c))
        lo = max(left or 1, (above + 1) if above else 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            entries[(r, c)] = v
            place(idx + 1, entries)
            del entries[(r, c)]
            remaining[v - 1] += 1

    if sum(wt) == shape.size:
        place(0, {})
    # Row-adjacent/column-adjacent constraints suffice on a *skew* support,
    # but restriction shapes can have empty rows; re-validate to be exact.
    return [t for t in results if is_column_strict(t)]


def enumerate_lr(shape: SkewShape, nu: Partition) -> list[Tableau]:
    """All Littlewood-Richardson tableaux of the given shape and weight."""
    return [
        t for t in enumerate_ssyt(shape, tuple(nu)) if is_yamanouchi(reading_word(t))
    ]
