"""Labeled domino tilings, the column reading word, spin, and enumeration.

Reading convention: each domino contributes exactly one letter to the column
word — a horizontal domino at its leftmost cell, a vertical domino in its
unique column (scanned bottom to top, columns left to right).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .shapes import (
    Cell,
    Partition,
    as_partition,
    cells as partition_cells,
    contains,
    size,
)
from .tableaux import is_yamanouchi


@dataclass(frozen=True, order=True)
class Domino:
    """Two adjacent cells with a positive label."""

    cells: tuple[Cell, Cell]
    label: int

    def __post_init__(self):
        a, b = sorted(self.cells)
        object.__setattr__(self, "cells", (a, b))
        (r1, c1), (r2, c2) = a, b
        vertical = r2 == r1 + 1 and c2 == c1
        horizontal = r2 == r1 and c2 == c1 + 1
        if not (vertical or horizontal):
            raise ValueError(f"cells {self.cells} are not adjacent")
        if self.label < 1:
            raise ValueError("label must be positive")

    @property
    def is_vertical(self) -> bool:
        return self.cells[0][1] == self.cells[1][1]

    @property
    def is_horizontal(self) -> bool:
        return not self.is_vertical


@dataclass(frozen=True)
class DominoTableau:
    """Dominoes intended to tile outer minus inner (inner a staircase or empty)."""

    outer: Partition
    inner: Partition
    dominoes: tuple[Domino, ...]

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        object.__setattr__(self, "dominoes", tuple(sorted(self.dominoes)))
        if not contains(self.inner, self.outer):
            raise ValueError("inner shape not contained in outer")

    @property
    def staircase_index(self) -> int:
        """k with inner = (k-1, ..., 1); 1 for the empty inner shape."""
        k = len(self.inner) + 1
        if self.inner != tuple(range(k - 1, 0, -1)):
            raise ValueError(f"inner shape {self.inner} is not a staircase")
        return k

    def cell_map(self) -> dict[Cell, Domino]:
        out: dict[Cell, Domino] = {}
        for d in self.dominoes:
            for c in d.cells:
                if c in out:
                    raise ValueError(f"overlapping dominoes at {c}")
                out[c] = d
        return out

    def weight(self) -> tuple[int, ...]:
        if not self.dominoes:
            return ()
        top = max(d.label for d in self.dominoes)
        counts = [0] * top
        for d in self.dominoes:
            counts[d.label - 1] += 1
        while counts and counts[-1] == 0:
            counts.pop()
        return tuple(counts)


def validate(d: DominoTableau) -> bool:
    """Exact tiling of outer/inner plus row-weak and column-strict labels."""
    try:
        cmap = d.cell_map()
    except ValueError:
        return False
    region = set(partition_cells(d.outer)) - set(partition_cells(d.inner))
    if set(cmap) != region:
        return False
    for (r, c), dom in cmap.items():
        right = cmap.get((r, c + 1))
        if right is not None and right is not dom and dom.label > right.label:
            return False
        below = cmap.get((r + 1, c))
        if below is not None and below is not dom and dom.label >= below.label:
            return False
    return True


def column_reading_word(d: DominoTableau) -> tuple[int, ...]:
    """Columns left to right, each bottom to top, one letter per domino."""
    cmap = d.cell_map()
    if not cmap:
        return ()
    word = []
    maxcol = max(c for _, c in cmap)
    maxrow = max(r for r, _ in cmap)
    for c in range(1, maxcol + 1):
        for r in range(maxrow, 0, -1):
            dom = cmap.get((r, c))
            if dom is None:
                continue
            if dom.is_vertical and (r, c) == dom.cells[1]:
                continue  # emit a vertical domino at its lower cell only
            if dom.is_horizontal and (r, c) != dom.cells[0]:
                continue  # emit a horizontal domino at its leftmost cell only
            word.append(dom.label)
    return tuple(word)


def h_count(d: DominoTableau) -> int:
    return sum(1 for dom in d.dominoes if dom.is_horizontal)


def v_count(d: DominoTableau) -> int:
    return sum(1 for dom in d.dominoes if dom.is_vertical)


def spin(d: DominoTableau) -> Fraction:
    return Fraction(v_count(d), 2)


def is_yamanouchi_domino(d: DominoTableau) -> bool:
    return is_yamanouchi(column_reading_word(d))


@cache
def _tilings(outer: Partition, inner: Partition) -> tuple[tuple[tuple[Cell, Cell], ...], ...]:
    """All domino tilings of outer minus inner, as sorted cell-pair tuples.

    Branches at the smallest untiled cell (row-major): vertical first.
    """
    region = sorted(set(partition_cells(outer)) - set(partition_cells(inner)))
    results: list[tuple[tuple[Cell, Cell], ...]] = []

    def fill(free: set[Cell], acc: list[tuple[Cell, Cell]]):
        if not free:
            results.append(tuple(sorted(acc)))
            return
        cell = min(free)
        r, c = cell
        for other in ((r + 1, c), (r, c + 1)):
            if other in free:
                free.discard(cell)
                free.discard(other)
                acc.append((cell, other))
                fill(free, acc)
                acc.pop()
                free.add(cell)
                free.add(other)

    if len(region) % 2 == 0:
        fill(set(region), [])
    return tuple(results)


def _reading_position(pair: tuple[Cell, Cell]) -> tuple[int, int]:
    """Sort key placing dominoes in column reading word order."""
    (r1, c1), (r2, c2) = pair
    if c1 == c2:  # vertical: read at its lower cell
        return (c1, -r2)
    return (c1, -r1)  # horizontal: read at its leftmost cell


def enumerate_ydt(shape: Partition, wt: Partition) -> list[DominoTableau]:
    """All Yamanouchi domino tableaux of the straight shape and weight."""
    shape = as_partition(shape)
    wt = as_partition(wt)
    if size(shape) != 2 * size(wt):
        raise ValueError("shape size must be twice the weight size")
    return _labelled_tableaux(shape, (), wt, yamanouchi=True)


def enumerate_semistandard(shape: Partition, inner: Partition, wt: Partition) -> list[DominoTableau]:
    """All semistandard (not necessarily Yamanouchi) domino tableaux."""
    return _labelled_tableaux(
        as_partition(shape), as_partition(inner), as_partition(wt), yamanouchi=False
    )


def _labelled_tableaux(
    outer: Partition, inner: Partition, wt: Partition, yamanouchi: bool
) -> list[DominoTableau]:
    out: list[DominoTableau] = []
    nlabels = len(wt)
    for tiling in _tilings(outer, inner):
        # assign labels from the end of the column reading word backwards so
        # the Yamanouchi suffix condition can prune as soon as it fails
        order = sorted(tiling, key=_reading_position, reverse=True)
        budget = list(wt)
        suffix = [0] * (nlabels + 1)
        labels: dict[tuple[Cell, Cell], int] = {}
        cmap = {c: pair for pair in tiling for c in pair}

        def ok(pair: tuple[Cell, Cell], v: int) -> bool:
            for (r, c) in pair:
                for nb, strict_down in (
                    ((r, c - 1), None),
                    ((r - 1, c), True),
                    ((r, c + 1), None),
                    ((r + 1, c), False),
                ):
                    other = cmap.get(nb)
                    if other is None or other == pair:
                        continue
                    w = labels.get(other)
                    if w is None:
                        continue
                    if strict_down is True and w >= v:
                        return False
                    if strict_down is False and v >= w:
                        return False
                    if strict_down is None:
                        if nb == (r, c - 1) and w > v:
                            return False
                        if nb == (r, c + 1) and v > w:
                            return False
            return True

        def assign(idx: int):
            if idx == len(order):
                out.append(
                    DominoTableau(
                        outer, inner, tuple(Domino(p, v) for p, v in labels.items())
                    )
                )
                return
            pair = order[idx]
            for v in range(1, nlabels + 1):
                if budget[v - 1] == 0 or not ok(pair, v):
                    continue
                if yamanouchi and v > 1 and suffix[v] + 1 > suffix[v - 1]:
                    continue
                budget[v - 1] -= 1
                suffix[v] += 1
                labels[pair] = v
                assign(idx + 1)
                del labels[pair]
                suffix[v] -= 1
                budget[v - 1] += 1

        assign(0)
    return sorted(out, key=lambda d: d.dominoes)


def cl_coefficient(lam: Partition, mu: Partition) -> int:
    """Count of Yamanouchi domino tableaux on the doubled shape of lam with
    weight mu whose spin is congruent to |lam| mod 2."""
    from .shapes import doubled_square

    lam = as_partition(lam)
    mu = as_partition(mu)
    if size(mu) != 2 * size(lam):
        raise ValueError("|mu| must equal 2|lam|")
    n = size(lam)
    return sum(
        1
        for d in enumerate_ydt(doubled_square(lam), mu)
        if (v_count(d) - 2 * (n % 2)) % 4 == 0
    )


def to_json(d: DominoTableau) -> dict:
    return {
        "outer": list(d.outer),
        "inner": list(d.inner),
        "dominoes": [
            {"cells": [list(c) for c in dom.cells], "label": dom.label}
            for dom in d.dominoes
        ],
    }


def render_ascii(d: DominoTableau) -> str:
    """Plain +--+ grid rendering; staircase cells are marked with dots."""
    inner_cells = set(partition_cells(d.inner))
    cmap = d.cell_map()
    all_cells = inner_cells | set(cmap)
    if not all_cells:
        return "(empty)"
    nrows = max(r for r, _ in all_cells)
    ncols = max(c for _, c in all_cells)
    width, height = 3 * ncols + 1, 2 * nrows + 1
    canvas = [[" "] * width for _ in range(height)]

    def same_domino(a: Cell, b: Cell) -> bool:
        da, db = cmap.get(a), cmap.get(b)
        return da is not None and da is db

    for (r, c) in all_cells:
        top, left = 2 * (r - 1), 3 * (c - 1)
        for (y, x) in ((top, left), (top, left + 3), (top + 2, left), (top + 2, left + 3)):
            canvas[y][x] = "+"
        if not same_domino((r, c), (r - 1, c)):
            canvas[top][left + 1] = canvas[top][left + 2] = "-"
        if not same_domino((r, c), (r + 1, c)):
            canvas[top + 2][left + 1] = canvas[top + 2][left + 2] = "-"
        if not same_domino((r, c), (r, c - 1)):
            canvas[top + 1][left] = "|"
        if not same_domino((r, c), (r, c + 1)):
            canvas[top + 1][left + 3] = "|"
        if (r, c) in inner_cells:
            canvas[top + 1][left + 1] = "."
        else:
            dom = cmap[(r, c)]
            if (r, c) == dom.cells[0]:
                text = str(dom.label)[:2]
                canvas[top + 1][left + 1 : left + 1 + len(text)] = list(text)
    return "\n".join("".join(row).rstrip() for row in canvas).strip("\n")
