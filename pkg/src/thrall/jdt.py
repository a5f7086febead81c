"""Jeu de taquin slides, rectification, derived subtableaux, and switching.

Rectification and switching are order-independent; the orders fixed here
(bottom-most inner corner for slides, largest entry first for switches) exist
only so traces and golden tests are reproducible.
"""

from __future__ import annotations

import random

from .shapes import Cell, SkewShape, part, shape_of_cells
from .tableaux import (
    Tableau,
    is_column_strict,
    restrict,
    standardize,
)


def _slide_target(entries: dict[Cell, int], hole: Cell) -> Cell | None:
    """The neighbor cell that slides into `hole`, or None if the slide stops.

    When both the south and east neighbors are present the smaller entry
    moves (south on ties), which is the unique column-strict choice.
    """
    r, c = hole
    south, east = (r + 1, c), (r, c + 1)
    has_s, has_e = south in entries, east in entries
    if has_s and has_e:
        return south if entries[south] <= entries[east] else east
    if has_s:
        return south
    if has_e:
        return east
    return None


def jdt_slide(t: Tableau, cell: Cell, log: list[str] | None = None) -> Tableau:
    """One elementary slide: `cell` (outside the support) absorbs a neighbor."""
    entries = t.entries()
    if cell in entries:
        raise ValueError(f"cell {cell} already occupied")
    src = _slide_target(entries, cell)
    if src is None:
        raise ValueError(f"no admissible slide into {cell}")
    entries[cell] = entries.pop(src)
    if log is not None:
        log.append(f"cell {cell} <- {src} entry {entries[cell]}")
    return Tableau(entries)


def _inner_corner(shape: SkewShape) -> Cell | None:
    """Bottom-most removable corner of the inner partition."""
    inner = shape.inner
    for i in range(len(inner), 0, -1):
        if inner[i - 1] > part(inner, i + 1):
            return (i, inner[i - 1])
    return None


def rectify(t: Tableau, log: list[str] | None = None) -> Tableau:
    """Slide the tableau to a straight shape (order-independent result)."""
    if not is_column_strict(t):
        raise ValueError("rectify requires a column-strict tableau")
    while True:
        shape = t.shape()
        corner = _inner_corner(shape)
        if corner is None:
            return t
        entries = t.entries()
        hole = corner
        while True:
            src = _slide_target(entries, hole)
            if src is None:
                break
            entries[hole] = entries.pop(src)
            if log is not None:
                log.append(f"cell {hole} <- {src} entry {entries[hole]}")
            hole = src
        t = Tableau(entries)


def rectify_random_order(t: Tableau, rng: random.Random) -> Tableau:
    """Rectify choosing a random inner corner at every stage."""
    if not is_column_strict(t):
        raise ValueError("rectify requires a column-strict tableau")
    while True:
        shape = t.shape()
        inner = shape.inner
        corners = [
            (i, inner[i - 1])
            for i in range(1, len(inner) + 1)
            if inner[i - 1] > part(inner, i + 1)
        ]
        if not corners:
            return t
        entries = t.entries()
        hole = rng.choice(corners)
        while True:
            src = _slide_target(entries, hole)
            if src is None:
                break
            entries[hole] = entries.pop(src)
            hole = src
        t = Tableau(entries)


def restricted_rectify(t: Tableau, lo: int, hi: int) -> Tableau:
    """The straight-shape tableau rect(st(T restricted to [lo, hi]))."""
    return rectify(standardize(restrict(t, lo, hi)))


def _fits(entries: dict[Cell, int], cell: Cell, v: int) -> bool:
    """Would placing v at `cell` keep the (sparse) tableau column-strict?

    Only pairs involving `cell` are checked; the rest of the tableau is
    assumed valid, which is all a single switch can disturb.
    """
    r, c = cell
    for (r2, c2), v2 in entries.items():
        if r2 <= r and c2 <= c:
            if v2 > v or (c2 == c and r2 < r and v2 == v):
                return False
        elif r <= r2 and c <= c2:
            if v > v2 or (c2 == c and r < r2 and v == v2):
                return False
    return True


def _try_switch(
    s: dict[Cell, int], t: dict[Cell, int], cell: Cell, log: list[str] | None
) -> Cell | None:
    """Try to switch the s-cell at `cell` with its south or east t-cell."""
    r, c = cell
    x = s[cell]
    for target in ((r + 1, c), (r, c + 1)):
        if target not in t:
            continue
        y = t.pop(target)
        del s[cell]
        if _fits(s, target, x) and _fits(t, cell, y):
            s[target] = x
            t[cell] = y
            if log is not None:
                log.append(f"cell {target} <- {cell} entry {x}")
            return target
        s[cell] = x
        t[target] = y
    return None


def tableau_switch(
    s: Tableau, t: Tableau, log: list[str] | None = None
) -> tuple[Tableau, Tableau]:
    """Switch the nested pair (s, t), returning (t', s').

    s and t must be column-strict on disjoint cell sets with t weakly
    south-east of s (nested skew shapes).  Switches are applied until none is
    admissible; by the standard theory the result does not depend on the
    order, which here is largest entry first, each moved as far as it goes.
    """
    if s.cells() & t.cells():
        raise ValueError("tableaux must occupy disjoint cells")
    if not (is_column_strict(s) and is_column_strict(t)):
        raise ValueError("switching requires column-strict tableaux")
    # Nested means: the union is a skew shape and no t-cell sits weakly
    # northwest of an s-cell (then inner ∪ s-cells is a Young diagram).
    shape_of_cells(s.cells() | t.cells())
    for (r, c) in t.cells():
        for (r2, c2) in s.cells():
            if r <= r2 and c <= c2:
                raise ValueError("shapes not nested")
    sd, td = s.entries(), t.entries()
    while True:
        moved = False
        for cell in sorted(sd, key=lambda rc: (-sd[rc], -rc[0], -rc[1])):
            cur = cell
            while True:
                nxt = _try_switch(sd, td, cur, log)
                if nxt is None:
                    break
                cur = nxt
                moved = True
        if not moved:
            return Tableau(td), Tableau(sd)
