"""The bijection chain from equal-halves standard tableaux to domino tableaux.

Composition: split a tableau into its two halves, switch the skew half down
to a Littlewood-Richardson tableau, transpose row/entry statistics onto a
disconnected double shape, read that off as vertical/horizontal dominoes
around a staircase, then shrink the staircase one step at a time by moving
open chains of dominoes.  The spin of the resulting domino tableau is the
spin statistic on the original tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .shapes import (
    Cell,
    Partition,
    SkewShape,
    as_partition,
    cells as partition_cells,
    part,
    size,
    staircase,
    star,
)
from .tableaux import (
    Tableau,
    as_standard,
    canonical_one,
    canonical_row_filling,
    is_column_strict,
    is_lr_tableau,
    restrict,
    standardize,
    weight,
)
from .jdt import rectify, tableau_switch
from .domino import Domino, DominoTableau, spin as domino_spin, validate as domino_validate


def psi(u: Tableau, s: Tableau, log: list[str] | None = None) -> Tableau:
    """Map a skew standard tableau rectifying to u onto an LR tableau of the
    same shape and weight sh(u), by two tableau switchings."""
    lam = u.shape().outer if u.n else ()
    if rectify(s) != u:
        raise ValueError("s must rectify to u")
    a, b = tableau_switch(canonical_row_filling(lam), s, log)
    if a != u:
        raise AssertionError("switching did not rectify s to u")
    c, d = tableau_switch(canonical_one(lam), b, log)
    if c != canonical_row_filling(lam):
        raise AssertionError("second switching did not produce the row filling")
    if not is_lr_tableau(d, lam):
        raise AssertionError("psi output is not Littlewood-Richardson")
    return d


def omega(l: Tableau) -> Tableau:
    """Transpose the row/entry statistics of an LR tableau onto the double
    shape: entry k in row l of the input becomes entry l in row k of the
    lower-left component; the upper-right component is the canonical filling."""
    lam = weight(l)
    if not is_lr_tableau(l, lam):
        raise ValueError("input is not an LR tableau of weight equal to its own weight")
    counts: dict[tuple[int, int], int] = {}
    for (r, _), v in l.items():
        counts[(r, v)] = counts.get((r, v), 0) + 1
    rows: dict[int, list[int]] = {k: [] for k in range(1, len(lam) + 1)}
    for (r, v), a in counts.items():
        rows[v] += [r] * a
    entries: dict[Cell, int] = {}
    height = len(lam)
    for k in range(1, height + 1):
        vals = sorted(rows[k])
        if len(vals) != lam[k - 1]:
            raise AssertionError("row length mismatch while building the transpose")
        for j, v in enumerate(vals):
            entries[(height + k, j + 1)] = v
    for (i, j) in partition_cells(lam):
        entries[(i, part(lam, 1) + j)] = i
    out = Tableau(entries)
    if not is_column_strict(out):
        raise AssertionError("transposed tableau is not column-strict")
    return out


def split_star_components(m: Tableau) -> tuple[Partition, Tableau, Tableau]:
    """Split a tableau on a double shape into (lam, lower-left, upper-right),
    both components in local coordinates."""
    # the lower-left component consists of the rows starting at column 1
    rows_lower = sorted({r for (r, c) in m.cells() if c == 1})
    lam = tuple(
        max(c for (r, c) in m.cells() if r == row) for row in rows_lower
    )
    lam = as_partition(lam)
    height = len(lam)
    offset = rows_lower[0] - 1 if rows_lower else 0
    lower = {}
    upper = {}
    for (r, c), v in m.items():
        if r > offset:
            lower[(r - offset, c)] = v
        else:
            upper[(r, c - part(lam, 1))] = v
    if offset != height:
        raise ValueError("not a tableau on a double shape")
    return lam, Tableau(lower), Tableau(upper)


def d_of(m: Tableau) -> DominoTableau:
    """Lay out a tableau on the double shape as dominoes around a staircase:
    lower-left cells become vertical dominoes, upper-right cells horizontal
    ones, labels carried along."""
    if not m.n:
        return DominoTableau((), (), ())
    lam, lower, upper = split_star_components(m)
    if weight(lower) == () and weight(upper) == ():
        raise ValueError("malformed double-shape tableau")
    k = part(lam, 1) + len(lam)
    dominoes = []
    for (i, j), a in lower.items():
        dominoes.append(Domino(((k + 2 * i - j - 1, j), (k + 2 * i - j, j)), a))
    for (i, j), a in upper.items():
        dominoes.append(Domino(((i, k + 2 * j - i - 1), (i, k + 2 * j - i)), a))
    outer = _outer_of(dominoes, staircase(k))
    d = DominoTableau(outer, staircase(k), tuple(dominoes))
    if not domino_validate(d):
        raise AssertionError("domino layout is not semistandard")
    return d


def _outer_of(dominoes, inner: Partition) -> Partition:
    cells = {c for dom in dominoes for c in dom.cells}
    cells |= set(partition_cells(inner))
    if not cells:
        return ()
    nrows = max(r for r, _ in cells)
    outer = []
    for r in range(1, nrows + 1):
        row = [c for (rr, c) in cells if rr == r]
        if len(row) != max(row):
            raise ValueError("domino cells do not fill a Young diagram")
        outer.append(max(row))
    return as_partition(outer)


@dataclass(frozen=True)
class Chain:
    """A maximal arrow-linked sequence of dominoes; open chains move."""

    dominoes: tuple[Domino, ...]
    open: bool


@dataclass(frozen=True)
class ArrowDiagram:
    """All arrows of one staircase-shrinking step, plus the chain structure."""

    arrows: tuple[tuple[Cell, Cell], ...]
    chains: tuple[Chain, ...]


def _arrow_targets(outer: Partition, inner: Partition, k: int) -> list[Cell]:
    """Cells C with col-row parity k mod 2 such that region ∪ {C} is skew."""
    region_rows = len(outer)
    targets = []
    # cells inside the region (vacuous union condition)
    for (r, c) in partition_cells(outer):
        if c <= part(inner, r):
            continue
        if (c - r) % 2 == k % 2:
            targets.append((r, c))
    # removable inner corners of the staircase
    for r in range(1, len(inner) + 1):
        c = inner[r - 1]
        if c > part(inner, r + 1) and (c - r) % 2 == k % 2:
            targets.append((r, c))
    # addable outer corners
    for r in range(1, region_rows + 2):
        c = part(outer, r) + 1
        if r > 1 and part(outer, r - 1) < c:
            continue
        if (c - r) % 2 == k % 2:
            targets.append((r, c))
    return targets


def arrow_diagram(d: DominoTableau) -> ArrowDiagram:
    """Arrows and chains of one shrinking step (the input is unchanged)."""
    k = d.staircase_index
    cmap = d.cell_map()
    region = set(cmap) | set(partition_cells(d.inner))

    def in_outer(cell: Cell) -> bool:
        r, c = cell
        return r >= 1 and 1 <= c <= part(d.outer, r)

    arrows: list[tuple[Cell, Cell]] = []
    for tgt in _arrow_targets(d.outer, d.inner, k):
        r, c = tgt
        own = cmap.get(tgt)
        north, east = (r - 1, c), (r, c + 1)
        south, west = (r + 1, c), (r, c - 1)

        def disjoint_domino(cell: Cell) -> Domino | None:
            dom = cmap.get(cell)
            if dom is not None and dom is not own:
                return dom
            return None

        dn, dw = disjoint_domino(north), disjoint_domino(west)
        ds, de = disjoint_domino(south), disjoint_domino(east)
        src: Cell | None = None
        if dn is not None and dw is not None:
            src = north if dn.label >= dw.label else west
        elif dn is not None and not in_outer(west):
            src = north
        elif dw is not None and not in_outer(north):
            src = west
        elif ds is not None and de is not None:
            src = south if ds.label <= de.label else east
        elif ds is not None and not in_outer(east):
            src = south
        elif de is not None and not in_outer(south):
            src = east
        if src is not None:
            arrows.append((src, tgt))

    # group arrows by source domino; each domino may emit at most one arrow
    out_arrow: dict[Domino, tuple[Cell, Cell]] = {}
    for src, tgt in arrows:
        dom = cmap[src]
        if dom in out_arrow:
            raise AssertionError(f"domino {dom} emits two arrows")
        out_arrow[dom] = (src, tgt)
    succ: dict[Domino, Domino | None] = {}
    indeg: dict[Domino, int] = {dom: 0 for dom in d.dominoes}
    for dom, (_, tgt) in out_arrow.items():
        nxt = cmap.get(tgt)
        if nxt is not None and tgt not in region - set(cmap):
            succ[dom] = nxt
            indeg[nxt] += 1
            if indeg[nxt] > 1:
                raise AssertionError(f"domino {nxt} receives two chain arrows")
        else:
            succ[dom] = None  # arrow exits the region

    # chains: walk forward from maximal elements (no incoming arrow)
    chains: list[Chain] = []
    seen: set[Domino] = set()
    for dom in d.dominoes:
        if dom in seen or indeg[dom] > 0:
            continue
        path = []
        cur: Domino | None = dom
        while cur is not None and cur not in seen:
            path.append(cur)
            seen.add(cur)
            cur = succ.get(cur)
        if path:
            head = path[-1]
            is_open = head in out_arrow and succ.get(head) is None
            chains.append(Chain(tuple(reversed(path)), is_open))
    # remaining dominoes sit on cycles: closed chains
    for dom in d.dominoes:
        if dom in seen:
            continue
        cycle = []
        cur = dom
        while cur not in seen:
            seen.add(cur)
            cycle.append(cur)
            cur = succ[cur]
        chains.append(Chain(tuple(reversed(cycle)), False))
    return ArrowDiagram(tuple(arrows), tuple(chains))


def theta(d: DominoTableau) -> DominoTableau:
    """One staircase-shrinking step: move every open chain along its arrows."""
    new, _ = theta_with_diagram(d)
    return new


def theta_with_diagram(d: DominoTableau) -> tuple[DominoTableau, ArrowDiagram]:
    k = d.staircase_index
    if k < 2:
        raise ValueError("staircase index must be at least 2")
    diagram = arrow_diagram(d)
    cmap = d.cell_map()
    moving: set[Domino] = set()
    for chain in diagram.chains:
        if chain.open:
            moving.update(chain.dominoes)
    out_arrow = {cmap[src]: (src, tgt) for src, tgt in diagram.arrows}
    new_dominoes = []
    for dom in d.dominoes:
        if dom in moving:
            src, tgt = out_arrow[dom]
            new_dominoes.append(Domino((src, tgt), dom.label))
        else:
            new_dominoes.append(dom)
    inner = staircase(k - 1)
    outer = _outer_of(new_dominoes, inner)
    new = DominoTableau(outer, inner, tuple(new_dominoes))
    if not domino_validate(new):
        raise AssertionError("shrinking step produced an invalid tableau")
    return new, diagram


def phi0(m: Tableau) -> DominoTableau:
    """Full staircase removal: lay out the double-shape tableau and shrink."""
    steps = phi0_trace(m)
    return steps[-1][0]


def phi0_trace(m: Tableau) -> list[tuple[DominoTableau, ArrowDiagram | None]]:
    """All intermediate tableaux; entry i carries the diagram that produced
    it from entry i-1 (the first entry, the raw layout, carries None)."""
    d = d_of(m)
    out: list[tuple[DominoTableau, ArrowDiagram | None]] = [(d, None)]
    k = d.staircase_index
    for _ in range(k - 1):
        d, diagram = theta_with_diagram(d)
        out.append((d, diagram))
    if m.n:
        lam, lower, _ = split_star_components(m)
        from .shapes import doubled_square

        if d.outer != doubled_square(lam) or d.inner != ():
            raise AssertionError("staircase removal did not reach the doubled shape")
        if d.weight() != weight(m):
            raise AssertionError("staircase removal changed the weight")
    return out


def vartheta(t: Tableau) -> tuple[Tableau, Tableau]:
    """Split an equal-halves tableau into (first half, standardized second half)."""
    as_standard(t)
    if t.n % 2 != 0:
        raise ValueError("tableau must have an even number of cells")
    n = t.n // 2
    u = restrict(t, 1, n) if n else Tableau({})
    s = standardize(restrict(t, n + 1, 2 * n)) if n else Tableau({})
    if rectify(s) != u:
        raise ValueError("tableau halves are not equal after rectification")
    return u, s


def xi(t: Tableau) -> tuple[Tableau, DominoTableau]:
    """The composite bijection: returns (first half, domino tableau); the
    domino weight equals the shape of the input."""
    u, s = vartheta(t)
    if not t.n:
        return u, DominoTableau((), (), ())
    d = phi0(omega(psi(u, s)))
    if d.weight() != t.shape().outer:
        raise AssertionError("domino weight does not match the tableau shape")
    return u, d


def spin_of_syt(t: Tableau) -> Fraction:
    """Spin of an equal-halves standard tableau via the composite bijection."""
    _, d = xi(t)
    return domino_spin(d)


def iota(t: Tableau) -> Tableau:
    """Fixed-point-free involution on two-block tableaux with distinct halves:
    swap the rectified second half with the first via tableau switching."""
    as_standard(t)
    if t.n % 2 != 0:
        raise ValueError("tableau must have an even number of cells")
    n = t.n // 2
    u = restrict(t, 1, n)
    s = standardize(restrict(t, n + 1, 2 * n))
    if rectify(s) == u:
        raise ValueError("halves are equal; the involution is defined on distinct halves")
    s_prime, u_prime = tableau_switch(u, s)
    entries = s_prime.entries()
    for cell, v in u_prime.items():
        entries[cell] = v + n
    out = Tableau(entries)
    return as_standard(out)
