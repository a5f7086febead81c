"""Refined Thrall subsets: the tableau side of the Schur expansions.

For each solved class of index partitions this module produces, per shape mu,
an explicit subset of the standard tableaux of shape mu whose cardinality is
the Schur coefficient of the higher Lie character.  Everything is verified
against the symmetric-function oracle by `verify`.

Solved classes: distinct parts; and more generally any partition in which
every part greater than 2 occurs at most twice (2s and 1s unrestricted),
which covers one-row, one-column, two-column, hook, and two-row shapes.  A
part greater than 2 with multiplicity three or more raises UnsolvedClass.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cache

from .shapes import (
    Partition,
    SkewShape,
    as_partition,
    blocks,
    enumerate_partitions,
    format_partition,
    max_des,
    size,
)
from .tableaux import (
    Tableau,
    block_maj,
    descent_set,
    enumerate_syt,
    maj,
    restrict,
    tableau_sort_key,
    to_rows,
)
from .jdt import restricted_rectify
from .vanleeuwen import spin_of_syt
from . import symfunc


class UnsolvedClass(ValueError):
    """No tableau description is known for this index partition."""


class TwoRowClass(Enum):
    LESS = "LESS"
    EQUAL = "EQUAL"
    GREATER = "GREATER"


def syt_lambda(lam: Partition, mu: Partition) -> list[Tableau]:
    """Standard tableaux of shape mu whose i-th block-major index is
    congruent to 1 modulo the i-th part, for every block."""
    lam, mu = as_partition(lam), as_partition(mu)
    if size(lam) != size(mu):
        raise ValueError("|lam| must equal |mu|")
    return [t for t in enumerate_syt(SkewShape(mu)) if _in_syt_lambda(t, lam)]


def _in_syt_lambda(t: Tableau, lam: Partition) -> bool:
    return all(
        (block_maj(t, lam, i) - 1) % lam[i - 1] == 0 for i in range(1, len(lam) + 1)
    )


def classify_two_row(t: Tableau, n: int) -> TwoRowClass:
    """Compare the first half with the rectified second half in the total
    order (size, then reading word)."""
    if t.n != 2 * n:
        raise ValueError("tableau must have 2n cells")
    first = tableau_sort_key(restrict(t, 1, n) if n else Tableau({}))
    second = tableau_sort_key(
        restricted_rectify(t, n + 1, 2 * n) if n else Tableau({})
    )
    if first < second:
        return TwoRowClass.LESS
    if first > second:
        return TwoRowClass.GREATER
    return TwoRowClass.EQUAL


def _two_row_member(t: Tableau, a: int, reverse_order: bool = False) -> bool:
    """Membership in the two-equal-rows subset for a tableau with 2a cells:
    either the halves are strictly ordered the chosen way, or they are equal
    and the spin parity matches a."""
    cls = classify_two_row(t, a)
    if cls is TwoRowClass.EQUAL:
        return spin_of_syt(t) % 2 == a % 2
    wanted = TwoRowClass.GREATER if reverse_order else TwoRowClass.LESS
    return cls is wanted


def _block_member(t: Tableau, a: int, k: int, reverse_order: bool) -> bool:
    """Membership of a straight standard tableau t (with a*k cells) in the
    rectangle-block subset for the block (a^k)."""
    if a == 1:
        return not descent_set(t)
    if a == 2:
        return descent_set(t) == max_des(t.shape().outer)
    if k == 1:
        return (maj(t) - 1) % a == 0
    if k == 2:
        return _two_row_member(t, a, reverse_order)
    raise UnsolvedClass(
        f"no tableau formula known for a part {a} with multiplicity {k}"
    )


def _rectangle_blocks(lam: Partition) -> list[tuple[int, int, tuple[int, int]]]:
    """(part value, multiplicity, entry interval) per distinct part value,
    large parts first."""
    out = []
    pos = 0
    i = 0
    while i < len(lam):
        a = lam[i]
        k = 1
        while i + k < len(lam) and lam[i + k] == a:
            k += 1
        out.append((a, k, (pos + 1, pos + a * k)))
        pos += a * k
        i += k
    return out


def solved_class(lam: Partition) -> bool:
    """True when a refined Thrall subset construction is implemented."""
    return all(k <= 2 or a <= 2 for a, k, _ in _rectangle_blocks(as_partition(lam)))


def thrall_subset(
    lam: Partition,
    mu: Partition,
    reverse_order: bool = False,
    _force_composite: bool = False,
) -> list[Tableau]:
    """A refined Thrall subset of the standard tableaux of shape mu.

    Dispatch: distinct parts use the block-major congruences alone; otherwise
    the subset is assembled block by block from the rectangle formulas (one
    row, two equal rows, two columns, one column), restricted-rectifying each
    block's entries.  `reverse_order` flips the total order used by the
    two-equal-rows blocks (the counts are order-independent).
    `_force_composite` routes distinct-part shapes through the block
    assembly as well; the two paths agree (asserted in tests).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if size(lam) != size(mu):
        raise ValueError("|lam| must equal |mu|")
    rect_blocks = _rectangle_blocks(lam)
    for a, k, _ in rect_blocks:
        if a > 2 and k > 2:
            raise UnsolvedClass(
                f"no tableau formula known for lambda={format_partition(lam)} "
                f"(part {a} occurs {k} times)"
            )
    candidates = syt_lambda(lam, mu)
    if not _force_composite and all(k == 1 for _, k, _ in rect_blocks):
        return candidates
    out = []
    for t in candidates:
        ok = True
        for a, k, (lo, hi) in rect_blocks:
            if k == 1 and a > 2:
                continue  # implied by the block-major congruence
            derived = restricted_rectify(t, lo, hi)
            if not _block_member(derived, a, k, reverse_order):
                ok = False
                break
        if ok:
            out.append(t)
    return out


def expansion_from_tableaux(lam: Partition) -> symfunc.SchurExpansion:
    """Schur expansion with coefficients the refined-subset cardinalities."""
    lam = as_partition(lam)
    out: symfunc.SchurExpansion = {}
    for mu in enumerate_partitions(size(lam)):
        count = len(thrall_subset(lam, mu))
        if count:
            out[mu] = count
    return out


@dataclass(frozen=True)
class ThrallReport:
    """Per-(lam, mu) comparison of the oracle and the tableau count."""

    lam: Partition
    mu: Partition
    oracle: int
    tableau_count: int
    witnesses: tuple[Tableau, ...]
    matched: bool

    def to_json(self, include_witnesses: bool = True) -> dict:
        out = {
            "lambda": format_partition(self.lam),
            "mu": format_partition(self.mu),
            "oracle": self.oracle,
            "count": self.tableau_count,
            "matched": self.matched,
        }
        if include_witnesses:
            out["witnesses"] = [to_rows(w) for w in self.witnesses]
        return out


def verify(lam: Partition) -> list[ThrallReport]:
    """Compare the tableau-side counts against the oracle for every mu."""
    lam = as_partition(lam)
    oracle = symfunc.higher_lie_character(lam)
    reports = []
    for mu in enumerate_partitions(size(lam)):
        witnesses = tuple(thrall_subset(lam, mu))
        c = symfunc.schur_coefficient(oracle, mu)
        reports.append(
            ThrallReport(lam, mu, c, len(witnesses), witnesses, c == len(witnesses))
        )
    return reports
