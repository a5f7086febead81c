"""Robinson-Schensted correspondence for permutations.

Permutations are one-line tuples.  Only the permutation case is implemented;
biwords are out of scope.
"""

from __future__ import annotations

from itertools import permutations as _permutations

from .tableaux import Tableau

Permutation = tuple[int, ...]


def as_permutation(word) -> Permutation:
    w = tuple(int(x) for x in word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..n: {w}")
    return w


def parse_word(text: str) -> Permutation:
    """Parse the one-line format "3 1 2"."""
    return as_permutation(text.split())


def format_word(w: Permutation) -> str:
    return " ".join(str(x) for x in w)


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def descent_set(w: Permutation) -> set[int]:
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def maj(w: Permutation) -> int:
    return sum(descent_set(w))


def rsk(w: Permutation) -> tuple[Tableau, Tableau]:
    """Row insertion; returns the insertion and recording tableaux (P, Q)."""
    rows: list[list[int]] = []
    qrows: list[list[int]] = []
    for step, v in enumerate(w, start=1):
        r = 0
        while True:
            if r == len(rows):
                rows.append([v])
                qrows.append([step])
                break
            row = rows[r]
            # bump the leftmost entry strictly larger than v
            pos = None
            for j, u in enumerate(row):
                if u > v:
                    pos = j
                    break
            if pos is None:
                row.append(v)
                qrows[r].append(step)
                break
            row[pos], v = v, row[pos]
            r += 1
    p = Tableau({(i + 1, j + 1): v for i, row in enumerate(rows) for j, v in enumerate(row)})
    q = Tableau({(i + 1, j + 1): v for i, row in enumerate(qrows) for j, v in enumerate(row)})
    return p, q


def subword_standardize(w: Permutation, lo: int, hi: int) -> Permutation:
    """Pattern of the subword of letters with values in [lo, hi]."""
    if not (1 <= lo and hi <= len(w)):
        raise ValueError(f"interval [{lo},{hi}] out of range")
    sub = [v for v in w if lo <= v <= hi]
    return tuple(v - lo + 1 for v in sub)


def all_permutations(n: int):
    """All of S_n in lexicographic one-line order."""
    return (tuple(p) for p in _permutations(range(1, n + 1)))
