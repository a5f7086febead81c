"""Schur expansions of higher Lie module characters.

Tableau-side counts (standard Young tableaux filtered by block-major
congruences, descent conditions, and a domino spin parity) are computed and
verified against an exact plethysm oracle in the power-sum basis.
"""

from . import cli, domino, jdt, rsk, shapes, subsets, symfunc, tableaux, vanleeuwen

__all__ = [
    "cli",
    "domino",
    "jdt",
    "rsk",
    "shapes",
    "subsets",
    "symfunc",
    "tableaux",
    "vanleeuwen",
]
