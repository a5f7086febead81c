"""Exact symmetric-function arithmetic in the power-sum basis.

Coefficients are `fractions.Fraction` throughout; Schur conversion goes
through symmetric-group characters (border-strip recursion), so every final
Schur coefficient can be asserted integral.  This module is the oracle the
tableau-side expansions are verified against: the only tableau input it takes
is the count of standard tableaux by major index, so it stays independent of
the refined-subset machinery under test.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .shapes import (
    Partition,
    SkewShape,
    enumerate_partitions,
    format_partition,
    size,
    union,
)
from . import tableaux

SchurExpansion = dict[Partition, int]


def z_of(mu: Partition) -> int:
    """The centralizer order prod_i i^{m_i} m_i!."""
    out = 1
    mult: dict[int, int] = {}
    for x in mu:
        mult[x] = mult.get(x, 0) + 1
    for i, m in mult.items():
        fact = 1
        for k in range(2, m + 1):
            fact *= k
        out *= i**m * fact
    return out


def mobius(d: int) -> int:
    """Number-theoretic Moebius function."""
    if d < 1:
        raise ValueError("mobius defined for positive integers")
    nprimes = 0
    x = d
    p = 2
    while p * p <= x:
        if x % p == 0:
            x //= p
            if x % p == 0:
                return 0
            nprimes += 1
        else:
            p += 1
    if x > 1:
        nprimes += 1
    return -1 if nprimes % 2 else 1


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@cache
def mn_character(nu: Partition, rho: Partition) -> int:
    """Irreducible character value chi^nu(rho) by border-strip removal.

    Works on the first-column hook lengths (beta numbers): removing a strip
    of size r is subtracting r from one beta number, with sign given by the
    number of beta numbers jumped over.
    """
    if size(nu) != size(rho):
        raise ValueError("character requires |nu| = |rho|")
    if not nu:
        return 1
    betas = tuple(nu[i] + (len(nu) - 1 - i) for i in range(len(nu)))
    return _mn_betas(betas, rho)


@cache
def _mn_betas(betas: tuple[int, ...], rho: Partition) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    total = 0
    bset = set(betas)
    for idx, b in enumerate(betas):
        if b - r < 0 or b - r in bset:
            continue
        jumped = sum(1 for x in betas if b - r < x < b)
        new = sorted((x for x in betas if x != b), reverse=True)
        new.append(b - r)
        new.sort(reverse=True)
        # strip beta normalization: drop a fully reduced tail (0,1,..) suffix
        new_t = _normalize_betas(tuple(new))
        total += (-1) ** jumped * _mn_betas(new_t, rest)
    return total


def _normalize_betas(betas: tuple[int, ...]) -> tuple[int, ...]:
    """Remove trailing beta numbers coming from zero-length parts."""
    b = list(betas)
    while b and b[-1] == 0:
        b.pop()
        b = [x - 1 for x in b]
    return tuple(b)


class SymFunc:
    """Homogeneous symmetric function as exact coefficients on p_mu."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict[Partition, Fraction]):
        self.degree = int(degree)
        clean: dict[Partition, Fraction] = {}
        for mu, c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            if size(mu) != self.degree:
                raise ValueError(f"index {mu} has size != degree {self.degree}")
            clean[tuple(mu)] = c
        self.coeffs = clean

    @staticmethod
    def one() -> "SymFunc":
        return SymFunc(0, {(): Fraction(1)})

    @staticmethod
    def p(mu: Partition) -> "SymFunc":
        return SymFunc(size(mu), {tuple(mu): Fraction(1)})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymFunc)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.degree != other.degree:
            raise ValueError("can only add equal degrees")
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, Fraction(0)) + c
        return SymFunc(self.degree, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        c = Fraction(c)
        return SymFunc(self.degree, {mu: c * x for mu, x in self.coeffs.items()})

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        out: dict[Partition, Fraction] = {}
        for mu, c in self.coeffs.items():
            for nu, d in other.coeffs.items():
                key = union(mu, nu)
                out[key] = out.get(key, Fraction(0)) + c * d
        return SymFunc(self.degree + other.degree, out)

    def __repr__(self) -> str:
        terms = ", ".join(
            f"p[{format_partition(mu)}]: {c}" for mu, c in sorted(self.coeffs.items(), reverse=True)
        )
        return f"SymFunc(deg={self.degree}, {{{terms}}})"


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    return f * g


@cache
def schur_to_p(nu: Partition) -> SymFunc:
    """s_nu = sum_rho chi^nu(rho) p_rho / z_rho."""
    n = size(nu)
    coeffs = {}
    for rho in enumerate_partitions(n):
        chi = mn_character(nu, rho)
        if chi:
            coeffs[rho] = Fraction(chi, z_of(rho))
    return SymFunc(n, coeffs)


def p_to_schur(f: SymFunc) -> SchurExpansion:
    """Expand in Schur functions; raises if any coefficient is non-integral."""
    out: SchurExpansion = {}
    for nu in enumerate_partitions(f.degree):
        c = Fraction(0)
        for rho, x in f.coeffs.items():
            c += x * mn_character(nu, rho)
        if c:
            if c.denominator != 1:
                raise ValueError(f"non-integral Schur coefficient {c} at {nu}")
            out[nu] = int(c)
    return out


def schur_coefficient(f: SchurExpansion, mu: Partition) -> int:
    return f.get(tuple(mu), 0)


@cache
def h_in_p(k: int) -> SymFunc:
    """Complete homogeneous h_k in the p-basis, via the Newton recursion."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return SymFunc.one()
    acc = SymFunc(k, {})
    for i in range(1, k + 1):
        acc = acc + (SymFunc.p((i,)) * h_in_p(k - i)).scale(Fraction(1, k))
    return acc


def plethysm(g: SymFunc, f: SymFunc) -> SymFunc:
    """g[f], determined by p_r[f] = f with every p_s replaced by p_{rs}."""
    out = SymFunc(g.degree * f.degree, {})
    for mu, c in g.coeffs.items():
        term = SymFunc.one()
        for r in mu:
            scaled = SymFunc(
                r * f.degree,
                {tuple(r * s for s in sigma): x for sigma, x in f.coeffs.items()},
            )
            term = term * scaled
        out = out + term.scale(c)
    return out


def schur_expansion_to_p(f: SchurExpansion, degree: int | None = None) -> SymFunc:
    if degree is None:
        if not f:
            raise ValueError("degree required for the zero expansion")
        degree = size(next(iter(f)))
    acc = SymFunc(degree, {})
    for nu, c in f.items():
        acc = acc + schur_to_p(nu).scale(c)
    return acc


@cache
def lie_character_kw(n: int) -> SchurExpansion:
    """Schur expansion counting standard tableaux with maj = 1 mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    out: SchurExpansion = {}
    for mu in enumerate_partitions(n):
        count = sum(
            1
            for t in tableaux.enumerate_syt(SkewShape(mu))
            if (tableaux.maj(t) - 1) % n == 0
        )
        if count:
            out[mu] = count
    return out


def lie_character_klyachko(n: int) -> SchurExpansion:
    """Schur expansion via Moebius-averaged characters at powers of the long cycle."""
    if n < 1:
        raise ValueError("n must be positive")
    out: SchurExpansion = {}
    for nu in enumerate_partitions(n):
        total = 0
        for d in divisors(n):
            mu = mobius(d)
            if mu:
                cyc = (d,) * (n // d)
                total += mu * mn_character(nu, cyc)
        if total % n != 0:
            raise ValueError(f"non-integer coefficient at {nu}")
        if total:
            out[nu] = total // n
    return out


@cache
def _lie_character_p(i: int) -> SymFunc:
    return schur_expansion_to_p(lie_character_kw(i), i)


def higher_lie_character(lam: Partition) -> SchurExpansion:
    """Schur expansion of the product over i of h_{m_i}[ch L_i]."""
    mult: dict[int, int] = {}
    for x in lam:
        mult[x] = mult.get(x, 0) + 1
    acc = SymFunc.one()
    for i in sorted(mult):
        acc = acc * plethysm(h_in_p(mult[i]), _lie_character_p(i))
    return p_to_schur(acc)


def add_expansions(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    out = dict(f)
    for mu, c in g.items():
        out[mu] = out.get(mu, 0) + c
        if out[mu] == 0:
            del out[mu]
    return out


def format_expansion(f: SchurExpansion) -> str:
    """Deterministic plain-text rendering, e.g. "s(4,2) + 2 s(3,2,1)"."""
    if not f:
        return "0"
    terms = []
    for mu, c in sorted(f.items(), reverse=True):
        s = "1" if mu == () else f"s({format_partition(mu)})"
        if mu == ():
            terms.append(str(c))
        elif c == 1:
            terms.append(s)
        else:
            terms.append(f"{c} {s}")
    return " + ".join(terms)


def expansion_to_json(f: SchurExpansion) -> dict[str, int]:
    return {format_partition(mu): c for mu, c in sorted(f.items(), reverse=True)}
