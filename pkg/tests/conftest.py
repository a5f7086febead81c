"""Shared enumeration helpers for the test suite."""

from __future__ import annotations

from functools import cache

from thrall.shapes import Partition, enumerate_partitions


@cache
def sub_partitions(mu: Partition) -> tuple[Partition, ...]:
    """All partitions contained in mu (componentwise)."""
    out: set[Partition] = set()

    def gen(i: int, maxpart: int, acc: tuple[int, ...]):
        out.add(acc)
        if i == len(mu):
            return
        for v in range(1, min(mu[i], maxpart) + 1):
            gen(i + 1, v, acc + (v,))

    gen(0, 10**9, ())
    return tuple(sorted(out))


def nested_triples(max_size: int):
    """All (nu, lam, mu) with nu <= lam <= mu and |mu| <= max_size."""
    for m in range(max_size + 1):
        for mu in enumerate_partitions(m):
            for lam in sub_partitions(mu):
                for nu in sub_partitions(lam):
                    yield nu, lam, mu
