"""Brute-force reference computations used as test oracles.

Everything here works directly on the raw operation tables with plain Python
sets or an exhaustive numpy subset scan, and shares no code with the library
kernels it checks.
"""

from __future__ import annotations

import numpy as np


def table(ring):
    return ring.add.tolist(), ring.mul.tolist()


def subset_scan_ideals(ring) -> set[frozenset[int]]:
    """Every subset containing 0 that is closed under + and under R-multiplication."""
    n = ring.order
    others = [x for x in range(n) if x != ring.zero]
    k = len(others)
    codes = np.arange(1 << k, dtype=np.int64)
    member = np.zeros((1 << k, n), dtype=bool)
    member[:, ring.zero] = True
    for bit, x in enumerate(others):
        member[:, x] = (codes >> bit) & 1 == 1
    ok = np.ones(1 << k, dtype=bool)
    add, mul = ring.add, ring.mul
    for a in range(n):
        for b in range(a, n):
            ok &= ~(member[:, a] & member[:, b] & ~member[:, add[a, b]])
        for r in range(n):
            ok &= ~(member[:, a] & ~member[:, mul[r, a]])
    return {frozenset(np.flatnonzero(row).tolist()) for row in member[ok]}


def naive_product(ring, i: frozenset, j: frozenset) -> frozenset:
    add, mul = table(ring)
    current = {ring.zero}
    gens = {mul[a][b] for a in i for b in j}
    while True:
        grown = current | {add[x][g] for x in current for g in gens}
        if grown == current:
            return frozenset(current)
        current = grown


def naive_ann(ring, s) -> frozenset:
    _, mul = table(ring)
    return frozenset(r for r in range(ring.order) if all(mul[r][a] == ring.zero for a in s))


def naive_ai_adjacent(ring, i: frozenset, j: frozenset) -> bool:
    return naive_ann(ring, naive_product(ring, i, j)) != naive_ann(ring, i) | naive_ann(ring, j)


def naive_nilpotents(ring) -> set[int]:
    _, mul = table(ring)
    out = set()
    for x in range(ring.order):
        p = x
        for _ in range(ring.order + 1):
            if p == ring.zero:
                out.add(x)
                break
            p = mul[p][x]
    return out


def num_divisors(n: int) -> int:
    return sum(1 for d in range(1, n + 1) if n % d == 0)
