"""Pure-Python (numpy) implementations of the table-driven kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature and
results; ``annigraph.kernels`` picks one at import time.  Element sets are passed
and returned as sorted, duplicate-free ``int32`` arrays.
"""

from __future__ import annotations

from collections import deque

import numpy as np

INDEX = np.int32


def _as_index(values) -> np.ndarray:
    return np.unique(np.asarray(values, dtype=INDEX)).astype(INDEX, copy=False)


def axiom_violation(add: np.ndarray, mul: np.ndarray):
    """Return ``(law, a, b, c)`` for the first failing triple, or ``None``.

    Checks additive associativity, multiplicative associativity and
    distributivity over every triple of elements.
    """
    n = add.shape[0]
    for a in range(n):
        # rows indexed by (b, c)
        lhs = add[add[a], :]
        rhs = add[a][add]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return ("add-assoc", a, int(b), int(c))
        lhs = mul[mul[a], :]
        rhs = mul[a][mul]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return ("mul-assoc", a, int(b), int(c))
        lhs = mul[a][add]
        rhs = add[mul[a][:, None], mul[a][None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return ("distributive", a, int(b), int(c))
    return None


def sumset(add: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return np.empty(0, dtype=INDEX)
    return _as_index(add[np.ix_(a, b)].ravel())


def prodset(mul: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return np.empty(0, dtype=INDEX)
    return _as_index(mul[np.ix_(a, b)].ravel())


def additive_closure(add: np.ndarray, seeds: np.ndarray, zero: int) -> np.ndarray:
    """Additive subgroup generated by ``seeds``."""
    gens = _as_index(seeds)
    current = np.array([zero], dtype=INDEX)
    while True:
        grown = _as_index(np.concatenate([current, add[np.ix_(current, gens)].ravel()]))
        if grown.size == current.size:
            return current
        current = grown


def annihilator(mul: np.ndarray, idx: np.ndarray, zero: int) -> np.ndarray:
    if idx.size == 0:
        return np.arange(mul.shape[0], dtype=INDEX)
    hit = np.all(mul[:, idx] == zero, axis=1)
    return np.flatnonzero(hit).astype(INDEX)


def ai_witness(mul: np.ndarray, zero: int, i_idx: np.ndarray, j_idx: np.ndarray,
               prods: np.ndarray) -> int:
    """Smallest ``r`` with ``r*prods == 0``, ``r*I != 0`` and ``r*J != 0``; -1 if none."""
    kills_product = np.all(mul[:, prods] == zero, axis=1)
    moves_i = np.any(mul[:, i_idx] != zero, axis=1)
    moves_j = np.any(mul[:, j_idx] != zero, axis=1)
    hits = np.flatnonzero(kills_product & moves_i & moves_j)
    return int(hits[0]) if hits.size else -1


def nilpotent_elements(mul: np.ndarray, zero: int) -> np.ndarray:
    n = mul.shape[0]
    power = np.arange(n, dtype=INDEX)
    base = np.arange(n, dtype=INDEX)
    nil = power == zero
    for _ in range(n):
        power = mul[power, base]
        nil |= power == zero
    return np.flatnonzero(nil).astype(INDEX)


def bfs_distances(adj: np.ndarray) -> np.ndarray:
    """All-pairs hop distances; -1 marks unreachable pairs."""
    v = adj.shape[0]
    dist = np.full((v, v), -1, dtype=INDEX)
    neighbours = [np.flatnonzero(adj[i]) for i in range(v)]
    for s in range(v):
        dist[s, s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in neighbours[u]:
                if dist[s, w] < 0:
                    dist[s, w] = dist[s, u] + 1
                    queue.append(w)
    return dist


def girth(adj: np.ndarray) -> int:
    """Length of a shortest cycle, or -1 when the graph is acyclic."""
    v = adj.shape[0]
    neighbours = [np.flatnonzero(adj[i]) for i in range(v)]
    best = -1
    for s in range(v):
        depth = [-1] * v
        parent = [-1] * v
        depth[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best > 0 and 2 * depth[u] + 1 >= best:
                break
            for w in neighbours[u]:
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = depth[u] + depth[w] + 1
                    if best < 0 or length < best:
                        best = length
    return best
