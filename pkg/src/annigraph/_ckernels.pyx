# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels; drop-in twins of ``annigraph._pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

INDEX = np.int32


cdef inline cnp.ndarray _collect(const unsigned char[::1] flags):
    cdef Py_ssize_t n = flags.shape[0], i, k = 0
    for i in range(n):
        if flags[i]:
            k += 1
    out = np.empty(k, dtype=INDEX)
    cdef int[::1] o = out
    k = 0
    for i in range(n):
        if flags[i]:
            o[k] = <int>i
            k += 1
    return out


def axiom_violation(add_, mul_):
    cdef const int[:, ::1] add = np.ascontiguousarray(add_, dtype=INDEX)
    cdef const int[:, ::1] mul = np.ascontiguousarray(mul_, dtype=INDEX)
    cdef Py_ssize_t n = add.shape[0], a, b, c
    # law-major within each a, matching the numpy backend's reporting order
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if add[add[a, b], c] != add[a, add[b, c]]:
                    return ("add-assoc", a, b, c)
        for b in range(n):
            for c in range(n):
                if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                    return ("mul-assoc", a, b, c)
        for b in range(n):
            for c in range(n):
                if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
                    return ("distributive", a, b, c)
    return None


def sumset(add_, a_, b_):
    cdef const int[:, ::1] add = np.ascontiguousarray(add_, dtype=INDEX)
    cdef const int[::1] a = np.ascontiguousarray(a_, dtype=INDEX)
    cdef const int[::1] b = np.ascontiguousarray(b_, dtype=INDEX)
    cdef unsigned char[::1] seen = np.zeros(add.shape[0], dtype=np.uint8)
    cdef Py_ssize_t i, j
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            seen[add[a[i], b[j]]] = 1
    return _collect(seen)


def prodset(mul_, a_, b_):
    cdef const int[:, ::1] mul = np.ascontiguousarray(mul_, dtype=INDEX)
    cdef const int[::1] a = np.ascontiguousarray(a_, dtype=INDEX)
    cdef const int[::1] b = np.ascontiguousarray(b_, dtype=INDEX)
    cdef unsigned char[::1] seen = np.zeros(mul.shape[0], dtype=np.uint8)
    cdef Py_ssize_t i, j
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            seen[mul[a[i], b[j]]] = 1
    return _collect(seen)


def additive_closure(add_, seeds_, int zero):
    cdef const int[:, ::1] add = np.ascontiguousarray(add_, dtype=INDEX)
    cdef Py_ssize_t n = add.shape[0]
    cdef unsigned char[::1] is_gen = np.zeros(n, dtype=np.uint8)
    cdef const int[::1] seeds = np.ascontiguousarray(seeds_, dtype=INDEX)
    cdef Py_ssize_t i, g, head = 0, tail = 0, ngen = 0
    for i in range(seeds.shape[0]):
        is_gen[seeds[i]] = 1
    gens_arr = _collect(is_gen)
    cdef const int[::1] gens = gens_arr
    ngen = gens.shape[0]
    cdef unsigned char[::1] seen = np.zeros(n, dtype=np.uint8)
    cdef int[::1] queue = np.empty(n, dtype=INDEX)
    cdef int x, y
    seen[zero] = 1
    queue[tail] = zero
    tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        for g in range(ngen):
            y = add[x, gens[g]]
            if not seen[y]:
                seen[y] = 1
                queue[tail] = y
                tail += 1
    return _collect(seen)


def annihilator(mul_, idx_, int zero):
    cdef const int[:, ::1] mul = np.ascontiguousarray(mul_, dtype=INDEX)
    cdef const int[::1] idx = np.ascontiguousarray(idx_, dtype=INDEX)
    cdef Py_ssize_t n = mul.shape[0], r, k
    cdef unsigned char[::1] hit = np.zeros(n, dtype=np.uint8)
    for r in range(n):
        hit[r] = 1
        for k in range(idx.shape[0]):
            if mul[r, idx[k]] != zero:
                hit[r] = 0
                break
    return _collect(hit)


def ai_witness(mul_, int zero, i_idx_, j_idx_, prods_):
    cdef const int[:, ::1] mul = np.ascontiguousarray(mul_, dtype=INDEX)
    cdef const int[::1] ii = np.ascontiguousarray(i_idx_, dtype=INDEX)
    cdef const int[::1] jj = np.ascontiguousarray(j_idx_, dtype=INDEX)
    cdef const int[::1] pp = np.ascontiguousarray(prods_, dtype=INDEX)
    cdef Py_ssize_t n = mul.shape[0], r, k
    cdef bint ok
    for r in range(n):
        ok = True
        for k in range(pp.shape[0]):
            if mul[r, pp[k]] != zero:
                ok = False
                break
        if not ok:
            continue
        ok = False
        for k in range(ii.shape[0]):
            if mul[r, ii[k]] != zero:
                ok = True
                break
        if not ok:
            continue
        ok = False
        for k in range(jj.shape[0]):
            if mul[r, jj[k]] != zero:
                ok = True
                break
        if ok:
            return r
    return -1


def nilpotent_elements(mul_, int zero):
    cdef const int[:, ::1] mul = np.ascontiguousarray(mul_, dtype=INDEX)
    cdef Py_ssize_t n = mul.shape[0], x, k
    cdef unsigned char[::1] nil = np.zeros(n, dtype=np.uint8)
    cdef int p
    for x in range(n):
        p = <int>x
        for k in range(n + 1):
            if p == zero:
                nil[x] = 1
                break
            p = mul[p, x]
    return _collect(nil)


def bfs_distances(adj_):
    cdef const unsigned char[:, ::1] adj = np.ascontiguousarray(adj_, dtype=np.uint8)
    cdef Py_ssize_t v = adj.shape[0], s, u, w, head, tail
    out = np.full((v, v), -1, dtype=INDEX)
    cdef int[:, ::1] dist = out
    cdef int[::1] queue = np.empty(max(v, 1), dtype=INDEX)
    for s in range(v):
        dist[s, s] = 0
        head = 0
        tail = 0
        queue[tail] = <int>s
        tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            for w in range(v):
                if adj[u, w] and dist[s, w] < 0:
                    dist[s, w] = dist[s, u] + 1
                    queue[tail] = <int>w
                    tail += 1
    return out


def girth(adj_):
    cdef const unsigned char[:, ::1] adj = np.ascontiguousarray(adj_, dtype=np.uint8)
    cdef Py_ssize_t v = adj.shape[0], s, u, w, head, tail
    cdef int best = -1, length
    cdef int[::1] depth = np.empty(max(v, 1), dtype=INDEX)
    cdef int[::1] parent = np.empty(max(v, 1), dtype=INDEX)
    cdef int[::1] queue = np.empty(max(v, 1), dtype=INDEX)
    for s in range(v):
        for u in range(v):
            depth[u] = -1
            parent[u] = -1
        depth[s] = 0
        head = 0
        tail = 0
        queue[tail] = <int>s
        tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            if best > 0 and 2 * depth[u] + 1 >= best:
                break
            for w in range(v):
                if not adj[u, w]:
                    continue
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = <int>u
                    queue[tail] = <int>w
                    tail += 1
                elif parent[u] != w:
                    length = depth[u] + depth[w] + 1
                    if best < 0 or length < best:
                        best = length
    return best
