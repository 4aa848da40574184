# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; 64-bit masks only (see _pykernels for semantics)."""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef void _expand(uint64_t* adj, uint64_t r, uint64_t p, uint64_t x, list out):
    cdef uint64_t px, bits, cand, bit
    cdef int u, v, c, best = -1, pivot = 0
    if p == 0 and x == 0:
        out.append(r)
        return
    px = p | x
    while px:
        u = __builtin_ctzll(px)
        px &= px - 1
        c = __builtin_popcountll(p & adj[u])
        if c > best:
            best = c
            pivot = u
    cand = p & ~adj[pivot]
    while cand:
        v = __builtin_ctzll(cand)
        cand &= cand - 1
        bit = (<uint64_t>1) << v
        _expand(adj, r | bit, p & adj[v], x & adj[v], out)
        p &= ~bit
        x |= bit


def maximal_cliques(adjacency):
    cdef int n = len(adjacency)
    cdef uint64_t adj[64]
    cdef int i
    cdef list out = []
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    for i in range(n):
        adj[i] = adjacency[i]
    if n == 0:
        return out
    _expand(adj, 0, (<uint64_t>-1) >> (64 - n), 0, out)
    return out


def nerve_maximal_families(sets, cap):
    cdef int m = len(sets)
    cdef uint64_t s[64]
    cdef uint64_t fam_stack[4096]
    cdef uint64_t int_stack[4096]
    cdef int last_stack[4096]
    cdef int top = 0, i, j, last
    cdef uint64_t family, inter, joint
    cdef long long visited = 0
    cdef long long ccap = cap
    cdef bint extendable
    cdef list maximal = []
    if m > 64:
        raise ValueError("compiled kernel supports at most 64 sets")
    for i in range(m):
        s[i] = sets[i]
    # Depth-first with at most m pending children per level: bounded by m*m.
    for i in range(m - 1, -1, -1):
        fam_stack[top] = (<uint64_t>1) << i
        int_stack[top] = s[i]
        last_stack[top] = i
        top += 1
    while top > 0:
        top -= 1
        family = fam_stack[top]
        inter = int_stack[top]
        last = last_stack[top]
        visited += 1
        if visited > ccap:
            raise OverflowError(visited)
        extendable = False
        for j in range(m):
            if not ((family >> j) & 1) and (inter & s[j]):
                extendable = True
                break
        if not extendable:
            maximal.append(family)
        for j in range(m - 1, last, -1):
            joint = inter & s[j]
            if joint:
                fam_stack[top] = family | ((<uint64_t>1) << j)
                int_stack[top] = joint
                last_stack[top] = j
                top += 1
    return maximal, visited
