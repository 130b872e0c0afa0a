# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; contracts identical to ``_pure``."""

from libc.stdlib cimport free, malloc


def reduce_signed(codes):
    cdef Py_ssize_t n = len(codes)
    if n == 0:
        return []
    cdef long long *buf = <long long *> malloc(n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t i
    cdef long long c
    try:
        for i in range(n):
            c = codes[i]
            if top > 0 and buf[top - 1] == -c:
                top -= 1
            else:
                buf[top] = c
                top += 1
        return [buf[i] for i in range(top)]
    finally:
        free(buf)


cdef Py_ssize_t _find(Py_ssize_t *parent, Py_ssize_t x):
    cdef Py_ssize_t root = x
    cdef Py_ssize_t nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def union_find_labels(n, src, tgt):
    cdef Py_ssize_t nn = n
    if nn == 0:
        return []
    cdef Py_ssize_t m = len(src)
    cdef Py_ssize_t *parent = <Py_ssize_t *> malloc(nn * sizeof(Py_ssize_t))
    cdef Py_ssize_t *first = <Py_ssize_t *> malloc(nn * sizeof(Py_ssize_t))
    if parent == NULL or first == NULL:
        free(parent)
        free(first)
        raise MemoryError()
    cdef Py_ssize_t i, ra, rb, r
    try:
        for i in range(nn):
            parent[i] = i
            first[i] = -1
        for i in range(m):
            ra = _find(parent, src[i])
            rb = _find(parent, tgt[i])
            if ra != rb:
                parent[rb] = ra
        labels = [0] * nn
        for i in range(nn):
            r = _find(parent, i)
            if first[r] < 0:
                first[r] = i
            labels[i] = first[r]
        return labels
    finally:
        free(parent)
        free(first)


def greedy_forest(n, src, tgt, order):
    cdef Py_ssize_t nn = n
    cdef Py_ssize_t m = len(order)
    accepted = []
    if nn == 0 or m == 0:
        return accepted
    cdef Py_ssize_t *parent = <Py_ssize_t *> malloc(nn * sizeof(Py_ssize_t))
    if parent == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, idx, ra, rb
    try:
        for i in range(nn):
            parent[i] = i
        for i in range(m):
            idx = order[i]
            ra = _find(parent, src[idx])
            rb = _find(parent, tgt[idx])
            if ra != rb:
                parent[rb] = ra
                accepted.append(idx)
        return accepted
    finally:
        free(parent)
