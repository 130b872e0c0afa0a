"""Pure-Python kernels.

The compiled module ``_fast`` implements the same three functions with
identical contracts; ``freeloop._kernels`` picks one at import time.
Letter codes handed to ``reduce_signed`` are nonzero ints: a signed edge is
encoded as ``sign * (index + 1)``.
"""

from __future__ import annotations


def reduce_signed(codes):
    """Cancel adjacent ``c, -c`` pairs until none remain (one stack pass)."""
    stack = []
    for c in codes:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return stack


def union_find_labels(n, src, tgt):
    """Merge ``src[i] - tgt[i]``; label each vertex by its set's smallest member."""
    parent = list(range(n))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for a, b in zip(src, tgt):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    labels = [0] * n
    first = {}
    for i in range(n):
        r = find(i)
        if r not in first:
            first[r] = i
        labels[i] = first[r]
    return labels


def greedy_forest(n, src, tgt, order):
    """Kruskal scan of edge indexes in ``order``; returns the accepted indexes."""
    parent = list(range(n))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    accepted = []
    for idx in order:
        ra, rb = find(src[idx]), find(tgt[idx])
        if ra != rb:
            parent[rb] = ra
            accepted.append(idx)
    return accepted
