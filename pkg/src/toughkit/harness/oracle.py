"""Ground-truth toughness by unpruned enumeration of every vertex subset.

Deliberately independent of the solver: no size ordering, no pruning, and a
union-find over the edge list instead of bit-parallel flooding.  The empty
set is enumerated like any other subset, so disconnected graphs come out as 0
and graphs without any cutset (the complete ones) as infinite.
"""

from fractions import Fraction

import numpy as np
from numba import njit

from ..graph import Graph, GraphError
from ..solver import Kind, ToughnessValue

MAX_ORACLE_N = 16


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def _oracle(adj, n):
    us = []
    vs = []
    for u in range(n):
        for v in range(u + 1, n):
            if (adj[u] >> v) & 1:
                us.append(u)
                vs.append(v)
    parent = np.empty(n, dtype=np.int64)
    best_num, best_den, best_mask = -1, 1, 0
    for s in range(1 << n):
        for v in range(n):
            parent[v] = v
        for e in range(len(us)):
            u, v = us[e], vs[e]
            if (s >> u) & 1 or (s >> v) & 1:
                continue
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[ru] = rv
        size, k = 0, 0
        for v in range(n):
            if (s >> v) & 1:
                size += 1
            elif _find(parent, v) == v:
                k += 1
        if k < 2:
            continue
        if best_num < 0 or size * best_den < best_num * k:
            best_num, best_den, best_mask = size, k, s
    return best_num, best_den, best_mask


@njit(cache=True)
def oracle_batch(adjs):
    rows, n = adjs.shape
    out = np.empty((rows, 3), dtype=np.int64)
    for i in range(rows):
        a, b, m = _oracle(adjs[i], n)
        out[i, 0] = a
        out[i, 1] = b
        out[i, 2] = m
    return out


def value_from_oracle(num: int, den: int, mask: int) -> ToughnessValue:
    if num < 0:
        return ToughnessValue(Kind.INFINITE)
    if num == 0:
        return ToughnessValue(Kind.ZERO)
    return ToughnessValue(Kind.FINITE, Fraction(int(num), int(den)), int(mask))


def oracle_toughness(g: Graph) -> ToughnessValue:
    """Unpruned ground truth for graphs with at most 16 vertices."""
    if g.n > MAX_ORACLE_N:
        raise GraphError(f"oracle_toughness is limited to n <= {MAX_ORACLE_N}")
    return value_from_oracle(*_oracle(np.array(g.adj, dtype=np.int64), g.n))
