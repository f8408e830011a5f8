"""Compiled bit-parallel kernels.

Graphs are passed as 1-d ``int64`` arrays of adjacency rows, so every kernel
is limited to ``n <= MAX_KERNEL_N`` vertices.  Vertex subsets are ``int64``
masks.  Subsets of a fixed size are walked in increasing mask order with
Gosper's hack.
"""

import numpy as np
from numba import njit
from numba.cpython.unsafe.numbers import trailing_zeros

MAX_KERNEL_N = 62

ZERO, FINITE, INFINITE = 0, 1, 2


@njit(cache=True)
def omega(adj, n, removed):
    """Number of components of G - removed."""
    rem = ((np.int64(1) << n) - 1) & ~removed
    count = 0
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = adj[trailing_zeros(low)] & rem & ~comp
            comp |= nb
            frontier |= nb
        rem &= ~comp
        count += 1
    return count


@njit(cache=True)
def component_masks(adj, n, removed, out):
    """Fill ``out`` with the component masks of G - removed; return their count."""
    rem = ((np.int64(1) << n) - 1) & ~removed
    count = 0
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = adj[trailing_zeros(low)] & rem & ~comp
            comp |= nb
            frontier |= nb
        rem &= ~comp
        out[count] = comp
        count += 1
    return count


@njit(cache=True)
def binomial(n, k):
    if k < 0 or k > n:
        return 0
    r = 1
    for i in range(k):
        r = r * (n - i) // (i + 1)
    return r


@njit(cache=True)
def next_combination(s):
    if s == 0:
        return 0
    c = s & -s
    r = s + c
    return (((r ^ s) >> 2) // c) | r


@njit(cache=True)
def has_buried_vertex(adj, s):
    # a member of s with no neighbour outside s would form its own component
    # if put back, so s is strictly dominated by s minus that vertex
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        if adj[trailing_zeros(low)] & ~s == 0:
            return True
    return False


@njit(cache=True)
def touches_two_components(adj, s, comps, k):
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        row = adj[trailing_zeros(low)]
        touched = 0
        for c in range(k):
            if row & comps[c]:
                touched += 1
                if touched == 2:
                    break
        if touched < 2:
            return False
    return True


@njit(cache=True)
def scan_level(adj, n, size, start, count, best, comps):
    """Evaluate ``count`` subsets of ``size`` vertices starting at mask ``start``.

    ``best`` holds ``[num, den, mask]`` of the smallest ratio seen so far
    (``num == -1`` when empty) and is updated in place.  Ties keep the smaller
    mask.
    """
    s = start
    for _ in range(count):
        if not has_buried_vertex(adj, s):
            k = component_masks(adj, n, s, comps)
            if k >= 2:
                lhs = size * best[1]
                rhs = best[0] * k
                if best[0] < 0 or lhs < rhs or (lhs == rhs and s < best[2]):
                    if touches_two_components(adj, s, comps, k):
                        best[0] = size
                        best[1] = k
                        best[2] = s
        s = next_combination(s)


@njit(cache=True)
def gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def toughness_search(adj, n):
    """Return ``(kind, num, den, tough_set)`` for the exact toughness."""
    if omega(adj, n, 0) >= 2:
        return ZERO, 0, 1, 0
    best = np.array([-1, 1, 0], dtype=np.int64)
    comps = np.zeros(n, dtype=np.int64)
    for size in range(1, n - 1):
        # a size-level cannot beat size / (n - size); strict so ties survive
        if best[0] >= 0 and size * best[1] > best[0] * (n - size):
            break
        start = (np.int64(1) << size) - 1
        scan_level(adj, n, size, start, binomial(n, size), best, comps)
    if best[0] < 0:
        return INFINITE, 0, 1, 0
    g = gcd(best[0], best[1])
    return FINITE, best[0] // g, best[1] // g, best[2]


@njit(cache=True)
def find_witness(adj, n, t_num, t_den):
    """First subset (by size, then mask) leaving more than |S|/t components, or -1."""
    for size in range(0, n - 1):
        if size * t_den >= t_num * (n - size):
            break
        s = (np.int64(1) << size) - 1
        for _ in range(binomial(n, size)):
            if size == 0 or not has_buried_vertex(adj, s):
                k = omega(adj, n, s)
                if k >= 2 and size * t_den < t_num * k:
                    return s
            s = next_combination(s)
    return -1


@njit(cache=True)
def half_tough_spanning(adj, n):
    """Delete edges in lexicographic order while the graph stays 1/2-tough.

    Toughness never increases under edge deletion, so an edge that fails once
    fails forever; one lexicographic pass reaches the same fixpoint as
    restarting the scan after every deletion.
    """
    out = adj.copy()
    for u in range(n):
        for v in range(u + 1, n):
            if (out[u] >> v) & 1:
                out[u] &= ~(np.int64(1) << v)
                out[v] &= ~(np.int64(1) << u)
                if find_witness(out, n, 1, 2) >= 0:
                    out[u] |= np.int64(1) << v
                    out[v] |= np.int64(1) << u
    return out


@njit(cache=True)
def toughness_batch(adjs):
    rows, n = adjs.shape
    out = np.empty((rows, 4), dtype=np.int64)
    for i in range(rows):
        kind, num, den, mask = toughness_search(adjs[i], n)
        out[i, 0] = kind
        out[i, 1] = num
        out[i, 2] = den
        out[i, 3] = mask
    return out


@njit(cache=True)
def half_tough_spanning_batch(adjs):
    rows, n = adjs.shape
    out = np.empty_like(adjs)
    for i in range(rows):
        out[i] = half_tough_spanning(adjs[i], n)
    return out


@njit(cache=True)
def connected_labeled(n):
    """Adjacency rows of every connected labeled graph on n vertices.

    Edge-mask bit ``e`` follows lexicographic pair order (0,1), (0,2), ...,
    and graphs come out in increasing edge-mask order.
    """
    npairs = n * (n - 1) // 2
    us = np.empty(npairs, dtype=np.int64)
    vs = np.empty(npairs, dtype=np.int64)
    e = 0
    for u in range(n):
        for v in range(u + 1, n):
            us[e] = u
            vs[e] = v
            e += 1
    adj = np.zeros(n, dtype=np.int64)
    total = np.int64(1) << npairs
    keep = np.zeros(total, dtype=np.bool_)
    found = 0
    for m in range(total):
        adj[:] = 0
        for e in range(npairs):
            if (m >> e) & 1:
                adj[us[e]] |= np.int64(1) << vs[e]
                adj[vs[e]] |= np.int64(1) << us[e]
        if omega(adj, n, 0) == 1:
            keep[m] = True
            found += 1
    out = np.zeros((found, n), dtype=np.int64)
    row = 0
    for m in range(total):
        if keep[m]:
            for e in range(npairs):
                if (m >> e) & 1:
                    out[row, us[e]] |= np.int64(1) << vs[e]
                    out[row, vs[e]] |= np.int64(1) << us[e]
            row += 1
    return out
