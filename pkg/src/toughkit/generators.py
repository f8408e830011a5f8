"""Graph sources: exhaustive labeled enumeration, random regular sampling, named graphs."""

from __future__ import annotations

import random
from importlib import resources
from itertools import combinations
from typing import Iterator

import numpy as np

from . import _kernels
from .algorithms import is_connected
from .codecs import read_graph6_lines
from .graph import Graph, GraphError

MAX_LABELED_N = 7


def connected_labeled_adjacency(n: int) -> np.ndarray:
    """Adjacency rows (one graph per row) of all labeled connected graphs on n vertices."""
    if not 1 <= n <= MAX_LABELED_N:
        raise GraphError(f"labeled enumeration supports 1 <= n <= {MAX_LABELED_N}, got {n}")
    return _kernels.connected_labeled(n)


def graph_from_row(row) -> Graph:
    return Graph._unchecked(len(row), tuple(int(x) for x in row))


def adjacency_array(graphs: list[Graph]) -> np.ndarray:
    """Stack same-order graphs into an ``int64`` array for the batch kernels."""
    if not graphs:
        return np.zeros((0, 0), dtype=np.int64)
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise GraphError("adjacency_array needs graphs of one order")
    return np.array([g.adj for g in graphs], dtype=np.int64).reshape(len(graphs), n)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple connected graph on ``n`` vertices, each exactly once."""
    for row in connected_labeled_adjacency(n):
        yield graph_from_row(row)


def random_connected_regular_graph(n: int, r: int, seed: int, budget: int = 100_000) -> Graph:
    """Seeded connected r-regular graph from the pairing model with rejection."""
    if r < 0 or r >= n or (n * r) % 2:
        raise GraphError(f"no r-regular graph with n={n}, r={r}")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(r)]
    for _ in range(budget):
        rng.shuffle(points)
        rows = [0] * n
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v or (rows[u] >> v) & 1:
                ok = False
                break
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if not ok:
            continue
        g = Graph._unchecked(n, tuple(rows))
        if is_connected(g):
            return g
    raise GraphError(f"rejection budget of {budget} pairings exhausted for n={n}, r={r}")


def enumerate_connected_regular(n: int, r: int) -> Iterator[Graph]:
    """Labeled connected r-regular graphs in BFS-normal form.

    Vertices are completed in label order and fresh neighbours always take the
    next unused labels, so every connected r-regular graph appears (through
    any of its BFS labelings), usually several times.  No isomorphism
    reduction is attempted.
    """
    if r < 0 or r >= n or (n * r) % 2:
        return
    rows = [0] * n
    deg = [0] * n

    def add(u, v):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1

    def drop(u, v):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        deg[u] -= 1
        deg[v] -= 1

    def grow(touched: int) -> Iterator[Graph]:
        v = next((u for u in range(touched) if deg[u] < r), None)
        if v is None:
            if touched == n:
                yield Graph._unchecked(n, tuple(rows))
            return
        need = r - deg[v]
        pool = [w for w in range(v + 1, touched) if deg[w] < r and not (rows[v] >> w) & 1]
        for fresh in range(min(need, n - touched), -1, -1):
            for old in combinations(pool, need - fresh):
                new = list(range(touched, touched + fresh))
                for w in (*old, *new):
                    add(v, w)
                yield from grow(touched + fresh)
                for w in (*old, *new):
                    drop(v, w)

    if n == 1:
        if r == 0:
            yield Graph(1, (0,))
        return
    yield from grow(1)


def load_corpus(name: str) -> list[Graph]:
    """Read a graph6 corpus shipped in ``toughkit/data``."""
    text = resources.files("toughkit.data").joinpath(name).read_text()
    return list(read_graph6_lines(text.splitlines()))


CUBIC_CORPUS = "cubic_connected_4-14.g6"
QUARTIC_CORPUS = "quartic_connected_5-10.g6"
CONNECTED_CORPUS = "connected_1-7.g6"


# -- named graphs -----------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def octahedron() -> Graph:
    """K_{2,2,2}: the complement of a perfect matching on six vertices."""
    return Graph.from_edges(6, [(u, v) for u, v in combinations(range(6), 2) if v != u + 3])


def _subdivided_k4(offset: int) -> tuple[list[tuple[int, int]], int]:
    # K4 on offset..offset+3 with edge (0,1) subdivided by offset+4
    a, b, c, d, s = (offset + i for i in range(5))
    return [(a, c), (a, d), (b, c), (b, d), (c, d), (a, s), (s, b)], s


def bridged_cubic() -> Graph:
    """Smallest cubic graph with a bridge: two subdivided K4 blocks, 10 vertices."""
    left, x = _subdivided_k4(0)
    right, y = _subdivided_k4(5)
    return Graph.from_edges(10, left + right + [(x, y)])


def three_bridge_cubic() -> Graph:
    """Cubic graph on 16 vertices with a vertex whose removal leaves 3 components."""
    edges = []
    for i in range(3):
        block, s = _subdivided_k4(1 + 5 * i)
        edges += block + [(0, s)]
    return Graph.from_edges(16, edges)


def cut_vertex_quartic(h1: Graph, h2: Graph) -> Graph:
    """Join two connected 4-regular graphs, each minus one edge, through a new vertex.

    The new vertex (index ``h1.n + h2.n``) is a cut vertex whose removal leaves
    two components, so the result is 4-regular and not 1-tough.
    """
    e1 = next(h1.edges())
    e2 = next(h2.edges())
    g = h1.remove_edge(*e1).disjoint_union(h2.remove_edge(*e2))
    hub = g.n
    extra = [(hub, e1[0]), (hub, e1[1]), (hub, h1.n + e2[0]), (hub, h1.n + e2[1])]
    return Graph.from_edges(hub + 1, list(g.edges()) + extra)
