"""Elementary graph computations on :class:`~toughkit.graph.Graph`."""

from __future__ import annotations

from collections import deque
from typing import Optional

from .graph import Graph, GraphError, TwoColoring, VertexSet, popcount, vertices_of


def components(g: Graph, removed: VertexSet = 0) -> tuple[int, list[Optional[int]]]:
    """Count components of ``g - removed``.

    Returns ``(count, labels)`` where ``labels[v]`` is the component id of
    ``v`` (ids numbered from 0 in order of smallest vertex) or ``None`` for a
    removed vertex.
    """
    adj = g.adj
    rem = g.full & ~removed
    labels: list[Optional[int]] = [None] * g.n
    count = 0
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = adj[low.bit_length() - 1] & rem & ~comp
            comp |= nb
            frontier |= nb
        rem &= ~comp
        for v in vertices_of(comp):
            labels[v] = count
        count += 1
    return count, labels


def component_sets(g: Graph, removed: VertexSet = 0) -> list[VertexSet]:
    adj = g.adj
    rem = g.full & ~removed
    out = []
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = adj[low.bit_length() - 1] & rem & ~comp
            comp |= nb
            frontier |= nb
        rem &= ~comp
        out.append(comp)
    return out


def count_components(g: Graph, removed: VertexSet = 0) -> int:
    return len(component_sets(g, removed))


def is_connected(g: Graph) -> bool:
    return count_components(g) == 1


# -- vertex connectivity ---------------------------------------------------


def _disjoint_paths(g: Graph, s: int, t: int, cap: int) -> int:
    """Max number of internally vertex-disjoint s-t paths, stopping at ``cap``.

    Unit-capacity flow on the split graph: node ``2v`` is v-in, ``2v+1`` is
    v-out, with arc in->out of capacity 1 for every v other than s and t.
    """
    n = g.n
    # residual[a] maps b -> remaining capacity on arc a->b
    residual: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    big = n
    for v in range(n):
        residual[2 * v][2 * v + 1] = big if v in (s, t) else 1
        residual[2 * v + 1].setdefault(2 * v, 0)
    for u, v in g.edges():
        residual[2 * u + 1][2 * v] = big
        residual[2 * v].setdefault(2 * u + 1, 0)
        residual[2 * v + 1][2 * u] = big
        residual[2 * u].setdefault(2 * v + 1, 0)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {source: -1}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in residual[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            residual[a][b] -= 1
            residual[b][a] += 1
            b = a
        flow += 1
    return flow


def connectivity(g: Graph) -> int:
    """Vertex connectivity via Menger: min over non-adjacent pairs of max flow.

    Follows Even's scheme: only sources ``v_0 .. v_kappa`` need to be tried,
    since a minimum cut misses at least one of them.
    """
    if g.is_complete():
        return g.n - 1
    if not is_connected(g):
        return 0
    best = min(g.degrees())
    i = 0
    while i <= best and i < g.n:
        non_adj = g.full & ~g.adj[i] & ~((1 << (i + 1)) - 1)
        for j in vertices_of(non_adj):
            best = min(best, _disjoint_paths(g, i, j, best))
        i += 1
    return best


def cut_vertices(g: Graph) -> VertexSet:
    """Articulation points of a connected graph (iterative Hopcroft-Tarjan)."""
    if not is_connected(g):
        raise GraphError("cut_vertices requires a connected graph")
    n = g.n
    if n <= 2:
        return 0
    nbrs = [g.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    result = 0
    timer = 0
    disc[0] = low[0] = timer
    root_children = 0
    stack = [(0, -1, iter(nbrs[0]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                timer += 1
                disc[w] = low[w] = timer
                stack.append((w, v, iter(nbrs[w])))
                if v == 0:
                    root_children += 1
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if parent != 0 and low[v] >= disc[parent]:
                result |= 1 << parent
    if root_children >= 2:
        result |= 1
    return result


# -- independence number ---------------------------------------------------


def _greedy_independent(g: Graph, cand: int) -> VertexSet:
    chosen = 0
    while cand:
        v = min(vertices_of(cand), key=lambda u: popcount(g.adj[u] & cand))
        cand &= ~(g.adj[v] | (1 << v))
        chosen |= 1 << v
    return chosen


def _clique_cover_bound(g: Graph, cand: int) -> int:
    # each clique holds at most one vertex of an independent set
    cliques = 0
    while cand:
        low = cand & -cand
        clique_room = g.adj[low.bit_length() - 1] & cand
        cand ^= low
        while clique_room:
            w = clique_room & -clique_room
            cand ^= w
            clique_room &= g.adj[w.bit_length() - 1]
        cliques += 1
    return cliques


def maximum_independent_set(g: Graph) -> VertexSet:
    """A maximum independent set by branch-and-bound seeded with a greedy one."""
    best = _greedy_independent(g, g.full)
    best_size = popcount(best)

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal best, best_size
        if cand == 0:
            if size > best_size:
                best, best_size = chosen, size
            return
        if size + popcount(cand) <= best_size or size + _clique_cover_bound(g, cand) <= best_size:
            return
        v = max(vertices_of(cand), key=lambda u: popcount(g.adj[u] & cand))
        if g.adj[v] & cand == 0:
            # no edges left among the candidates: take them all
            best, best_size = chosen | cand, size + popcount(cand)
            return
        search(cand & ~(g.adj[v] | (1 << v)), chosen | (1 << v), size + 1)
        search(cand & ~(1 << v), chosen, size)

    search(g.full, 0, 0)
    return best


def independence_number(g: Graph) -> int:
    return popcount(maximum_independent_set(g))


def is_independent(g: Graph, mask: VertexSet) -> bool:
    return all(g.adj[v] & mask == 0 for v in vertices_of(mask))


# -- bipartiteness, regularity, hamiltonicity ------------------------------


def is_bipartite(g: Graph) -> Optional[TwoColoring]:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    a = sum(1 << v for v in range(g.n) if color[v] == 0)
    return TwoColoring(a, g.full & ~a)


def is_regular(g: Graph, r: int) -> bool:
    return all(d == r for d in g.degrees())


def find_hamiltonian_cycle(g: Graph) -> Optional[list[int]]:
    """A Hamiltonian cycle as a vertex sequence starting at 0, or ``None``.

    Backtracking from vertex 0.  A branch dies as soon as some unvisited vertex
    has fewer than two possible cycle neighbours left (unvisited vertices plus
    the two path ends); the next vertex is picked among the end's neighbours
    with the fewest remaining options first.
    """
    n = g.n
    if n < 3:
        raise GraphError("a Hamiltonian cycle needs at least 3 vertices")
    adj = g.adj
    if any(popcount(row) < 2 for row in adj) or not is_connected(g):
        return None
    full = g.full
    path = [0]

    def feasible(unvisited: int, end: int) -> bool:
        open_ends = unvisited | (1 << end) | 1
        for u in vertices_of(unvisited):
            if popcount(adj[u] & open_ends) < 2:
                return False
        return True

    def extend(visited: int) -> bool:
        end = path[-1]
        if visited == full:
            return bool(adj[end] & 1)
        unvisited = full & ~visited
        options = vertices_of(adj[end] & unvisited)
        options.sort(key=lambda u: popcount(adj[u] & unvisited))
        for u in options:
            nxt = visited | (1 << u)
            if not feasible(full & ~nxt, u):
                continue
            path.append(u)
            if extend(nxt):
                return True
            path.pop()
        return False

    return list(path) if extend(1) else None


def is_hamiltonian_cycle(g: Graph, cycle: list[int]) -> bool:
    if sorted(cycle) != list(range(g.n)):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))
