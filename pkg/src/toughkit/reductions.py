"""Gadget constructions that tie toughness to other graph parameters.

Every builder returns ``(graph, labels)`` where ``labels`` maps a readable
vertex name such as ``"v[2,1]"`` or ``"w_a[3]"`` (1-based, as in the usual
notation for these constructions) to its integer index.  Index layouts are
fixed and documented on each builder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .algorithms import independence_number, is_connected, is_independent, is_regular
from .graph import Graph, GraphError, VertexSet, popcount, vertices_of

LabelMap = dict[str, int]


@dataclass(frozen=True)
class GkParams:
    a: int
    b: int
    k: int

    def __post_init__(self):
        if min(self.a, self.b, self.k) < 1:
            raise ValueError("a, b and k must be positive")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError(f"{self.a}/{self.b} is not in lowest terms")

    @classmethod
    def from_t(cls, t: Fraction, k: int) -> "GkParams":
        t = Fraction(t)
        return cls(t.numerator, t.denominator, k)

    @property
    def t(self) -> Fraction:
        return Fraction(self.a, self.b)


class _Builder:
    def __init__(self):
        self.labels: LabelMap = {}
        self.edges: list[tuple[int, int]] = []

    def vertex(self, name: str) -> int:
        self.labels[name] = len(self.labels)
        return self.labels[name]

    def join(self, xs, ys):
        self.edges.extend((x, y) for x in xs for y in ys if x != y)

    def clique(self, xs):
        xs = list(xs)
        self.edges.extend((xs[i], xs[j]) for i in range(len(xs)) for j in range(i + 1, len(xs)))

    def graph(self) -> Graph:
        return Graph.from_edges(len(self.labels), self.edges)


def build_gk(g: Graph, p: GkParams) -> tuple[Graph, LabelMap]:
    """Clique-and-pendant graph whose toughness compares to a/b as alpha(g) to k.

    Layout: ``v[i,j]`` (i <= n, j <= a) first, then ``u[i,j]`` (j <= b), then
    ``u'[j]`` (j <= (b-1)k), then ``w[j]`` (j <= ak).
    """
    if not is_connected(g):
        raise GraphError("build_gk requires a connected graph")
    n, a, b, k = g.n, p.a, p.b, p.k
    bld = _Builder()
    blocks = [[bld.vertex(f"v[{i + 1},{j + 1}]") for j in range(a)] for i in range(n)]
    pendants = [[bld.vertex(f"u[{i + 1},{j + 1}]") for j in range(b)] for i in range(n)]
    isolated = [bld.vertex(f"u'[{j + 1}]") for j in range((b - 1) * k)]
    hub = [bld.vertex(f"w[{j + 1}]") for j in range(a * k)]
    for i in range(n):
        bld.clique(blocks[i])
        bld.join(pendants[i], blocks[i])
    for i, j in g.edges():
        bld.join(blocks[i], blocks[j])
    bld.clique(hub)
    rest = [x for blk in blocks for x in blk] + [x for pd in pendants for x in pd] + isolated
    bld.join(hub, rest)
    return bld.graph(), bld.labels


class ReferenceCutset(NamedTuple):
    cutset: VertexSet
    predicted_size: int
    predicted_components: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.predicted_size, self.predicted_components)


def gk_reference_cutset(g: Graph, p: GkParams, independent_set: VertexSet) -> ReferenceCutset:
    """The cutset of all blocks outside a maximum independent set, plus the hub."""
    if not is_independent(g, independent_set):
        raise GraphError("independent_set is not independent in g")
    alpha = independence_number(g)
    if popcount(independent_set) != alpha:
        raise GraphError(f"independent_set has size {popcount(independent_set)}, alpha(g) = {alpha}")
    _, labels = build_gk(g, p)
    chosen = set(vertices_of(independent_set))
    cut = 0
    for i in range(g.n):
        if i not in chosen:
            for j in range(p.a):
                cut |= 1 << labels[f"v[{i + 1},{j + 1}]"]
    for j in range(p.a * p.k):
        cut |= 1 << labels[f"w[{j + 1}]"]
    rest = g.n - alpha + p.k
    return ReferenceCutset(cut, p.a * rest, p.b * rest + (alpha - p.k))


def build_bipartite_double(g: Graph) -> tuple[Graph, LabelMap]:
    """Bipartite double with pair edges: ``v[i,1]`` at ``i-1``, ``v[i,2]`` at ``n+i-1``."""
    n = g.n
    bld = _Builder()
    first = [bld.vertex(f"v[{i + 1},1]") for i in range(n)]
    second = [bld.vertex(f"v[{i + 1},2]") for i in range(n)]
    for i in range(n):
        bld.edges.append((first[i], second[i]))
    for i, j in g.edges():
        bld.edges.append((first[i], second[j]))
        bld.edges.append((second[i], first[j]))
    return bld.graph(), bld.labels


def build_hr(r: int) -> tuple[Graph, LabelMap]:
    """The attachment gadget of degree r.

    Odd r: ``w`` at 0 and ``u[1..r+1]`` at 1..r+1; the complement of the pairs
    ``u[i] u[r-i+2]`` (i <= (r-1)/2), ``w u[(r+1)/2]`` and ``w u[(r+3)/2]``.
    Even r: ``w_a, a[1..r-1]`` at 0..r-1 and ``w_b, b[1..r-1]`` at r..2r-1;
    K_{r,r} minus the edge ``w_a w_b``.
    """
    if r < 5:
        raise GraphError("the gadget is defined for r >= 5")
    bld = _Builder()
    if r % 2:
        w = bld.vertex("w")
        us = [None] + [bld.vertex(f"u[{i}]") for i in range(1, r + 2)]
        missing = {frozenset((us[i], us[r - i + 2])) for i in range(1, (r - 1) // 2 + 1)}
        missing |= {frozenset((w, us[(r + 1) // 2])), frozenset((w, us[(r + 3) // 2]))}
        verts = [w] + us[1:]
        for x in range(len(verts)):
            for y in range(x + 1, len(verts)):
                if frozenset((verts[x], verts[y])) not in missing:
                    bld.edges.append((verts[x], verts[y]))
    else:
        side_a = [bld.vertex("w_a")] + [bld.vertex(f"a[{i}]") for i in range(1, r)]
        side_b = [bld.vertex("w_b")] + [bld.vertex(f"b[{i}]") for i in range(1, r)]
        for x in side_a:
            for y in side_b:
                if (x, y) != (side_a[0], side_b[0]):
                    bld.edges.append((x, y))
    return bld.graph(), bld.labels


def hr_reference_cycle(r: int) -> list[int]:
    """The explicit Hamiltonian cycle of the gadget, as indices of :func:`build_hr`."""
    _, lab = build_hr(r)
    if r % 2:
        return [lab["w"]] + [lab[f"u[{i}]"] for i in range(1, r + 2)]
    seq = ["w_a", "b[1]", "a[1]", "w_b"]
    for i in range(2, r):
        seq += [f"a[{i}]", f"b[{i}]"]
    return [lab[name] for name in seq]


def _attach(g: Graph, r: int, block_names, hooks) -> tuple[Graph, LabelMap]:
    hr, hr_labels = build_hr(r)
    bld = _Builder()
    originals = [bld.vertex(f"v[{i + 1}]") for i in range(g.n)]
    bld.edges.extend(g.edges())
    order = sorted(hr_labels, key=hr_labels.get)
    for i in range(g.n):
        offset = len(bld.labels)
        for name in order:
            bld.vertex(block_names(name, i + 1))
        bld.edges.extend((offset + x, offset + y) for x, y in hr.edges())
        for hook in hooks:
            bld.edges.append((originals[i], offset + hr_labels[hook]))
    return bld.graph(), bld.labels


def _indexed(name: str, i: int) -> str:
    # "u[3]" in block 2 -> "u[2,3]"; "w" -> "w[2]"
    if "[" in name:
        base, rest = name.split("[", 1)
        return f"{base}[{i},{rest}"
    return f"{name}[{i}]"


def attach_gadgets_odd(g: Graph, r: int) -> tuple[Graph, LabelMap]:
    """Hang a copy of the odd gadget off every vertex of a connected (r-1)-regular g.

    Layout: ``v[i]`` at ``i-1``; block i occupies ``n + (i-1)(r+2) ..`` with
    ``w[i]`` first and ``u[i,j]`` after it.
    """
    if r < 5 or r % 2 == 0:
        raise GraphError("attach_gadgets_odd needs odd r >= 5")
    if not is_connected(g) or not is_regular(g, r - 1):
        raise GraphError(f"attach_gadgets_odd needs a connected {r - 1}-regular graph")
    return _attach(g, r, _indexed, ["w"])


def attach_gadgets_even(g: Graph, r: int) -> tuple[Graph, LabelMap]:
    """Hang a copy of the even gadget off every vertex of a connected (r-2)-regular g.

    Layout: ``v[i]`` at ``i-1``; block i occupies ``n + (i-1)2r ..`` ordered
    ``w_a[i], a[i,1..], w_b[i], b[i,1..]``; ``v[i]`` meets both ``w_a[i]`` and ``w_b[i]``.
    """
    if r < 6 or r % 2:
        raise GraphError("attach_gadgets_even needs even r >= 6")
    if not is_connected(g) or not is_regular(g, r - 2):
        raise GraphError(f"attach_gadgets_even needs a connected {r - 2}-regular graph")
    return _attach(g, r, _indexed, ["w_a", "w_b"])
