"""Exact toughness, t-tough decisions with witnesses, and the 1/2-tough spanning subgraph."""

from __future__ import annotations

import enum
import math
import random
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
from numba import njit

from . import _kernels
from .algorithms import component_sets, count_components, cut_vertices, is_connected
from .graph import Graph, GraphError, VertexSet, popcount, vertex_mask, vertices_of

Rational = Fraction

DEFAULT_EXHAUSTIVE_CAP = 24

_RATIONAL_RE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


class SizeCapError(GraphError):
    """The graph is larger than the exhaustive-search cap."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` exactly; decimals and signs are rejected."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"expected a rational 'a/b', got {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


class Kind(enum.Enum):
    ZERO = "zero"
    FINITE = "finite"
    INFINITE = "infinite"


@dataclass(frozen=True)
class ToughnessValue:
    kind: Kind
    value: Optional[Fraction] = None
    tough_set: Optional[VertexSet] = None

    def at_least(self, t: Fraction) -> bool:
        if self.kind is Kind.INFINITE:
            return True
        if self.kind is Kind.ZERO:
            return t <= 0
        return self.value >= t

    def as_number(self):
        """Value as a Fraction, with ``float('inf')`` standing in for complete graphs."""
        if self.kind is Kind.INFINITE:
            return float("inf")
        if self.kind is Kind.ZERO:
            return Fraction(0)
        return self.value

    def to_json(self) -> dict:
        out = {"kind": self.kind.value}
        if self.kind is Kind.FINITE:
            out["value"] = format_rational(self.value)
            out["tough_set"] = vertices_of(self.tough_set)
        return out

    def __str__(self) -> str:
        if self.kind is Kind.FINITE:
            return f"finite {format_rational(self.value)} tough_set={vertices_of(self.tough_set)}"
        return self.kind.value


@dataclass(frozen=True)
class Witness:
    """A cutset showing a graph is not t-tough."""

    cutset: VertexSet
    component_count: int
    ratio: Fraction

    @classmethod
    def of(cls, g: Graph, cutset: VertexSet) -> "Witness":
        k = count_components(g, cutset)
        return cls(cutset, k, Fraction(popcount(cutset), k))

    def to_json(self) -> dict:
        return {
            "cutset": vertices_of(self.cutset),
            "components": self.component_count,
            "ratio": format_rational(self.ratio),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Witness":
        return cls(vertex_mask(data["cutset"]), int(data["components"]), parse_rational(data["ratio"]))


@dataclass(frozen=True)
class Decision:
    """Outcome of a t-tough query; falsy with a witness when the answer is no."""

    tough: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.tough


def _kernel_adj(g: Graph) -> np.ndarray:
    if g.n > _kernels.MAX_KERNEL_N:
        raise SizeCapError(f"n={g.n} exceeds the {_kernels.MAX_KERNEL_N}-bit kernel width")
    return np.array(g.adj, dtype=np.int64)


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise SizeCapError(
            f"n={g.n} is above the exhaustive cap {cap}; use refute_heuristic "
            "or raise the cap explicitly"
        )


def _value_from_kernel(kind: int, num: int, den: int, mask: int) -> ToughnessValue:
    if kind == _kernels.ZERO:
        return ToughnessValue(Kind.ZERO)
    if kind == _kernels.INFINITE:
        return ToughnessValue(Kind.INFINITE)
    return ToughnessValue(Kind.FINITE, Fraction(int(num), int(den)), int(mask))


def toughness(g: Graph, cap: int = DEFAULT_EXHAUSTIVE_CAP, workers: int = 1) -> ToughnessValue:
    """Exact toughness by pruned subset enumeration in increasing cutset size.

    Among minimizing cutsets the smallest bitmask is reported as the tough
    set.  With ``workers > 1`` every size level is split into contiguous
    ranges scanned in parallel; the result does not depend on the split.
    """
    _check_cap(g, cap)
    adj = _kernel_adj(g)
    if workers <= 1:
        return _value_from_kernel(*_kernels.toughness_search(adj, g.n))
    return _parallel_toughness(adj, g.n, workers)


@njit(cache=True, nogil=True)
def _scan_range(adj, n, size, start, count, best):
    comps = np.zeros(n, dtype=np.int64)
    _kernels.scan_level(adj, n, size, start, count, best, comps)


def _unrank_colex(rank: int, size: int) -> int:
    # rank-th size-subset in increasing-mask (colex) order
    mask = 0
    for i in range(size, 0, -1):
        c = i - 1
        while _comb(c + 1, i) <= rank:
            c += 1
        mask |= 1 << c
        rank -= _comb(c, i)
    return mask


def _comb(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def _better(a, b) -> bool:
    """Whether candidate ``a = [num, den, mask]`` beats ``b`` (empty when num < 0)."""
    if a[0] < 0:
        return False
    if b[0] < 0:
        return True
    lhs, rhs = a[0] * b[1], b[0] * a[1]
    return lhs < rhs or (lhs == rhs and a[2] < b[2])


def _parallel_toughness(adj: np.ndarray, n: int, workers: int) -> ToughnessValue:
    if _kernels.omega(adj, n, 0) >= 2:
        return ToughnessValue(Kind.ZERO)
    best = [-1, 1, 0]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for size in range(1, n - 1):
            if best[0] >= 0 and size * best[1] > best[0] * (n - size):
                break
            total = _comb(n, size)
            step = -(-total // workers)
            jobs = []
            for lo in range(0, total, step):
                local = np.array(best, dtype=np.int64)
                jobs.append((local, pool.submit(
                    _scan_range, adj, n, size, _unrank_colex(lo, size), min(step, total - lo), local
                )))
            for local, fut in jobs:
                fut.result()
                cand = [int(x) for x in local]
                if _better(cand, best):
                    best = cand
    if best[0] < 0:
        return ToughnessValue(Kind.INFINITE)
    return ToughnessValue(Kind.FINITE, Fraction(best[0], best[1]), best[2])


def decide_t_tough(g: Graph, t: Fraction, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> Decision:
    """Exhaustively decide ``tau(g) >= t``; a "no" carries a re-verifiable witness."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    _check_cap(g, cap)
    mask = int(_kernels.find_witness(_kernel_adj(g), g.n, t.numerator, t.denominator))
    if mask < 0:
        return Decision(True)
    return Decision(False, Witness.of(g, mask))


def verify_witness(g: Graph, t: Fraction, w: Witness) -> bool:
    t = Fraction(t)
    if w.cutset & ~g.full:
        return False
    k = count_components(g, w.cutset)
    return (
        k == w.component_count
        and k >= 2
        and w.ratio == Fraction(popcount(w.cutset), k)
        and k * t > popcount(w.cutset)
    )


def refute_heuristic(
    g: Graph, t: Fraction, budget: int = 2000, seed: int = 0
) -> Optional[Witness]:
    """Seeded incomplete search for a cutset leaving more than |S|/t components.

    Starting points are articulation vertices (singly and all together) and
    neighbourhoods of random vertices or vertex pairs; each start is improved
    by single-vertex toggles minimizing ``|S| - t * omega(G - S)``.  Any
    returned witness is verified; ``None`` proves nothing.
    """
    t = Fraction(t)
    rng = random.Random(seed)
    if not is_connected(g):
        return Witness.of(g, 0)
    if g.is_complete():
        return None
    adj = g.adj
    n = g.n
    evaluations = 0

    def score(s: int):
        comps = component_sets(g, s)
        return popcount(s) - t * len(comps), len(comps), comps

    def found(s: int, k: int) -> Optional[Witness]:
        if k >= 2 and k * t > popcount(s):
            w = Witness.of(g, s)
            if verify_witness(g, t, w):
                return w
        return None

    starts: list[int] = []
    arts = vertices_of(cut_vertices(g))
    starts += [1 << v for v in arts]
    if arts:
        starts.append(vertex_mask(arts))

    def random_start() -> int:
        u = rng.randrange(n)
        s = adj[u]
        if rng.random() < 0.5:
            others = vertices_of(g.full & ~adj[u] & ~(1 << u))
            if others:
                s |= adj[rng.choice(others)]
        return s & ~(1 << u) if s != g.full else adj[u]

    while evaluations < budget:
        s = starts.pop(0) if starts else random_start()
        cur, k, comps = score(s)
        evaluations += 1
        w = found(s, k)
        if w:
            return w
        improved = True
        while improved and evaluations < budget:
            improved = False
            # removals, then additions of vertices bordering the removed set
            moves = vertices_of(s)
            border = 0
            for v in vertices_of(s):
                border |= adj[v]
            moves += vertices_of(border & ~s)
            rng.shuffle(moves)
            for v in moves:
                cand = s ^ (1 << v)
                if cand == g.full:
                    continue
                val, ck, ccomps = score(cand)
                evaluations += 1
                if val < cur or (val == cur and ck > k):
                    s, cur, k, comps = cand, val, ck, ccomps
                    w = found(s, k)
                    if w:
                        return w
                    improved = True
                    break
                if evaluations >= budget:
                    break
    return None


def half_tough_spanning_subgraph(g: Graph, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> Graph:
    """Spanning subgraph with toughness exactly 1/2, by greedy edge deletion.

    Edges are tried in lexicographic order; an edge is deleted whenever the
    graph stays 1/2-tough without it.
    """
    if g.n <= 2:
        raise GraphError("precondition violated: g must not be K1 or K2")
    if not is_connected(g):
        raise GraphError("precondition violated: g must be connected")
    _check_cap(g, cap)
    adj = _kernel_adj(g)
    if _kernels.find_witness(adj, g.n, 1, 2) >= 0:
        raise GraphError("precondition violated: g must be 1/2-tough")
    out = _kernels.half_tough_spanning(adj, g.n)
    return Graph(g.n, tuple(int(x) for x in out))


def toughness_denominator_bound_check(g: Graph, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> bool:
    """Whether tau(g) = a/b in lowest terms has 1 <= a, b <= n - 1."""
    if not is_connected(g):
        raise GraphError("toughness_denominator_bound_check needs a connected graph")
    if g.is_complete():
        raise GraphError("toughness_denominator_bound_check needs a noncomplete graph")
    tau = toughness(g, cap)
    a, b = tau.value.numerator, tau.value.denominator
    return 1 <= a <= g.n - 1 and 1 <= b <= g.n - 1
