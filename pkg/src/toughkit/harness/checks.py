"""Property checks over exhaustive and sampled corpora, plus heuristic searches.

Every check builds a :class:`CheckReport`.  Corpus sweeps go through the
batch kernels for speed; each check also has a single-graph ``case``
function built on the public operations, and :func:`replay` runs it on a
reported graph6 string so any failure can be reproduced on its own.
"""

from __future__ import annotations

import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import combinations_with_replacement
from typing import Callable, Optional

import numpy as np

from .. import _kernels
from ..algorithms import (
    component_sets,
    connectivity,
    count_components,
    cut_vertices,
    is_bipartite,
    is_connected,
    is_hamiltonian_cycle,
    is_regular,
    maximum_independent_set,
)
from ..codecs import parse_graph6, read_graph6_lines, to_graph6
from ..generators import (
    CUBIC_CORPUS,
    QUARTIC_CORPUS,
    connected_labeled_adjacency,
    cut_vertex_quartic,
    enumerate_connected_graphs,
    enumerate_connected_regular,
    graph_from_row,
    load_corpus,
)
from ..graph import Graph, popcount
from ..recognizers import (
    CubicClass,
    classify_cubic,
    decide_cubic_t_tough,
    recognize_half_tough_4regular,
)
from ..reductions import (
    GkParams,
    attach_gadgets_even,
    attach_gadgets_odd,
    build_bipartite_double,
    build_gk,
    build_hr,
    gk_reference_cutset,
    hr_reference_cycle,
)
from ..solver import (
    Kind,
    decide_t_tough,
    format_rational,
    half_tough_spanning_subgraph,
    refute_heuristic,
    toughness,
)
from .oracle import MAX_ORACLE_N, oracle_batch, oracle_toughness
from .report import EXHAUSTIVE, HEURISTIC, SAMPLED, CheckReport

HALF = Fraction(1, 2)
TWO_THIRDS = Fraction(2, 3)

# largest order each check accepts; beyond these the corpora or the
# exhaustive solver stop being practical
FEASIBLE_MAX_N = {
    "solver": 7,
    "bg": 6,
    "gk": 5,
    "rational": 7,
    "spanning": 7,
    "cubic_generated": 12,
    "cubic_corpus": MAX_ORACLE_N,
    "quartic": MAX_ORACLE_N,
    "gadget_reverse": 10,
}

FAULTS = ("bg", "gk", "hr", "attach")


@dataclass
class HarnessConfig:
    """Knobs for :func:`run_all`.  ``max_n`` clamps every per-check order."""

    max_n: Optional[int] = None
    solver_max_n: int = 7
    bg_max_n: int = 6
    gk_max_n: int = 4
    rational_max_n: int = 6
    spanning_max_n: int = 7
    cubic_generated_max_n: int = 10
    cubic_corpus_max_n: int = 14
    quartic_max_n: int = 10
    gadget_reverse_max_n: int = 8
    hr_values: tuple = (5, 6, 7, 8)
    gadget_samples: int = 6
    seed: int = 0
    heuristic_budget: int = 2000
    cubic_corpus: Optional[str] = None
    quartic_corpus: Optional[str] = None
    workers: int = 1
    fault: Optional[str] = None
    checks: Optional[tuple] = field(default=None)

    def __post_init__(self):
        for key, bound in FEASIBLE_MAX_N.items():
            value = getattr(self, f"{key}_max_n")
            if value > bound:
                raise ValueError(f"{key}_max_n={value} is above the feasible bound {bound}")
        if any(r < 5 or r > 10 for r in self.hr_values):
            raise ValueError("hr_values must lie in 5..10")
        if self.fault is not None and self.fault not in FAULTS:
            raise ValueError(f"unknown fault {self.fault!r}; expected one of {FAULTS}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    def limit(self, key: str) -> int:
        value = getattr(self, f"{key}_max_n")
        return value if self.max_n is None else min(value, self.max_n)

    def fits(self, n: int) -> bool:
        return self.max_n is None or n <= self.max_n


# -- builders, with an optional corrupted variant for fault injection -------


def _drop_first_edge(builder: Callable) -> Callable:
    def corrupted(*args):
        g, labels = builder(*args)
        first = next(iter(g.edges()), None)
        return (g.remove_edge(*first) if first else g), labels

    return corrupted


_BUILDERS = {
    "bg": build_bipartite_double,
    "gk": build_gk,
    "hr": build_hr,
    "attach-odd": attach_gadgets_odd,
    "attach-even": attach_gadgets_even,
}


def builder(name: str, fault: Optional[str]) -> Callable:
    fn = _BUILDERS[name]
    if fault is not None and name.split("-")[0] == fault:
        return _drop_first_edge(fn)
    return fn


# -- parallel plumbing --------------------------------------------------------


def _chunked(fn: Callable, rows: np.ndarray, workers: int) -> list:
    """Apply ``fn(offset, rows)`` to contiguous chunks and concatenate in order."""
    if workers <= 1 or len(rows) < 4 * workers:
        return fn(0, rows)
    step = -(-len(rows) // (4 * workers))
    offsets = list(range(0, len(rows), step))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(fn, offsets, [rows[o:o + step] for o in offsets])
        return [item for part in parts for item in part]


def _describe_row(row) -> str:
    kind, num, den, mask = (int(x) for x in row)
    if kind == _kernels.ZERO:
        return "zero"
    if kind == _kernels.INFINITE:
        return "infinite"
    return f"{num}/{den} tough_set_mask={mask}"


def _row_value(row):
    kind, num, den, _ = (int(x) for x in row)
    if kind == _kernels.INFINITE:
        return float("inf")
    if kind == _kernels.ZERO:
        return Fraction(0)
    return Fraction(num, den)


def _show(q) -> str:
    return format_rational(q) if isinstance(q, Fraction) else str(q)


# -- solver against oracle ----------------------------------------------------


def _kernel_rows(offset: int, rows: np.ndarray) -> list:
    return [_kernels.toughness_batch(rows)]


def _oracle_rows(offset: int, rows: np.ndarray) -> list:
    return [oracle_batch(rows)]


def _disagreements(mine: np.ndarray, ref: np.ndarray) -> np.ndarray:
    ref_kind = np.where(ref[:, 0] < 0, _kernels.INFINITE,
                        np.where(ref[:, 0] == 0, _kernels.ZERO, _kernels.FINITE))
    same = mine[:, 0] == ref_kind
    finite = ref_kind == _kernels.FINITE
    same &= ~finite | ((mine[:, 1] * ref[:, 1] == mine[:, 2] * ref[:, 0]) & (mine[:, 3] == ref[:, 2]))
    return np.flatnonzero(~same)


def case_solver_oracle(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    mine, ref = toughness(g), oracle_toughness(g)
    return None if mine == ref else f"solver {mine}, oracle {ref}"


def check_solver_oracle(cfg: HarnessConfig) -> CheckReport:
    rep = CheckReport("solver-oracle", notes="toughness() against the unpruned oracle, labeled connected graphs")
    solver_time = oracle_time = 0.0
    for n in range(1, cfg.limit("solver") + 1):
        rows = connected_labeled_adjacency(n)
        rep.corpus_size += len(rows)
        t0 = time.perf_counter()
        mine = np.concatenate(_chunked(_kernel_rows, rows, cfg.workers))
        t1 = time.perf_counter()
        ref = np.concatenate(_chunked(_oracle_rows, rows, cfg.workers))
        t2 = time.perf_counter()
        solver_time += t1 - t0
        oracle_time += t2 - t1
        for i in _disagreements(mine, ref):
            rep.fail(to_graph6(graph_from_row(rows[i])),
                     f"solver {_describe_row(mine[i])}, oracle {tuple(int(x) for x in ref[i])}")
    rep.stats = {"solver_seconds": round(solver_time, 3), "oracle_seconds": round(oracle_time, 3)}
    return rep


# -- bipartite double ---------------------------------------------------------


def _bg_expected(tg) -> Fraction:
    return Fraction(1) if tg == float("inf") else min(2 * tg, Fraction(1))


def _bg_identity_chunk(offset: int, rows: np.ndarray, fault=None) -> list:
    build = builder("bg", fault)
    n = rows.shape[1]
    doubles = np.array([build(graph_from_row(r))[0].adj for r in rows], dtype=np.int64).reshape(len(rows), 2 * n)
    tg = _kernels.toughness_batch(rows)
    tb = _kernels.toughness_batch(doubles)
    out = []
    for i in range(len(rows)):
        expected, actual = _bg_expected(_row_value(tg[i])), _row_value(tb[i])
        if actual != expected:
            out.append((offset + i, f"tau(B(g)) = {_show(actual)}, expected {_show(expected)}"))
    return out


def case_bg_identity(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    b, _ = builder("bg", cfg.fault)(g)
    expected, actual = _bg_expected(toughness(g).as_number()), toughness(b).as_number()
    return None if actual == expected else f"tau(B(g)) = {_show(actual)}, expected {_show(expected)}"


def check_bg_identity(cfg: HarnessConfig) -> CheckReport:
    rep = CheckReport("bg-identity", notes="tau(B(g)) = min(2 tau(g), 1), labeled connected graphs from n = 2")
    chunk = partial(_bg_identity_chunk, fault=cfg.fault)
    for n in range(2, cfg.limit("bg") + 1):
        rows = connected_labeled_adjacency(n)
        rep.corpus_size += len(rows)
        for i, detail in _chunked(chunk, rows, cfg.workers):
            rep.fail(to_graph6(graph_from_row(rows[i])), detail)
    return rep


def _bg_connectivity_chunk(offset: int, rows: np.ndarray, fault=None) -> list:
    build = builder("bg", fault)
    out = []
    for i, row in enumerate(rows):
        g = graph_from_row(row)
        kg, kb = connectivity(g), connectivity(build(g)[0])
        if kb < kg:
            out.append((offset + i, f"kappa(B(g)) = {kb} < kappa(g) = {kg}"))
    return out


def case_bg_connectivity(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    found = _bg_connectivity_chunk(0, np.array([g.adj], dtype=np.int64), cfg.fault)
    return found[0][1] if found else None


def check_bg_connectivity(cfg: HarnessConfig) -> CheckReport:
    rep = CheckReport("bg-connectivity", notes="kappa(B(g)) >= kappa(g), labeled connected graphs from n = 2")
    chunk = partial(_bg_connectivity_chunk, fault=cfg.fault)
    for n in range(2, cfg.limit("bg") + 1):
        rows = connected_labeled_adjacency(n)
        rep.corpus_size += len(rows)
        for i, detail in _chunked(chunk, rows, cfg.workers):
            rep.fail(to_graph6(graph_from_row(rows[i])), detail)
    return rep


# -- clique-and-pendant gadget ------------------------------------------------

GK_PARAMS = [(a, b, k) for a, b in ((1, 1), (1, 2)) for k in (1, 2, 3)]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def case_gk_trichotomy(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    build = builder("gk", cfg.fault)
    independent = maximum_independent_set(g)
    alpha = popcount(independent)
    problems = []
    for a, b, k in GK_PARAMS:
        p = GkParams(a, b, k)
        gk, _ = build(g, p)
        tau = toughness(gk).as_number()
        got = 1 if tau == float("inf") else _sign(tau - p.t)
        if got != _sign(k - alpha):
            problems.append(f"a={a} b={b} k={k}: tau(G_k) = {_show(tau)}, alpha = {alpha}")
        ref = gk_reference_cutset(g, p, independent)
        size, comps = popcount(ref.cutset), count_components(gk, ref.cutset)
        if (size, comps) != (ref.predicted_size, ref.predicted_components):
            problems.append(
                f"a={a} b={b} k={k}: reference cutset has |S|={size}, omega={comps}; "
                f"predicted {ref.predicted_size}, {ref.predicted_components}"
            )
    return "; ".join(problems) or None


def check_gk_trichotomy(cfg: HarnessConfig) -> CheckReport:
    rep = CheckReport("gk-trichotomy",
                      notes="sign(tau(G_k) - a/b) = sign(k - alpha(g)) and reference cutset counts, from n = 2")
    for n in range(2, cfg.limit("gk") + 1):
        for g in enumerate_connected_graphs(n):
            rep.corpus_size += len(GK_PARAMS)
            detail = case_gk_trichotomy(g, cfg)
            if detail:
                rep.fail(to_graph6(g), detail)
    return rep


# -- attachment gadget --------------------------------------------------------


def hr_order(r: int) -> int:
    return r + 2 if r % 2 else 2 * r


def case_hr(h: Graph, r: int) -> Optional[str]:
    problems = []
    low = [v for v, d in enumerate(h.degrees()) if d == r - 1]
    hooks = 1 if r % 2 else 2
    if h.n != hr_order(r) or len(low) != hooks or any(d not in (r - 1, r) for d in h.degrees()):
        problems.append(f"degree profile {sorted(h.degrees())}")
    coloring = is_bipartite(h)
    if r % 2 == 0:
        if coloring is None or popcount(coloring.class_a) != r:
            problems.append("even gadget should be bipartite with classes of size r")
    elif coloring is not None:
        problems.append("odd gadget should not be bipartite")
    if not is_hamiltonian_cycle(h, hr_reference_cycle(r)):
        problems.append("reference Hamiltonian cycle does not validate")
    d = decide_t_tough(h, 1)
    if not d:
        problems.append(f"not 1-tough: cutset {d.witness.to_json()}")
    return "; ".join(problems) or None


def check_hr(cfg: HarnessConfig) -> CheckReport:
    rep = CheckReport("hr", notes="degree profile, bipartiteness by parity, explicit cycle, tau >= 1")
    build = builder("hr", cfg.fault)
    for r in cfg.hr_values:
        if not cfg.fits(hr_order(r)):
            continue
        rep.corpus_size += 1
        h, _ = build(r)
        detail = case_hr(h, r)
        if detail:
            rep.fail(to_graph6(h), f"r={r}: {detail}")
    return rep


def _small_quartics(cfg: HarnessConfig, max_n: int) -> list[Graph]:
    return [g for g in _quartic_corpus(cfg) if g.n <= max_n]


def gadget_forward_instances(cfg: HarnessConfig, r: int) -> list[Graph]:
    """Seeded sample of non-1-tough connected 4-regular graphs for gadget degree r.

    Two small connected 4-regular graphs, each missing one edge, are joined
    through a new cut vertex; the smallest such instances have 11 vertices.
    """
    pool = _small_quartics(cfg, 7)
    pairs = [
        p for p in combinations_with_replacement(range(len(pool)), 2)
        if cfg.fits(pool[p[0]].n + pool[p[1]].n + 1)
    ]
    rng = random.Random(cfg.seed * 1000 + r)
    chosen = rng.sample(pairs, min(cfg.gadget_samples, len(pairs)))
    return [cut_vertex_quartic(pool[i], pool[j]) for i, j in sorted(chosen)]


def case_gadget_forward(g: Graph, r: int, cfg: HarnessConfig) -> Optional[str]:
    d = decide_t_tough(g, 1)
    if d:
        return "instance is 1-tough; forward direction needs tau(g) < 1"
    s = d.witness.cutset
    attach = builder("attach-odd" if r % 2 else "attach-even", cfg.fault)
    big, _ = attach(g, r)
    before, after = count_components(g, s), count_components(big, s)
    size = popcount(s)
    if after != before + size or not after > 2 * size:
        return f"r={r}: cutset size {size}, omega(G-S) = {before}, omega(G'-S) = {after}"
    return None


def check_gadget_forward(cfg: HarnessConfig) -> CheckReport:
    rep = CheckReport("gadget-forward", mode=SAMPLED, seed=cfg.seed,
                      notes="non-1-tough g: omega(G'-S) = omega(G-S) + |S| > 2|S| on the g-side witness")
    for r in (5, 6):
        instances = gadget_forward_instances(cfg, r)
        rep.stats[f"instances_r{r}"] = len(instances)
        for g in instances:
            rep.corpus_size += 1
            detail = case_gadget_forward(g, r, cfg)
            if detail:
                rep.fail(to_graph6(g), detail)
    rep.count = rep.corpus_size
    return rep


def check_gadget_reverse(cfg: HarnessConfig) -> CheckReport:
    rep = CheckReport("gadget-reverse", mode=HEURISTIC, seed=cfg.seed,
                      notes="1-tough g: heuristic search for a cutset showing G' is not 1/2-tough; "
                            "finding none proves nothing")
    for g in _small_quartics(cfg, cfg.limit("gadget_reverse")):
        if not decide_t_tough(g, 1):
            continue
        for r in (5, 6):
            attach = builder("attach-odd" if r % 2 else "attach-even", cfg.fault)
            big, _ = attach(g, r)
            rep.corpus_size += 1
            w = refute_heuristic(big, HALF, budget=cfg.heuristic_budget, seed=cfg.seed)
            if w is not None:
                rep.fail(to_graph6(g), f"r={r}: G' is not 1/2-tough, witness {w.to_json()}")
    rep.count = rep.corpus_size
    return rep


def check_gadget_lemmas(cfg: HarnessConfig) -> list[CheckReport]:
    return [check_gadget_forward(cfg), check_gadget_reverse(cfg)]


# -- possible values and gaps -------------------------------------------------


def case_rational_bounds(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    tau = toughness(g)
    if tau.kind is not Kind.FINITE:
        return None
    a, b = tau.value.numerator, tau.value.denominator
    if not (1 <= a <= g.n - 1 and 1 <= b <= g.n - 1):
        return f"tau = {a}/{b} outside 1 <= a, b <= {g.n - 1}"
    return None


def check_rational_bounds(cfg: HarnessConfig) -> CheckReport:
    rep = CheckReport("rational-bounds", notes="tau = a/b with a, b <= n-1; distinct values differ by more than 1/n^2")
    gaps = {}
    for n in range(2, cfg.limit("rational") + 1):
        rows = connected_labeled_adjacency(n)
        res = _kernels.toughness_batch(rows)
        finite = np.flatnonzero(res[:, 0] == _kernels.FINITE)
        rep.corpus_size += len(finite)
        bad = finite[(res[finite, 1] > n - 1) | (res[finite, 2] > n - 1) | (res[finite, 1] < 1)]
        for i in bad:
            rep.fail(to_graph6(graph_from_row(rows[i])), f"tau = {_describe_row(res[i])}, n = {n}")
        first = {}
        for i in finite:
            first.setdefault(Fraction(int(res[i, 1]), int(res[i, 2])), int(i))
        values = sorted(first)
        bound = Fraction(1, n * n)
        smallest = None
        for lo, hi in zip(values, values[1:]):
            gap = hi - lo
            smallest = gap if smallest is None else min(smallest, gap)
            if gap <= bound:
                rep.fail(to_graph6(graph_from_row(rows[first[lo]])),
                         f"n={n}: values {_show(lo)} and {_show(hi)} differ by {_show(gap)} <= 1/{n * n}; "
                         f"other graph {to_graph6(graph_from_row(rows[first[hi]]))}")
        if smallest is not None:
            gaps[str(n)] = {"distinct_values": len(values), "min_gap": _show(smallest)}
    rep.stats["gaps"] = gaps
    return rep


# -- cubic and 4-regular recognition ------------------------------------------


def _read_corpus(path: Optional[str], default: str) -> list[Graph]:
    if path is None:
        return load_corpus(default)
    if path == "-":
        return list(read_graph6_lines(sys.stdin))
    with open(path, encoding="ascii") as fh:
        return list(read_graph6_lines(fh))


def _quartic_corpus(cfg: HarnessConfig) -> list[Graph]:
    return _read_corpus(cfg.quartic_corpus, QUARTIC_CORPUS)


_CLASS_VALUE = {CubicClass.TAU_ONE_THIRD: Fraction(1, 3), CubicClass.TAU_ONE_HALF: HALF}


def case_cubic(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    ref = oracle_toughness(g)
    got = classify_cubic(g)
    problems = []
    if got.kind is CubicClass.COMPLETE_K4:
        agree = ref.kind is Kind.INFINITE
    elif got.kind is CubicClass.TAU_AT_LEAST_TWO_THIRDS:
        agree = ref.at_least(TWO_THIRDS)
    else:
        agree = ref.kind is Kind.FINITE and ref.value == _CLASS_VALUE[got.kind]
        want = 3 if got.kind is CubicClass.TAU_ONE_THIRD else 2
        if count_components(g, 1 << got.cut_vertex) != want:
            problems.append(f"cut vertex {got.cut_vertex} does not leave {want} components")
    if not agree:
        problems.append(f"classified {got.kind.value}, oracle {ref}")
    cuts = cut_vertices(g)
    if bool(cuts) != (not ref.at_least(TWO_THIRDS)):
        problems.append("tau < 2/3 does not match having a cut vertex")
    for v in range(g.n):
        if cuts >> v & 1 and count_components(g, 1 << v) > 3:
            problems.append(f"cut vertex {v} leaves more than 3 components")
    for t in (Fraction(1, 3), HALF, Fraction(3, 5)):
        if decide_cubic_t_tough(g, t) != ref.at_least(t):
            problems.append(f"decide_cubic_t_tough wrong at t={_show(t)}")
    return "; ".join(problems) or None


def case_quartic(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    problems = []
    if recognize_half_tough_4regular(g) != is_connected(g):
        problems.append("recognizer differs from the connectivity test")
    if not is_connected(g):
        return "; ".join(problems) or None
    ref = oracle_toughness(g)
    if not ref.at_least(HALF):
        problems.append(f"tau = {ref} < 1/2")
    # every component of G - S sends an even and positive number of edges into S
    for s in range(1, g.full):
        for comp in component_sets(g, s):
            crossing = sum(popcount(g.adj[v] & s) for v in range(g.n) if comp >> v & 1)
            if crossing % 2 or crossing < 2:
                problems.append(f"S mask {s}: a component sends {crossing} edges into S")
                return "; ".join(problems)
    return "; ".join(problems) or None


def cubic_sources(cfg: HarnessConfig) -> tuple[list[Graph], list[Graph], int]:
    """Generated and ingested cubic graphs, plus how many corpus entries were skipped."""
    generated = []
    for n in range(4, cfg.limit("cubic_generated") + 1, 2):
        generated.extend(enumerate_connected_regular(n, 3))
    raw = _read_corpus(cfg.cubic_corpus, CUBIC_CORPUS)
    ingested = [g for g in raw if g.n <= cfg.limit("cubic_corpus") and is_regular(g, 3) and is_connected(g)]
    return generated, ingested, len(raw) - len(ingested)


def check_cubic_and_4regular(cfg: HarnessConfig) -> CheckReport:
    rep = CheckReport("cubic-4regular",
                      notes="cubic classifier vs oracle (generated and ingested); 4-regular tau >= 1/2, "
                            "recognizer vs connectivity, crossing-edge parity")
    generated, ingested, skipped = cubic_sources(cfg)
    slowest = 0.0
    for g in generated + ingested:
        rep.corpus_size += 1
        detail = case_cubic(g, cfg)
        if detail:
            rep.fail(to_graph6(g), detail)
        if g.n == 14:
            t0 = time.perf_counter()
            classify_cubic(g)
            slowest = max(slowest, time.perf_counter() - t0)
    quartic = [g for g in _quartic_corpus(cfg) if g.n <= cfg.limit("quartic") and is_regular(g, 4)]
    k5 = Graph.complete(5)
    extra = [g.disjoint_union(k5) for g in quartic if g.n + 5 <= 16][:5]
    for g in quartic + extra:
        rep.corpus_size += 1
        detail = case_quartic(g, cfg)
        if detail:
            rep.fail(to_graph6(g), detail)
    rep.stats = {
        "cubic_generated": len(generated),
        "cubic_ingested": len(ingested),
        "cubic_skipped": skipped,
        "quartic": len(quartic),
        "quartic_disconnected": len(extra),
        "max_classify_ms_n14": round(slowest * 1000, 3),
    }
    return rep


# -- spanning subgraph --------------------------------------------------------


def _spanning_chunk(offset: int, rows: np.ndarray) -> list:
    res = _kernels.toughness_batch(rows)
    eligible = np.flatnonzero((res[:, 0] == _kernels.INFINITE)
                              | ((res[:, 0] == _kernels.FINITE) & (2 * res[:, 1] >= res[:, 2])))
    sub = rows[eligible]
    out = _kernels.half_tough_spanning_batch(sub)
    tau = _kernels.toughness_batch(out)
    extra = np.any(out & ~sub, axis=1)
    exact = (tau[:, 0] == _kernels.FINITE) & (tau[:, 1] == 1) & (tau[:, 2] == 2)
    found = [(offset + int(eligible[i]), f"output tau = {_describe_row(tau[i])}, adds edges = {bool(extra[i])}")
             for i in np.flatnonzero(extra | ~exact)]
    return [(len(eligible), found)]


def case_spanning(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    h = half_tough_spanning_subgraph(g)
    tau = toughness(h)
    extra = any(h.adj[v] & ~g.adj[v] for v in range(g.n))
    if h.n != g.n or extra or tau.kind is not Kind.FINITE or tau.value != HALF:
        return f"output tau = {tau}, adds edges = {extra}"
    return None


def check_spanning_half_tough(cfg: HarnessConfig) -> CheckReport:
    rep = CheckReport("spanning-half", notes="greedy spanning subgraph has tau exactly 1/2, labeled connected graphs")
    for n in range(3, cfg.limit("spanning") + 1):
        rows = connected_labeled_adjacency(n)
        for count, found in _chunked(_spanning_chunk, rows, cfg.workers):
            rep.corpus_size += count
            for i, detail in found:
                rep.fail(to_graph6(graph_from_row(rows[i])), detail)
    return rep


# -- registry ----------------------------------------------------------------

CHECKS: dict[str, Callable[[HarnessConfig], CheckReport]] = {
    "solver-oracle": check_solver_oracle,
    "bg-identity": check_bg_identity,
    "bg-connectivity": check_bg_connectivity,
    "gk-trichotomy": check_gk_trichotomy,
    "hr": check_hr,
    "gadget-forward": check_gadget_forward,
    "gadget-reverse": check_gadget_reverse,
    "rational-bounds": check_rational_bounds,
    "cubic-4regular": check_cubic_and_4regular,
    "spanning-half": check_spanning_half_tough,
}


def _hr_replay(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    r = g.n - 2 if g.n % 2 else g.n // 2
    return case_hr(g, r)


def _gadget_forward_replay(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    details = [d for d in (case_gadget_forward(g, r, cfg) for r in (5, 6)) if d]
    return "; ".join(details) or None


def _gadget_reverse_replay(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    for r in (5, 6):
        attach = builder("attach-odd" if r % 2 else "attach-even", cfg.fault)
        w = refute_heuristic(attach(g, r)[0], HALF, budget=cfg.heuristic_budget, seed=cfg.seed)
        if w is not None:
            return f"r={r}: G' is not 1/2-tough, witness {w.to_json()}"
    return None


def _cubic_quartic_replay(g: Graph, cfg: HarnessConfig) -> Optional[str]:
    return case_cubic(g, cfg) if is_regular(g, 3) else case_quartic(g, cfg)


REPLAY: dict[str, Callable[[Graph, HarnessConfig], Optional[str]]] = {
    "solver-oracle": case_solver_oracle,
    "bg-identity": case_bg_identity,
    "bg-connectivity": case_bg_connectivity,
    "gk-trichotomy": case_gk_trichotomy,
    "hr": _hr_replay,
    "gadget-forward": _gadget_forward_replay,
    "gadget-reverse": _gadget_reverse_replay,
    "rational-bounds": case_rational_bounds,
    "cubic-4regular": _cubic_quartic_replay,
    "spanning-half": case_spanning,
}


def replay(check_id: str, graph6: str, cfg: Optional[HarnessConfig] = None) -> Optional[str]:
    """Re-run one check on one reported graph; returns the failure detail or None."""
    return REPLAY[check_id](parse_graph6(graph6), cfg or HarnessConfig())


def run_check(check_id: str, cfg: HarnessConfig) -> CheckReport:
    t0 = time.perf_counter()
    rep = CHECKS[check_id](cfg)
    rep.elapsed = time.perf_counter() - t0
    return rep


def run_all(cfg: Optional[HarnessConfig] = None) -> tuple[list[CheckReport], int]:
    """Run every selected check; the status is 1 when any report holds a failure.

    Failures are certified counterexamples in every mode (heuristic checks
    only record a failure when they find a verified witness), so any of them
    fails the run.
    """
    cfg = cfg or HarnessConfig()
    ids = cfg.checks or tuple(CHECKS)
    unknown = [c for c in ids if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check ids {unknown}; known: {list(CHECKS)}")
    reports = [run_check(c, cfg) for c in ids]
    return reports, int(any(not r.passed for r in reports))
