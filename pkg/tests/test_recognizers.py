import time
from fractions import Fraction

import pytest

from toughkit.algorithms import count_components, is_connected
from toughkit.codecs import to_graph6
from toughkit.generators import (
    CUBIC_CORPUS,
    QUARTIC_CORPUS,
    bridged_cubic,
    cut_vertex_quartic,
    cycle_graph,
    load_corpus,
    octahedron,
    petersen_graph,
    random_connected_regular_graph,
    three_bridge_cubic,
)
from toughkit.graph import Graph, GraphError
from toughkit.harness.oracle import oracle_toughness
from toughkit.recognizers import (
    CubicClass,
    classify_cubic,
    decide_cubic_t_tough,
    recognize_half_tough_4regular,
    recognize_three_halves_tough_cubic,
)
from toughkit.solver import Kind

CUBIC = load_corpus(CUBIC_CORPUS)
QUARTIC = load_corpus(QUARTIC_CORPUS)
F = Fraction


def test_named_classifications():
    assert classify_cubic(Graph.complete(4)).kind is CubicClass.COMPLETE_K4
    assert classify_cubic(petersen_graph()).kind is CubicClass.TAU_AT_LEAST_TWO_THIRDS
    c = classify_cubic(bridged_cubic())
    assert c.kind is CubicClass.TAU_ONE_HALF and count_components(bridged_cubic(), 1 << c.cut_vertex) == 2
    c = classify_cubic(three_bridge_cubic())
    assert c.kind is CubicClass.TAU_ONE_THIRD and c.cut_vertex == 0
    assert c.to_json() == {"class": "TauOneThird", "cut_vertex": 0}
    assert classify_cubic(petersen_graph()).to_json() == {"class": "TauAtLeastTwoThirds", "cut_vertex": None}


def test_classifier_agrees_with_oracle_on_corpus():
    for g in CUBIC:
        if g.n > 12:
            continue
        tau = oracle_toughness(g)
        kind = classify_cubic(g).kind
        if kind is CubicClass.COMPLETE_K4:
            assert tau.kind is Kind.INFINITE
        elif kind is CubicClass.TAU_ONE_THIRD:
            assert tau.value == F(1, 3), to_graph6(g)
        elif kind is CubicClass.TAU_ONE_HALF:
            assert tau.value == F(1, 2), to_graph6(g)
        else:
            assert tau.at_least(F(2, 3)), to_graph6(g)


def test_three_bridge_value_by_oracle():
    assert oracle_toughness(three_bridge_cubic()).value == F(1, 3)


def test_classifier_is_fast_on_larger_cubic_graphs():
    g = random_connected_regular_graph(200, 3, seed=1)
    t0 = time.perf_counter()
    classify_cubic(g)
    assert time.perf_counter() - t0 < 1.0


def test_classifier_rejects_bad_inputs():
    with pytest.raises(GraphError):
        classify_cubic(cycle_graph(5))
    with pytest.raises(GraphError):
        classify_cubic(Graph.complete(4).disjoint_union(Graph.complete(4)))


def test_decide_cubic():
    assert decide_cubic_t_tough(bridged_cubic(), F(1, 2))
    assert not decide_cubic_t_tough(bridged_cubic(), F(3, 5))
    assert not decide_cubic_t_tough(three_bridge_cubic(), F(1, 2))
    assert decide_cubic_t_tough(three_bridge_cubic(), F(1, 3))
    assert decide_cubic_t_tough(petersen_graph(), F(3, 5))
    for t in (F(0), F(2, 3), F(1)):
        with pytest.raises(ValueError):
            decide_cubic_t_tough(petersen_graph(), t)


def test_decide_cubic_against_oracle():
    for g in CUBIC:
        if g.n > 10:
            continue
        tau = oracle_toughness(g)
        for t in (F(1, 4), F(1, 3), F(2, 5), F(1, 2), F(3, 5)):
            assert decide_cubic_t_tough(g, t) == tau.at_least(t)


def test_four_regular_recognizer():
    for g in QUARTIC:
        assert recognize_half_tough_4regular(g)
        if g.n <= 9:
            assert oracle_toughness(g).at_least(F(1, 2))
    two = octahedron().disjoint_union(Graph.complete(5))
    assert not recognize_half_tough_4regular(two) and not is_connected(two)
    q = cut_vertex_quartic(Graph.complete(5), Graph.complete(5))
    assert recognize_half_tough_4regular(q)
    assert oracle_toughness(q).value == F(1, 2)
    with pytest.raises(GraphError):
        recognize_half_tough_4regular(petersen_graph())


def test_three_halves_stub():
    with pytest.raises(NotImplementedError, match="unimplemented"):
        recognize_three_halves_tough_cubic(petersen_graph())
