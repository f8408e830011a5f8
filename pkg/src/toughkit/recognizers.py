"""Polynomial-time toughness recognition for cubic and 4-regular graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algorithms import count_components, cut_vertices, is_connected, is_regular
from .graph import Graph, GraphError, vertices_of

TWO_THIRDS = Fraction(2, 3)


class CubicClass(enum.Enum):
    COMPLETE_K4 = "CompleteK4"
    TAU_ONE_THIRD = "TauOneThird"
    TAU_ONE_HALF = "TauOneHalf"
    TAU_AT_LEAST_TWO_THIRDS = "TauAtLeastTwoThirds"


@dataclass(frozen=True)
class CubicClassification:
    kind: CubicClass
    cut_vertex: Optional[int] = None

    def to_json(self) -> dict:
        return {"class": self.kind.value, "cut_vertex": self.cut_vertex}


def _require_cubic(g: Graph) -> None:
    if not is_regular(g, 3):
        raise GraphError("expected a 3-regular graph")
    if not is_connected(g):
        raise GraphError("expected a connected graph")


def classify_cubic(g: Graph) -> CubicClassification:
    """Place a connected cubic graph in one of four toughness classes.

    Without a cut vertex the toughness is at least 2/3.  With one it is 1/3
    if some cut vertex leaves three components (the most a cubic graph
    allows) and 1/2 otherwise.
    """
    _require_cubic(g)
    if g.n == 4:
        return CubicClassification(CubicClass.COMPLETE_K4)
    cuts = vertices_of(cut_vertices(g))
    if not cuts:
        return CubicClassification(CubicClass.TAU_AT_LEAST_TWO_THIRDS)
    for v in cuts:
        if count_components(g, 1 << v) == 3:
            return CubicClassification(CubicClass.TAU_ONE_THIRD, v)
    return CubicClassification(CubicClass.TAU_ONE_HALF, cuts[0])


def decide_cubic_t_tough(g: Graph, t: Fraction) -> bool:
    """Whether a connected cubic graph is t-tough, for 0 < t < 2/3."""
    t = Fraction(t)
    if not 0 < t < TWO_THIRDS:
        raise ValueError("decide_cubic_t_tough handles 0 < t < 2/3 only")
    kind = classify_cubic(g).kind
    if kind is CubicClass.TAU_ONE_HALF:
        return t <= Fraction(1, 2)
    if kind is CubicClass.TAU_ONE_THIRD:
        return t <= Fraction(1, 3)
    return True


def recognize_half_tough_4regular(g: Graph) -> bool:
    """A 4-regular graph is 1/2-tough exactly when it is connected."""
    if not is_regular(g, 4):
        raise GraphError("expected a 4-regular graph")
    return is_connected(g)


def recognize_three_halves_tough_cubic(g: Graph) -> bool:
    # the inflation-based characterization is deliberately not provided
    raise NotImplementedError("unimplemented: 3/2-tough cubic recognition is out of scope")
