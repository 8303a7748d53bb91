"""Standard small graphs, complexes and rays used by the tests, docs and CLI demos."""
from __future__ import annotations

from .complex import CubeComplex, Edge
from .graph import DefiningGraph
from .rays import PeriodicRay


def F2() -> DefiningGraph:
    return DefiningGraph(["a", "b"], [])


def Z2() -> DefiningGraph:
    return DefiningGraph(["a", "b"], [["a", "b"]])


def P3() -> DefiningGraph:
    return DefiningGraph(["a", "b", "c"], [["a", "b"], ["b", "c"]])


def K3() -> DefiningGraph:
    return DefiningGraph(["a", "b", "c"], [["a", "b"], ["b", "c"], ["a", "c"]])


GRAPHS = {"F2": F2, "Z2": Z2, "P3": P3, "K3": K3}


def ray(graph: DefiningGraph, base: str, period: str) -> PeriodicRay:
    return PeriodicRay(graph.word(base), graph.word(period))


# -- complexes ------------------------------------------------------------------


def moebius() -> CubeComplex:
    """Two squares in a strip whose ends are glued with a flip; the rung class is one-sided."""
    return CubeComplex(
        ["v0", "v1", "u0", "u1"],
        [
            Edge("x1", "v0", "v1"),
            Edge("y1", "u0", "u1"),
            Edge("x2", "v1", "u0"),
            Edge("y2", "u1", "v0"),
            Edge("r0", "v0", "u0"),
            Edge("r1", "v1", "u1"),
        ],
        [
            [("x1", 1), ("r1", 1), ("y1", -1), ("r0", -1)],
            [("x2", 1), ("r0", -1), ("y2", -1), ("r1", -1)],
        ],
    )


def pinched_square() -> CubeComplex:
    """One square with two opposite corners identified; both classes self-osculate there."""
    return CubeComplex(
        ["A", "B", "C"],
        [Edge("e1", "A", "B"), Edge("e2", "B", "C"), Edge("e3", "C", "B"), Edge("e4", "B", "A")],
        [[("e1", 1), ("e2", 1), ("e3", 1), ("e4", 1)]],
    )


def klein_bottle() -> CubeComplex:
    """Loops a, b at one vertex with the square a b a^-1 b; the b class is one-sided."""
    return CubeComplex(
        ["*"],
        [Edge("a", "*", "*"), Edge("b", "*", "*")],
        [[("a", 1), ("b", 1), ("a", -1), ("b", 1)]],
    )


def self_crossing_square() -> CubeComplex:
    """Square a a b b on two loops: a and b fall into one class that meets itself at a corner."""
    return CubeComplex(
        ["*"],
        [Edge("a", "*", "*"), Edge("b", "*", "*")],
        [[("a", 1), ("a", 1), ("b", 1), ("b", 1)]],
    )


def interosculating_corner() -> CubeComplex:
    """Three squares around a corner whose hyperplanes pairwise cross and also touch elsewhere."""
    return CubeComplex(
        ["v0", "v1", "v2", "v3", "v4", "v5", "v6"],
        [
            Edge("e0", "v0", "v1"),
            Edge("e1", "v1", "v2"),
            Edge("e2", "v2", "v3"),
            Edge("e3", "v3", "v0"),
            Edge("e4", "v3", "v4"),
            Edge("e5", "v4", "v5"),
            Edge("e6", "v5", "v2"),
            Edge("e7", "v0", "v6"),
            Edge("e8", "v6", "v4"),
        ],
        [
            [("e0", 1), ("e1", 1), ("e2", 1), ("e3", 1)],
            [("e4", 1), ("e5", 1), ("e6", 1), ("e2", 1)],
            [("e4", -1), ("e3", 1), ("e7", 1), ("e8", 1)],
        ],
    )


def annulus() -> CubeComplex:
    """Two squares forming an annulus; its core circle has two edges on each boundary."""
    return CubeComplex(
        ["v0", "v1", "u0", "u1"],
        [
            Edge("x1", "v0", "v1"),
            Edge("x2", "v1", "v0"),
            Edge("y1", "u0", "u1"),
            Edge("y2", "u1", "u0"),
            Edge("r0", "v0", "u0"),
            Edge("r1", "v1", "u1"),
        ],
        [
            [("x1", 1), ("r1", 1), ("y1", -1), ("r0", -1)],
            [("x2", 1), ("r0", 1), ("y2", -1), ("r1", -1)],
        ],
    )


def subdivided_circle() -> CubeComplex:
    return CubeComplex(["p", "q"], [Edge("e1", "p", "q"), Edge("e2", "q", "p")])
