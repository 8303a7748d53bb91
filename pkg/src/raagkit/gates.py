"""Standard cosets g<U> of A(Gamma) and the gate machinery between them.

For convex sets A, B of the Cayley graph, rho(A, B) is the set of points of A
at minimal distance from B, and psi maps each such point to its nearest
point of B. In a RAAG psi is right multiplication by a single translation
element, and both rho-sets are cosets of the same standard subgroup.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import PreconditionError
from .words import (
    GroupElement,
    _shortlex,
    _split_prefix,
    format_word,
    invert,
    multiply,
    support_mask,
)


class StandardCoset:
    """The coset ``base * <generators>``, stored with its minimal-length base."""

    __slots__ = ("base", "mask")

    def __init__(self, base: GroupElement, generators: Iterable[str] | int = 0):
        graph = base.graph
        mask = generators if isinstance(generators, int) else graph.mask(generators)
        blocks = graph.blocks
        # minimal representative = gate of the identity onto the coset
        p, _ = _split_prefix(invert(base).word, mask, blocks)
        if p:
            base = multiply(base, GroupElement(graph, _shortlex(p, blocks)))
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("StandardCoset is immutable")

    @property
    def graph(self):
        return self.base.graph

    @property
    def generators(self) -> frozenset:
        return self.base.graph.names(self.mask)

    def __contains__(self, x: GroupElement) -> bool:
        return support_mask(invert(self.base) * x) & ~self.mask == 0

    def __eq__(self, other):
        if not isinstance(other, StandardCoset):
            return NotImplemented
        return self.mask == other.mask and self.base == other.base

    def __hash__(self):
        return hash((self.base, self.mask))

    def translate(self, g: GroupElement) -> "StandardCoset":
        """Left translate ``g * self``."""
        return StandardCoset(g * self.base, self.mask)

    def right_translate(self, g: GroupElement) -> "StandardCoset":
        """``self * g``; only a standard coset when supp(g) commutes with the generators."""
        graph = self.base.graph
        for v in range(len(graph.vertices)):
            if self.mask >> v & 1 and support_mask(g) & ~graph.adjacent[v]:
                raise PreconditionError("right translation does not preserve the coset type")
        return StandardCoset(self.base * g, self.mask)

    def is_point(self) -> bool:
        return self.mask == 0

    def __repr__(self):
        gens = ",".join(sorted(self.generators, key=self.base.graph.index.__getitem__))
        return f"StandardCoset({format_word(self.base) or '1'}<{gens}>)"

    def to_dict(self) -> dict:
        g = self.base.graph
        return {
            "base": format_word(self.base),
            "generators": sorted(self.generators, key=g.index.__getitem__),
        }


def gate_point(x: GroupElement, A: StandardCoset) -> GroupElement:
    """Nearest point of A to x: ``a * pi_U(a^-1 x)``."""
    a = A.base
    g = invert(a) * x
    p, _ = _split_prefix(g.word, A.mask, x.graph.blocks)
    if not p:
        return a
    return a * GroupElement(x.graph, _shortlex(p, x.graph.blocks))


def point_distance(x: GroupElement, A: StandardCoset) -> int:
    return len(invert(x) * gate_point(x, A))


def _anchor(A: StandardCoset, B: StandardCoset) -> GroupElement:
    # gate of any point of B onto A lies in rho(A, B)
    return gate_point(gate_point(A.base.graph.identity(), B), A)


def coset_distance(A: StandardCoset, B: StandardCoset) -> int:
    r = _anchor(A, B)
    return len(invert(r) * gate_point(r, B))


def cosets_intersect(A: StandardCoset, B: StandardCoset) -> bool:
    r = _anchor(A, B)
    return r in B


@dataclass(frozen=True)
class GatePair:
    """rho_A^B, rho_B^A and the translation g with psi(a) = a g."""

    translation: GroupElement
    common: frozenset
    rhoA: StandardCoset
    rhoB: StandardCoset

    @property
    def distance(self) -> int:
        return len(self.translation)

    def reversed(self) -> "GatePair":
        return GatePair(invert(self.translation), self.common, self.rhoB, self.rhoA)

    def to_dict(self) -> dict:
        g = self.translation.graph
        return {
            "translation": format_word(self.translation),
            "common": sorted(self.common, key=g.index.__getitem__),
            "rhoA": self.rhoA.to_dict(),
            "rhoB": self.rhoB.to_dict(),
        }


_PAIRS: dict = {}


def gate_pair(A: StandardCoset, B: StandardCoset) -> GatePair:
    key = (A, B)
    hit = _PAIRS.get(key)
    if hit is not None:
        return hit
    graph = A.base.graph
    r = _anchor(A, B)
    g = invert(r) * gate_point(r, B)
    supp = support_mask(g)
    common = A.mask & B.mask
    for v in range(len(graph.vertices)):
        if common >> v & 1 and supp & ~graph.adjacent[v]:
            common &= ~(1 << v)
    pair = GatePair(g, graph.names(common), StandardCoset(r, common), StandardCoset(r * g, common))
    if len(_PAIRS) > 200_000:
        _PAIRS.clear()
    _PAIRS[key] = pair
    return pair


def psi_apply(pair: GatePair, x: GroupElement) -> GroupElement:
    if x not in pair.rhoA:
        raise PreconditionError(f"{x!r} is not in rho_A^B")
    return x * pair.translation


@dataclass(frozen=True)
class GridRecord:
    a0: GroupElement
    a1: GroupElement
    b0: GroupElement
    b1: GroupElement
    distance_a: int
    distance_b: int
    labels_a: tuple
    labels_b: tuple

    @property
    def ok(self) -> bool:
        return self.distance_a == self.distance_b and self.labels_a == self.labels_b

    def to_dict(self) -> dict:
        return {
            "a0": format_word(self.a0),
            "a1": format_word(self.a1),
            "b0": format_word(self.b0),
            "b1": format_word(self.b1),
            "distance_a": self.distance_a,
            "distance_b": self.distance_b,
            "labels_a": [str(x) for x in self.labels_a],
            "labels_b": [str(x) for x in self.labels_b],
            "ok": self.ok,
        }


def grid_check(a0: GroupElement, a1: GroupElement, B: StandardCoset, A: StandardCoset | None = None) -> GridRecord:
    """Compare the geodesic a0 -> a1 with its gate image b0 -> b1 in B.

    With ``A`` given, a0 and a1 must lie in rho_A^B. Without it they must at
    least be equidistant from B.
    """
    if A is not None:
        rho = gate_pair(A, B).rhoA
        if a0 not in rho or a1 not in rho:
            raise PreconditionError("a0 and a1 must lie in rho_A^B")
    b0 = gate_point(a0, B)
    b1 = gate_point(a1, B)
    if len(invert(a0) * b0) != len(invert(a1) * b1):
        raise PreconditionError("a0 and a1 are not equidistant from B")
    da = invert(a0) * a1
    db = invert(b0) * b1
    return GridRecord(a0, a1, b0, b1, len(da), len(db), da.letters, db.letters)
