"""Hyperplanes of the cube complex X(Gamma): separation, distance, medians, contact."""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import CapExceeded, WordError
from .gates import StandardCoset, cosets_intersect, gate_point
from .graph import DefiningGraph
from .words import (
    GroupElement,
    Letter,
    _shortlex,
    _split_prefix,
    ball,
    common_prefix,
    encode,
    format_word,
    invert,
    multiply,
)


@dataclass(frozen=True)
class Hyperplane:
    """A hyperplane of X(Gamma): its label and the minimal vertex of its carrier coset.

    The carrier coset ``base * <link(label)>`` is the set of initial vertices
    of the positively labelled edges dual to the hyperplane; that side of the
    hyperplane is the ``-`` side. Build instances with :func:`make_hyperplane`
    unless ``base`` is already minimal.
    """

    label: str
    base: GroupElement

    @property
    def graph(self) -> DefiningGraph:
        return self.base.graph

    @property
    def label_index(self) -> int:
        return self.base.graph.index[self.label]

    @property
    def carrier(self) -> StandardCoset:
        g = self.base.graph
        return StandardCoset(self.base, g.adjacent[g.index[self.label]])

    @property
    def far_carrier(self) -> StandardCoset:
        """Terminal vertices of the positive dual edges (the ``+`` side)."""
        g = self.base.graph
        i = g.index[self.label]
        return StandardCoset(self.base * GroupElement(g, (2 * i,)), g.adjacent[i])

    def sort_key(self):
        return (self.label_index, len(self.base.word), self.base.word)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Hyperplane({self.label}, {format_word(self.base) or '1'})"

    def to_dict(self) -> dict:
        return {"label": self.label, "base": format_word(self.base)}


def _coset_min(x: GroupElement, mask: int) -> GroupElement:
    blocks = x.graph.blocks
    p, _ = _split_prefix(invert(x).word, mask, blocks)
    if not p:
        return x
    return x * GroupElement(x.graph, _shortlex(p, blocks))


def make_hyperplane(label: str, base: GroupElement) -> Hyperplane:
    g = base.graph
    if label not in g.index:
        raise WordError(f"unknown label {label!r}")
    return Hyperplane(label, _coset_min(base, g.adjacent[g.index[label]]))


def hyperplane_of_edge(x: GroupElement, letter) -> Hyperplane:
    """Hyperplane dual to the edge from x along ``letter``."""
    g = x.graph
    code = encode(g, letter)
    v = code >> 1
    if code & 1:
        x = x * GroupElement(g, (code,))
    return Hyperplane(g.vertices[v], _coset_min(x, g.adjacent[v]))


def dual_hyperplanes(a: GroupElement, b: GroupElement) -> list:
    """Hyperplanes crossed by the canonical geodesic from a to b, in order."""
    g = a.graph
    out = []
    cur = a
    for code in (invert(a) * b).word:
        out.append(hyperplane_of_edge(cur, code))
        cur = cur * GroupElement(g, (code,))
    return out


def side(h: Hyperplane, x: GroupElement) -> int:
    """-1 on the side containing ``h.base``, +1 on the other.

    Projects ``base^-1 x`` onto <star(label)> = <link> x <label>; the exponent
    of the label letter in the projection says which side x is on.
    """
    g = h.base.graph
    v = g.index[h.label]
    star = g.adjacent[v] | 1 << v
    rel = invert(h.base) * x
    p, _ = _split_prefix(rel.word, star, g.blocks)
    exponent = 0
    for c in p:
        if c >> 1 == v:
            exponent += -1 if c & 1 else 1
    return 1 if exponent >= 1 else -1


def separates(h: Hyperplane, a: GroupElement, b: GroupElement) -> bool:
    return side(h, a) != side(h, b)


def distance(a: GroupElement, b: GroupElement) -> int:
    return len(invert(a) * b)


def hyperplane_distance(x: GroupElement, h: Hyperplane) -> int:
    """Edges from x to the carrier of h on x's side (hyperplanes strictly between)."""
    near = h.carrier if side(h, x) < 0 else h.far_carrier
    return distance(x, gate_point(x, near))


def median(a: GroupElement, b: GroupElement, c: GroupElement) -> GroupElement:
    ia = invert(a)
    return multiply(a, common_prefix(ia * b, ia * c))


def hyperplanes_cross(h: Hyperplane, k: Hyperplane) -> bool:
    g = h.base.graph
    if h.label == k.label or not g.commute(h.label, k.label):
        return False
    return cosets_intersect(h.carrier, k.carrier)


def hyperplanes_contact(h: Hyperplane, k: Hyperplane) -> bool:
    if h == k:
        return True
    hs = (h.carrier, h.far_carrier)
    ks = (k.carrier, k.far_carrier)
    return any(cosets_intersect(p, q) for p in hs for q in ks)


def contact_graph_ball(center: GroupElement, radius: int, cap: int = 5) -> nx.Graph:
    """Contact graph on the hyperplanes dual to positive edges leaving
    vertices at distance < radius from ``center``.

    Nodes carry no attributes; they are :class:`Hyperplane` values inserted
    in a deterministic order (distance of the edge, then letter order).
    """
    if radius > cap:
        raise CapExceeded(f"radius {radius} exceeds cap {cap}")
    g = center.graph
    result = nx.Graph()
    if radius <= 0:
        return result
    nodes = []
    seen = set()
    for x in ball(center, radius - 1):
        for v in range(len(g.vertices)):
            h = hyperplane_of_edge(x, 2 * v)
            if h not in seen:
                seen.add(h)
                nodes.append(h)
    result.add_nodes_from(nodes)
    for i, h in enumerate(nodes):
        for k in nodes[i + 1:]:
            if hyperplanes_contact(h, k):
                result.add_edge(h, k, cross=hyperplanes_cross(h, k))
    return result


def letter(graph: DefiningGraph, vertex: str, sign: int = 1) -> GroupElement:
    return GroupElement(graph, (encode(graph, Letter(vertex, sign)),))
