"""Defining graphs, links, maximal cliques and Salvetti complexes."""
from __future__ import annotations

import hashlib
import json
from typing import Iterable, Mapping

import networkx as nx

from .complex import CubeComplex, Edge
from .errors import GraphError


class DefiningGraph:
    """A finite simple graph with a fixed total vertex order.

    The vertex order drives every canonical form downstream. Instances are
    immutable; commutation data is precomputed as bitmasks over vertex
    indices so the word kernel never touches names.
    """

    __slots__ = ("vertices", "edges", "index", "adjacent", "blocks", "_digest")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        vertices = tuple(str(v) for v in vertices)
        index = {}
        for i, v in enumerate(vertices):
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = i
        pairs = set()
        for e in edges:
            e = tuple(str(x) for x in e)
            if len(e) != 2:
                raise GraphError(f"edge {e!r} does not have two endpoints")
            u, w = e
            for x in e:
                if x not in index:
                    raise GraphError(f"edge endpoint {x!r} is not a vertex")
            if u == w:
                raise GraphError(f"loop at {u!r}")
            pair = tuple(sorted(e, key=index.__getitem__))
            if pair in pairs:
                raise GraphError(f"duplicate edge {pair!r}")
            pairs.add(pair)
        adjacent = [0] * len(vertices)
        for u, w in pairs:
            adjacent[index[u]] |= 1 << index[w]
            adjacent[index[w]] |= 1 << index[u]
        full = (1 << len(vertices)) - 1
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(
            self,
            "edges",
            tuple(sorted(pairs, key=lambda p: (index[p[0]], index[p[1]]))),
        )
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "adjacent", tuple(adjacent))
        # vertices a letter cannot be shuffled past: non-neighbours and itself
        object.__setattr__(self, "blocks", tuple(full & ~a for a in adjacent))
        object.__setattr__(self, "_digest", None)

    def __setattr__(self, name, value):
        raise AttributeError("DefiningGraph is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, DefiningGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"DefiningGraph(vertices={list(self.vertices)}, edges={[list(e) for e in self.edges]})"

    def __len__(self):
        return len(self.vertices)

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for v in names:
            try:
                m |= 1 << self.index[v]
            except KeyError:
                raise GraphError(f"unknown vertex {v!r}") from None
        return m

    def names(self, mask: int) -> frozenset:
        return frozenset(v for i, v in enumerate(self.vertices) if mask >> i & 1)

    def commute(self, u: str, w: str) -> bool:
        return bool(self.adjacent[self.index[u]] >> self.index[w] & 1)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    def digest(self) -> str:
        if self._digest is None:
            blob = json.dumps(self.to_dict(), separators=(",", ":")).encode()
            object.__setattr__(self, "_digest", hashlib.sha256(blob).hexdigest()[:16])
        return self._digest

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    # word-level helpers are attached in raagkit.words to keep imports acyclic
    def word(self, text: str):
        from .words import parse_word

        return parse_word(self, text)

    def identity(self):
        from .words import GroupElement

        return GroupElement(self, ())


def load_graph(description: Mapping) -> DefiningGraph:
    """Build a graph from ``{"vertices": [...], "edges": [[u, v], ...]}``."""
    try:
        vertices = description["vertices"]
    except (KeyError, TypeError):
        raise GraphError("graph description needs a 'vertices' list") from None
    if isinstance(vertices, str) or not isinstance(vertices, (list, tuple)):
        raise GraphError("'vertices' must be a list")
    return DefiningGraph(vertices, description.get("edges", ()))


def link(graph: DefiningGraph, v: str) -> frozenset:
    if v not in graph.index:
        raise GraphError(f"unknown vertex {v!r}")
    return graph.names(graph.adjacent[graph.index[v]])


def maximal_cliques(graph: DefiningGraph) -> set:
    return {frozenset(c) for c in nx.find_cliques(graph.to_networkx())}


def salvetti_complex(graph: DefiningGraph) -> CubeComplex:
    """2-skeleton of the Salvetti complex: one vertex, a loop per generator,
    a commutator square ``u v u^-1 v^-1`` per edge of the graph."""
    base = "*"
    edges = [Edge(v, base, base) for v in graph.vertices]
    squares = [((u, 1), (v, 1), (u, -1), (v, -1)) for u, v in graph.edges]
    return CubeComplex((base,), edges, squares)
