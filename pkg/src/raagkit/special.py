"""Finite NPC cube complexes: immersed hyperplanes, specialness, maps to Salvetti complexes.

A link vertex at x is a half-edge ``(edge_id, +1)`` (the edge leaves x) or
``(edge_id, -1)`` (the edge arrives at x); a loop contributes both. Each
square corner joins the end of one side to the start of the next. Cubes of
dimension three and up are never stored: they are whatever flag completion
of the links implies.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .complex import CubeComplex
from .errors import CapExceeded, ComplexError, MapError, NotNPC, NotSpecial
from .graph import DefiningGraph, salvetti_complex
from .words import GroupElement, ball, invert, normal_form


def _corners(X: CubeComplex):
    """Yield (vertex, half_edge_in, half_edge_out, square index, side i) for every corner."""
    for n, sq in enumerate(X.squares):
        for i in range(4):
            e0, d0 = sq[i]
            e1, d1 = sq[(i + 1) % 4]
            yield X.edge(e0).end(d0), (e0, -d0), (e1, d1), n, i


def half_edges(X: CubeComplex, vertex) -> list:
    out = []
    for e in X.edges:
        if e.src == vertex:
            out.append((e.id, 1))
        if e.dst == vertex:
            out.append((e.id, -1))
    return out


def link_graph(X: CubeComplex, vertex) -> nx.MultiGraph:
    """Link of ``vertex`` as a multigraph, so loops and doubled edges stay visible."""
    g = nx.MultiGraph()
    g.add_nodes_from(half_edges(X, vertex))
    for x, h0, h1, n, i in _corners(X):
        if x == vertex:
            g.add_edge(h0, h1, square=n, corner=i)
    return g


@dataclass(frozen=True)
class NPCReport:
    problems: tuple
    implied_cubes: dict  # dimension -> number of corners of implied cubes
    unchecked_beyond_cap: bool

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "problems": list(self.problems),
            "impliedCubeCorners": {str(k): v for k, v in sorted(self.implied_cubes.items())},
            "uncheckedBeyondCap": self.unchecked_beyond_cap,
        }


def npc_check(X: CubeComplex, dimension_cap: int = 3) -> NPCReport:
    """Links must be simplicial graphs; their cliques are the corners of implied cubes.

    Cliques of size up to ``dimension_cap`` are counted; larger ones are
    flagged as unchecked rather than examined.
    """
    problems = []
    implied: dict = {}
    beyond = False
    for v in X.vertices:
        lk = link_graph(X, v)
        seen = set()
        for a, b in lk.edges():
            if a == b:
                problems.append(f"link of {v!r} has a loop at {a[0]}{'+' if a[1] > 0 else '-'}")
                continue
            key = frozenset((a, b))
            if key in seen:
                problems.append(f"link of {v!r} has a doubled edge between {a[0]} and {b[0]}")
            seen.add(key)
        simple = nx.Graph(lk)
        simple.remove_edges_from(nx.selfloop_edges(simple))
        for clique in nx.enumerate_all_cliques(simple):
            size = len(clique)
            if size > dimension_cap:
                beyond = True
                break
            if size >= 3:
                implied[size] = implied.get(size, 0) + 1
    return NPCReport(tuple(problems), implied, beyond)


# -- immersed hyperplanes -------------------------------------------------------


@dataclass(frozen=True)
class ImmersedHyperplane:
    """An edge class under "opposite sides of a square".

    ``name`` is the first member in edge declaration order. ``orientation``
    maps each member to +1 or -1 so that opposite sides of every square
    point the same way, or is None when no such choice exists (one-sided).
    """

    name: str
    edges: tuple
    orientation: dict | None

    @property
    def two_sided(self) -> bool:
        return self.orientation is not None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "edges": list(self.edges),
            "orientation": None
            if self.orientation is None
            else {e: self.orientation[e] for e in self.edges},
        }


def _classes(X: CubeComplex) -> dict:
    """edge id -> class name via union-find on opposite sides."""
    order = {e: i for i, e in enumerate(X.edge_ids)}
    parent = {e: e for e in X.edge_ids}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for sq in X.squares:
        for i in (0, 1):
            a, b = find(sq[i][0]), find(sq[i + 2][0])
            if a != b:
                if order[b] < order[a]:
                    a, b = b, a
                parent[b] = a
    return {e: find(e) for e in X.edge_ids}


def immersed_hyperplanes(X: CubeComplex) -> list:
    cls = _classes(X)
    members: dict = {}
    for e in X.edge_ids:
        members.setdefault(cls[e], []).append(e)
    # opposite sides (e0, d0), (e2, d2) run antiparallel around the boundary,
    # so a consistent orientation needs o(e0) * o(e2) = -d0 * d2
    constraints: dict = {}
    for sq in X.squares:
        for i in (0, 1):
            (e0, d0), (e2, d2) = sq[i], sq[i + 2]
            rel = -d0 * d2
            constraints.setdefault(e0, []).append((e2, rel))
            constraints.setdefault(e2, []).append((e0, rel))
    out = []
    for name, edges in members.items():
        orient = {edges[0]: 1}
        ok = True
        queue = deque([edges[0]])
        while queue and ok:
            e = queue.popleft()
            for f, rel in constraints.get(e, ()):
                want = orient[e] * rel
                if f not in orient:
                    orient[f] = want
                    queue.append(f)
                elif orient[f] != want:
                    ok = False
                    break
        out.append(ImmersedHyperplane(name, tuple(edges), orient if ok else None))
    return out


@dataclass(frozen=True)
class SpecialReport:
    self_cross: tuple
    one_sided: tuple
    self_osculate: tuple
    interosculate: tuple
    npc: NPCReport

    @property
    def special(self) -> bool:
        return not (self.self_cross or self.one_sided or self.self_osculate or self.interosculate)

    def to_dict(self) -> dict:
        return {
            "selfCross": list(self.self_cross),
            "oneSided": list(self.one_sided),
            "selfOsculate": list(self.self_osculate),
            "interosculate": [list(p) for p in self.interosculate],
            "special": self.special,
            "npc": self.npc.to_dict(),
        }


def _spanning_pairs(X: CubeComplex) -> set:
    """Unordered edge pairs that are consecutive sides of some square."""
    pairs = set()
    for sq in X.squares:
        for i in range(4):
            pairs.add(frozenset((sq[i][0], sq[(i + 1) % 4][0])))
    return pairs


def check_special(X: CubeComplex, dimension_cap: int = 3) -> SpecialReport:
    npc = npc_check(X, dimension_cap)
    if not npc.ok:
        raise NotNPC(npc.problems)
    hyps = immersed_hyperplanes(X)
    cls = _classes(X)
    rank = {h.name: i for i, h in enumerate(hyps)}
    spans = _spanning_pairs(X)

    self_cross = set()
    crossing = set()
    for sq in X.squares:
        for i in range(4):
            a, b = cls[sq[i][0]], cls[sq[(i + 1) % 4][0]]
            if a == b:
                self_cross.add(a)
            else:
                crossing.add(frozenset((a, b)))

    incident: dict = {}
    for e in X.edges:
        for x in {e.src, e.dst}:
            incident.setdefault(x, []).append(e.id)
    self_osc = set()
    osculating = set()
    for x in X.vertices:
        for e, f in combinations(incident.get(x, ()), 2):
            if frozenset((e, f)) in spans:
                continue
            a, b = cls[e], cls[f]
            if a == b:
                self_osc.add(a)
            else:
                osculating.add(frozenset((a, b)))

    def ordered(names):
        return tuple(sorted(names, key=rank.__getitem__))

    inter = tuple(sorted((ordered(p) for p in crossing & osculating), key=lambda p: (rank[p[0]], rank[p[1]])))
    return SpecialReport(
        ordered(self_cross),
        ordered(h.name for h in hyps if not h.two_sided),
        ordered(self_osc),
        inter,
        npc,
    )


def crossing_graph(X: CubeComplex, dimension_cap: int = 3) -> DefiningGraph:
    report = check_special(X, dimension_cap)
    if not report.special:
        raise NotSpecial("crossing graph needs a special complex")
    cls = _classes(X)
    names = [h.name for h in immersed_hyperplanes(X)]
    edges = set()
    for sq in X.squares:
        a, b = cls[sq[0][0]], cls[sq[1][0]]
        edges.add(frozenset((a, b)))
    return DefiningGraph(names, [tuple(p) for p in edges])


# -- maps ------------------------------------------------------------------------


@dataclass(frozen=True)
class CombinatorialMap:
    """Vertices to vertices and each edge to a target edge with a direction.

    ``edge_map[e] = (f, s)`` sends e traversed forwards to f traversed in
    direction s. ``graph`` is set when the target is the Salvetti complex of
    that graph, which lets loops be read as group elements.
    """

    source: CubeComplex
    target: CubeComplex
    vertex_map: dict
    edge_map: dict
    graph: DefiningGraph | None = None

    def image_side(self, side) -> tuple:
        e, d = side
        f, s = self.edge_map[e]
        return (f, s * d)

    def to_dict(self) -> dict:
        return {
            "vertexMap": {v: self.vertex_map[v] for v in self.source.vertices},
            "edgeMap": {e: list(self.edge_map[e]) for e in self.source.edge_ids},
            "target": None if self.graph is None else self.graph.to_dict(),
        }


def _square_keys(sq) -> set:
    """All boundary readings of a square: rotations and reversals."""
    keys = set()
    rev = tuple((e, -d) for e, d in reversed(sq))
    for word in (tuple(sq), rev):
        for i in range(4):
            keys.add(word[i:] + word[:i])
    return keys


def _check_well_formed(m: CombinatorialMap) -> None:
    X, Y = m.source, m.target
    yverts = set(Y.vertices)
    for v in X.vertices:
        if m.vertex_map.get(v) not in yverts:
            raise MapError(f"vertex {v!r} has no image in the target")
    yedges = set(Y.edge_ids)
    for e in X.edges:
        if e.id not in m.edge_map:
            raise MapError(f"edge {e.id!r} has no image")
        f, s = m.edge_map[e.id]
        if f not in yedges or s not in (1, -1):
            raise MapError(f"edge {e.id!r} maps to a bad target {f!r}")
        fe = Y.edge(f)
        if fe.start(s) != m.vertex_map[e.src] or fe.end(s) != m.vertex_map[e.dst]:
            raise MapError(f"edge {e.id!r} image does not respect endpoints")
    target_squares = set()
    for sq in Y.squares:
        target_squares |= _square_keys(sq)
    for n, sq in enumerate(X.squares):
        image = tuple(m.image_side(side) for side in sq)
        if image not in target_squares:
            raise MapError(f"square {n} does not map onto a square")


def verify_local_isometry(m: CombinatorialMap) -> bool:
    """Injective on every vertex link, with adjacency preserved and reflected."""
    _check_well_formed(m)
    X, Y = m.source, m.target
    target_links = {}
    for v in X.vertices:
        w = m.vertex_map[v]
        if w not in target_links:
            target_links[w] = {frozenset((a, b)) for a, b in link_graph(Y, w).edges()}
        adj_y = target_links[w]
        lk = link_graph(X, v)
        nodes = list(lk.nodes)
        image = {h: m.image_side(h) for h in nodes}
        if len(set(image.values())) != len(nodes):
            return False
        adj_x = {frozenset((a, b)) for a, b in lk.edges()}
        for a, b in combinations(nodes, 2):
            if (frozenset((a, b)) in adj_x) != (frozenset((image[a], image[b])) in adj_y):
                return False
    return True


def salvetti_local_isometry(X: CubeComplex, dimension_cap: int = 3) -> CombinatorialMap:
    gamma = crossing_graph(X, dimension_cap)
    target = salvetti_complex(gamma)
    point = target.vertices[0]
    edge_map = {}
    for h in immersed_hyperplanes(X):
        for e in h.edges:
            edge_map[e] = (h.name, h.orientation[e])
    m = CombinatorialMap(X, target, {v: point for v in X.vertices}, edge_map, gamma)
    if not verify_local_isometry(m):
        raise MapError("constructed Salvetti map is not a local isometry")
    return m


# -- fundamental group -------------------------------------------------------------


def _spanning_tree(X: CubeComplex, basepoint) -> dict:
    """vertex -> path from basepoint as a list of (edge, direction), by BFS in declaration order."""
    if basepoint not in set(X.vertices):
        raise ComplexError(f"unknown basepoint {basepoint!r}")
    paths = {basepoint: []}
    queue = deque([basepoint])
    while queue:
        x = queue.popleft()
        for e in X.edges:
            for d in (1, -1):
                if e.start(d) == x and e.end(d) not in paths:
                    paths[e.end(d)] = paths[x] + [(e.id, d)]
                    queue.append(e.end(d))
    if len(paths) != len(X.vertices):
        raise ComplexError("complex is disconnected")
    return paths


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple
    tree: tuple

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [[[e, d] for e, d in r] for r in self.relators],
            "tree": list(self.tree),
        }


def pi1_presentation(X: CubeComplex, basepoint=None) -> Presentation:
    """Generators are the non-tree edges; relators are square boundaries with tree edges erased."""
    basepoint = X.vertices[0] if basepoint is None else basepoint
    paths = _spanning_tree(X, basepoint)
    tree = {e for p in paths.values() for e, _ in p}
    gens = tuple(e for e in X.edge_ids if e not in tree)
    relators = tuple(tuple((e, d) for e, d in sq if e not in tree) for sq in X.squares)
    return Presentation(gens, relators, tuple(e for e in X.edge_ids if e in tree))


def _loop_word(m: CombinatorialMap, path) -> GroupElement:
    if m.graph is None:
        raise MapError("map target is not a Salvetti complex")
    return normal_form(m.graph, (m.image_side(side) for side in path))


def develop_path(X: CubeComplex, m: CombinatorialMap, path, basepoint=None) -> GroupElement:
    """The A(Gamma) element read off the image of an edge path starting at the basepoint."""
    basepoint = X.vertices[0] if basepoint is None else basepoint
    at = basepoint
    for n, (e, d) in enumerate(path):
        if d not in (1, -1):
            raise ComplexError(f"step {n} has direction {d}")
        edge = X.edge(e)
        if edge.start(d) != at:
            raise ComplexError(f"step {n} along {e!r} does not start at {at!r}")
        at = edge.end(d)
    return _loop_word(m, path)


def pi1_embedding(X: CubeComplex, m: CombinatorialMap, basepoint=None) -> dict:
    """Generator edge -> image element of the loop tree-path, edge, tree-path back."""
    basepoint = X.vertices[0] if basepoint is None else basepoint
    paths = _spanning_tree(X, basepoint)
    pres = pi1_presentation(X, basepoint)
    images = {}
    for e in pres.generators:
        edge = X.edge(e)
        back = [(f, -d) for f, d in reversed(paths[edge.dst])]
        images[e] = _loop_word(m, paths[edge.src] + [(e, 1)] + back)
    for n, sq in enumerate(X.squares):
        start = X.edge(sq[0][0]).start(sq[0][1])
        back = [(f, -d) for f, d in reversed(paths[start])]
        if not _loop_word(m, paths[start] + list(sq) + back).is_identity():
            raise MapError(f"relator of square {n} does not map to the identity")
    return images


# -- convexity ------------------------------------------------------------------------


def develop_ball(X: CubeComplex, m: CombinatorialMap, depth: int, basepoint=None) -> set:
    """Images in A(Gamma) of all edge paths of length <= depth from the basepoint."""
    basepoint = X.vertices[0] if basepoint is None else basepoint
    graph = m.graph
    if graph is None:
        raise MapError("map target is not a Salvetti complex")
    steps: dict = {}
    for e in X.edges:
        for d in (1, -1):
            f, s = m.image_side((e.id, d))
            letter = normal_form(graph, [(f, s)])
            steps.setdefault(e.start(d), []).append((e.end(d), letter))
    start = (basepoint, graph.identity())
    seen = {start}
    frontier = [start]
    for _ in range(depth):
        nxt = []
        for x, g in frontier:
            for y, letter in steps.get(x, ()):
                state = (y, g * letter)
                if state not in seen:
                    seen.add(state)
                    nxt.append(state)
        frontier = nxt
    return {g for _, g in seen}


def convexity_probe(X: CubeComplex, m: CombinatorialMap, radius: int, cap: int = 5, basepoint=None) -> bool:
    """Every geodesic between developed points within ``radius`` stays in the development.

    An interval vertex is within 2 * radius of the identity, and the lift is
    an isometric embedding, so developing to depth 2 * radius finds it if it
    is in the image at all.
    """
    if radius > cap:
        raise CapExceeded(f"radius {radius} exceeds cap {cap}")
    if not verify_local_isometry(m):
        raise MapError("convexity probe needs a local isometry")
    near = develop_ball(X, m, radius, basepoint)
    far = develop_ball(X, m, 2 * radius, basepoint)
    near = sorted(near)
    for i, p in enumerate(near):
        ip = invert(p)
        for q in near[i + 1:]:
            d = len(ip * q)
            if d > radius:
                continue
            iq = invert(q)
            for z in ball(p, d):
                if len(ip * z) + len(iq * z) == d and z not in far:
                    return False
    return True
