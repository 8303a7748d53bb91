"""Eventually periodic geodesic rays as points of the Roller boundary.

A :class:`PeriodicRay` with base g and period w stands for the geodesic ray
that leaves the identity along the normal form of g and then repeats w
forever. Everything here touches only finite prefixes of that path;
geodesicity is checked on exactly the prefix an operation reads.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .errors import HorizonInsufficient, NonGeodesicRay, PreconditionError
from .geometry import (
    Hyperplane,
    dual_hyperplanes,
    hyperplane_distance,
    hyperplane_of_edge,
    separates,
)
from .words import GroupElement, _push, _shortlex, format_word, invert, support


class _Walk:
    """Lazily extended path from the identity along a ray, with its dual hyperplanes."""

    def __init__(self, base: GroupElement, period: GroupElement):
        self.graph = base.graph
        self.base = base
        self.period = period
        self.raw: list = []  # reduced (not canonical) word of the current vertex
        self.vertices = [base.graph.identity()]
        self.crossed: list = []  # hyperplane dual to step j -> j+1

    def letter(self, j: int) -> int:
        g = self.base.word
        if j < len(g):
            return g[j]
        w = self.period.word
        return w[(j - len(g)) % len(w)]

    def extend(self, steps: int) -> None:
        blocks = self.graph.blocks
        while len(self.crossed) < steps:
            j = len(self.crossed)
            code = self.letter(j)
            _push(self.raw, code, blocks)
            if len(self.raw) != j + 1:
                raise NonGeodesicRay(j + 1 - len(self.base.word))
            self.crossed.append(hyperplane_of_edge(self.vertices[j], code))
            self.vertices.append(GroupElement(self.graph, _shortlex(self.raw, blocks)))


@dataclass(frozen=True)
class PeriodicRay:
    base: GroupElement
    period: GroupElement
    _walk: _Walk = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.period.is_identity():
            raise PreconditionError("ray period must be nonempty")
        if self.base.graph != self.period.graph:
            raise PreconditionError("base and period live over different graphs")
        object.__setattr__(self, "_walk", _Walk(self.base, self.period))

    @property
    def graph(self):
        return self.base.graph

    def path_vertex(self, j: int) -> GroupElement:
        """Vertex j steps from the identity along the full path."""
        self._walk.extend(j)
        return self._walk.vertices[j]

    def path_hyperplanes(self, steps: int) -> list:
        """Hyperplanes crossed by the first ``steps`` edges of the full path."""
        self._walk.extend(steps)
        return self._walk.crossed[:steps]

    def __repr__(self):
        return f"PeriodicRay({format_word(self.base) or '1'} | {format_word(self.period)})"

    def to_dict(self) -> dict:
        return {"base": format_word(self.base), "period": format_word(self.period)}


def ray_vertex(ray: PeriodicRay, k: int) -> GroupElement:
    """The k-th vertex after the base (k = 0 is the base itself)."""
    if k < 0:
        raise PreconditionError("vertex index must be nonnegative")
    return ray.path_vertex(len(ray.base) + k)


def infinite_label_classes(ray: PeriodicRay) -> frozenset:
    ray.path_vertex(len(ray.base) + 2 * len(ray.period))
    return support(ray.period)


def _count(word, v: int) -> int:
    return sum(1 for c in word if c >> 1 == v)


def crosses(ray: PeriodicRay, h: Hyperplane) -> bool:
    """Whether the ray from the identity crosses h, decided exactly.

    Same-label hyperplanes crossed by a geodesic are nested, so if h is the
    m-th v-hyperplane along the ray then the m-1 earlier ones separate the
    identity from h and m <= d(1, h) + 1. Walking until the ray has crossed
    d(1, h) + 1 hyperplanes labelled v (or for good, if v is absent from the
    period) settles the question.
    """
    v = h.label_index
    need = hyperplane_distance(ray.graph.identity(), h) + 1
    pre = _count(ray.base.word, v)
    per = _count(ray.period.word, v)
    steps = len(ray.base)
    if need > pre and per:
        steps += -(-(need - pre) // per) * len(ray.period)
    return separates(h, ray.graph.identity(), ray.path_vertex(steps))


@dataclass(frozen=True)
class LabelSpectrum:
    label: str
    hyperplanes: tuple
    distances: tuple

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "hyperplanes": [
                {**h.to_dict(), "distance": d} for h, d in zip(self.hyperplanes, self.distances)
            ],
        }


_SPECTRA: dict = {}


def label_spectrum(ray: PeriodicRay, x: GroupElement, label: str, k: int, horizon: int) -> LabelSpectrum:
    """The first k hyperplanes labelled ``label`` separating x from the ray's endpoint.

    The separating set is H(x, 1) symmetric-difference H(1, xi). Same-label
    hyperplanes along the ray are nested, so each one lies at least one step
    further from the identity than the last one seen, and at least that
    distance minus |x| from x. Once this lower bound passes the current k-th
    smallest distance nothing later can enter.
    """
    key = (ray.base, ray.period, x, label, k, horizon)
    hit = _SPECTRA.get(key)
    if hit is None:
        if len(_SPECTRA) > 100_000:
            _SPECTRA.clear()
        hit = _SPECTRA[key] = _label_spectrum(ray, x, label, k, horizon)
    return hit


def _label_spectrum(ray: PeriodicRay, x: GroupElement, label: str, k: int, horizon: int) -> LabelSpectrum:
    graph = ray.graph
    if label not in graph.index:
        raise PreconditionError(f"unknown label {label!r}")
    v = graph.index[label]
    finite = {h for h in dual_hyperplanes(x, graph.identity()) if h.label == label}
    found = {h: hyperplane_distance(x, h) for h in finite if not crosses(ray, h)}

    def settled(bound: int) -> bool:
        if len(found) < k:
            return False
        return sorted(found.values())[k - 1] < bound

    one = graph.identity()
    per = _count(ray.period.word, v)
    last = len(ray.base)  # with no label-v letter in the period, nothing past the base
    reach = -1  # distance from 1 to the last label-v hyperplane seen on the ray
    j = 0
    while True:
        if per == 0 and j >= last:
            break
        if k == 0 or settled(reach + 1 - len(x)):
            break
        if j >= horizon:
            raise HorizonInsufficient(f"label spectrum for {label!r} needs more than {horizon} steps")
        ray._walk.extend(j + 1)
        if ray._walk.letter(j) >> 1 == v:
            h = ray._walk.crossed[j]
            reach = hyperplane_distance(one, h)
            if h not in finite:
                found[h] = hyperplane_distance(x, h)
        j += 1
    ordered = sorted(found.items(), key=lambda item: item[1])[:k]
    return LabelSpectrum(label, tuple(h for h, _ in ordered), tuple(d for _, d in ordered))


def order_consistency_check(ray: PeriodicRay, x, y, label: str, k: int, horizon: int) -> bool:
    """Hyperplanes common to both spectra appear in the same relative order."""
    sx = label_spectrum(ray, x, label, k, horizon).hyperplanes
    sy = label_spectrum(ray, y, label, k, horizon).hyperplanes
    common = set(sx) & set(sy)
    return [h for h in sx if h in common] == [h for h in sy if h in common]


@dataclass(frozen=True)
class Separators:
    """Either the exact set of hyperplanes separating two rays or a lower bound on its size."""

    exact: bool
    hyperplanes: tuple
    certificate: dict | None = None

    @property
    def count(self) -> int:
        return len(self.hyperplanes)

    def to_dict(self) -> dict:
        out = {
            "verdict": "exact" if self.exact else "at-least",
            "count": self.count,
            "hyperplanes": [h.to_dict() for h in self.hyperplanes],
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def _parallel_certificate(r1: PeriodicRay, r2: PeriodicRay, horizon: int):
    """Find cut points j1, j2 and a block length L with one translation tau
    carrying block n of each ray onto block n+1 and with equal block-0
    hyperplane sets. Then both tails cross the same hyperplanes, and only the
    prefixes before the cuts can differ.

    Roots are unique in a RAAG, so tau^k agreeing for the two rays forces tau
    itself to agree, and L = lcm of the period lengths is the only block
    length worth trying. Moving both cuts back by L keeps a certificate valid,
    so one of the cuts can be taken within L steps of its ray's base.
    """
    L = lcm(len(r1.period), len(r2.period))
    g1, g2 = len(r1.base), len(r2.base)
    if max(g1, g2) + L > horizon:
        return None

    def translations(ray, cuts):
        out = {}
        for j in cuts:
            tau = ray.path_vertex(j + L) * invert(ray.path_vertex(j))
            out.setdefault(tau, []).append(j)
        return out

    def block(ray, j):
        return set(ray.path_hyperplanes(j + L)[j:])

    all1 = range(g1, horizon - L + 1)
    all2 = range(g2, horizon - L + 1)
    tau1 = translations(r1, all1)
    tau2 = translations(r2, all2)
    candidates = set()
    for tau, js in tau1.items():
        for j1 in js:
            for j2 in tau2.get(tau, ()):
                if j1 < g1 + L or j2 < g2 + L:
                    candidates.add((j1, j2))
    for j1, j2 in sorted(candidates):
        if block(r1, j1) == block(r2, j2):
            return j1, j2, L
    return None


def separating_hyperplanes(r1: PeriodicRay, r2: PeriodicRay, horizon: int) -> Separators:
    if r1.graph != r2.graph:
        raise PreconditionError("rays live over different graphs")
    r1.path_vertex(horizon)
    r2.path_vertex(horizon)
    cert = _parallel_certificate(r1, r2, horizon)
    if cert is not None:
        j1, j2, L = cert
        pre1 = set(r1.path_hyperplanes(j1))
        pre2 = set(r2.path_hyperplanes(j2))
        hs = tuple(sorted(pre1 ^ pre2))
        translation = r1.path_vertex(j1 + L) * invert(r1.path_vertex(j1))
        return Separators(True, hs, {"cuts": [j1, j2], "block": L, "translation": format_word(translation)})
    only1 = [h for h in r1.path_hyperplanes(horizon) if not crosses(r2, h)]
    only2 = [h for h in r2.path_hyperplanes(horizon) if not crosses(r1, h)]
    return Separators(False, tuple(sorted(set(only1) | set(only2))))


def roller_adjacent(r1: PeriodicRay, r2: PeriodicRay, horizon: int) -> bool | None:
    """True/False when settled, None when the horizon could not decide."""
    sep = separating_hyperplanes(r1, r2, horizon)
    if sep.exact:
        return sep.count == 1
    return False if sep.count >= 2 else None
