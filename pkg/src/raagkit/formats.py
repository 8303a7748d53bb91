"""JSON readers and writers for graphs, words, cosets, hyperplanes, sequences, rays, complexes and maps.

Every reader raises :class:`MalformedInput` on bad input so the CLI can
report it with its own exit status.
"""
from __future__ import annotations

import hashlib
import json
from contextlib import contextmanager
from pathlib import Path

from .complex import CubeComplex, Edge
from .errors import MalformedInput, RaagError
from .gates import StandardCoset
from .geometry import Hyperplane, make_hyperplane
from .graph import DefiningGraph, load_graph, salvetti_complex
from .invariants import SymbolSeq
from .rays import PeriodicRay
from .special import CombinatorialMap
from .words import GroupElement, format_word, parse_word


@contextmanager
def _malformed(what: str):
    try:
        yield
    except MalformedInput:
        raise
    except (RaagError, KeyError, TypeError, ValueError, IndexError, AttributeError) as exc:
        raise MalformedInput(f"malformed {what}: {exc}") from None


def read_json(arg: str):
    """Parse ``arg`` as inline JSON when it looks like JSON, else as a file path."""
    text = arg.strip()
    if text[:1] in "{[\"" or text in ("null", "true", "false"):
        source = text
    else:
        try:
            source = Path(arg).read_text()
        except OSError as exc:
            raise MalformedInput(f"cannot read {arg}: {exc}") from None
    try:
        return json.loads(source)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON in {arg}: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def digest(obj) -> str:
    blob = json.dumps(obj, separators=(",", ":"), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


# -- readers -------------------------------------------------------------------------


def parse_graph(data) -> DefiningGraph:
    with _malformed("graph"):
        if not isinstance(data, dict):
            raise MalformedInput("graph must be an object with 'vertices' and 'edges'")
        return load_graph(data)


def parse_element(graph: DefiningGraph, text) -> GroupElement:
    with _malformed("word"):
        if not isinstance(text, str):
            raise MalformedInput(f"word must be a string, got {text!r}")
        return parse_word(graph, text)


def parse_coset(graph: DefiningGraph, data) -> StandardCoset:
    with _malformed("coset"):
        gens = data["generators"]
        if isinstance(gens, str):
            raise MalformedInput("coset generators must be a list")
        graph.mask(gens)
        return StandardCoset(parse_element(graph, data["base"]), gens)


def parse_hyperplane(graph: DefiningGraph, data) -> Hyperplane:
    with _malformed("hyperplane"):
        return make_hyperplane(data["label"], parse_element(graph, data["base"]))


def _entry(graph, x):
    return parse_hyperplane(graph, x) if isinstance(x, dict) else x


def parse_sequence(graph: DefiningGraph, data):
    """A plain list or ``{preperiod, period: []}`` is a finite tuple; a nonempty
    period makes an eventually periodic :class:`SymbolSeq`. Entries are
    hyperplane objects or bare symbols."""
    with _malformed("sequence"):
        if isinstance(data, list):
            return tuple(_entry(graph, x) for x in data)
        pre = [_entry(graph, x) for x in data.get("preperiod", [])]
        period = [_entry(graph, x) for x in data["period"]]
        if not period:
            return tuple(pre)
        return SymbolSeq(tuple(pre), tuple(period))


def parse_ray(graph: DefiningGraph, data) -> PeriodicRay:
    with _malformed("ray"):
        return PeriodicRay(parse_element(graph, data["base"]), parse_element(graph, data["period"]))


def parse_complex(data) -> CubeComplex:
    with _malformed("complex"):
        edges = [Edge(str(e["id"]), str(e["src"]), str(e["dst"])) for e in data["edges"]]
        squares = [[(str(e), int(d)) for e, d in sq] for sq in data.get("squares", [])]
        return CubeComplex([str(v) for v in data["vertices"]], edges, squares)


def parse_map(source: CubeComplex, data) -> CombinatorialMap:
    """``{graph, vertexMap, edgeMap}``; the target is the Salvetti complex of ``graph``."""
    with _malformed("map"):
        graph = parse_graph(data["graph"])
        target = salvetti_complex(graph)
        vmap = {str(k): str(v) for k, v in data.get("vertexMap", {}).items()}
        if not vmap:
            vmap = {v: target.vertices[0] for v in source.vertices}
        emap = {str(k): (str(f), int(s)) for k, (f, s) in data["edgeMap"].items()}
        return CombinatorialMap(source, target, vmap, emap, graph)


def parse_path(text: str) -> list:
    """Edge path ``"e1 e2^-1"`` as (edge id, direction) pairs."""
    steps = []
    for tok in text.split():
        if tok.endswith("^-1"):
            steps.append((tok[:-3], -1))
        else:
            steps.append((tok, 1))
    return steps


# -- writers -------------------------------------------------------------------------


def complex_to_dict(X: CubeComplex) -> dict:
    return {
        "vertices": list(X.vertices),
        "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in X.edges],
        "squares": [[[e, d] for e, d in sq] for sq in X.squares],
    }


def entry_to_json(x):
    return x.to_dict() if isinstance(x, Hyperplane) else x


def sequence_to_dict(seq) -> dict:
    if isinstance(seq, SymbolSeq):
        return {
            "preperiod": [entry_to_json(x) for x in seq.preperiod],
            "period": [entry_to_json(x) for x in seq.period],
        }
    return {"preperiod": [entry_to_json(x) for x in seq], "period": []}


def word(g: GroupElement) -> str:
    return format_word(g)
