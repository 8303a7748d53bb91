"""Batch command-line front end.

Every command prints one JSON report holding the command name, the
effective config, a digest of the graph or complex it ran on, and the
result. Exit status: 0 ok, 1 domain error, 2 indeterminate verdict,
3 malformed input or usage.
"""
from __future__ import annotations

import argparse
import sys

from . import formats as fmt
from .config import load_config
from .errors import HorizonInsufficient, MalformedInput, RaagError
from .gates import coset_distance, gate_pair, gate_point
from .geometry import (
    distance,
    dual_hyperplanes,
    hyperplane_of_edge,
    hyperplanes_contact,
    hyperplanes_cross,
    median,
    contact_graph_ball,
)
from .hyperbolic import delta_estimate, fiber_sample, gromov_boundary_equal, gromov_product
from .invariants import (
    SymbolSeq,
    act,
    classifying_invariant,
    decide_Fn,
    decide_orbit_equiv,
    tail_equivalent,
)
from .rays import (
    infinite_label_classes,
    label_spectrum,
    order_consistency_check,
    ray_vertex,
    roller_adjacent,
    separating_hyperplanes,
)
from .special import (
    check_special,
    convexity_probe,
    crossing_graph,
    develop_path,
    pi1_embedding,
    pi1_presentation,
    salvetti_local_isometry,
)
from .words import geodesic_length, parse_letters, product

OK, DOMAIN, INDETERMINATE, MALFORMED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


class Context:
    def __init__(self, args):
        self.args = args
        self.config = load_config(args.config)
        self.subject = None  # what the digest is taken over

    @property
    def graph(self):
        if getattr(self, "_graph", None) is None:
            if self.args.graph is None:
                raise MalformedInput("--graph is required")
            data = fmt.read_json(self.args.graph)
            self._graph = fmt.parse_graph(data)
            self.subject = self._graph.to_dict()
        return self._graph

    def complex(self):
        data = fmt.read_json(self.args.complex)
        X = fmt.parse_complex(data)
        self.subject = fmt.complex_to_dict(X)
        return X

    def el(self, text):
        return fmt.parse_element(self.graph, text)

    def words(self, n):
        ws = self.args.word or []
        if len(ws) != n:
            raise MalformedInput(f"expected {n} --word arguments, got {len(ws)}")
        return [self.el(w) for w in ws]

    def rays(self, n):
        rs = self.args.ray or []
        if len(rs) != n:
            raise MalformedInput(f"expected {n} --ray arguments, got {len(rs)}")
        return [fmt.parse_ray(self.graph, fmt.read_json(r)) for r in rs]

    def hyperplanes(self, n):
        hs = self.args.hyperplane or []
        if len(hs) != n:
            raise MalformedInput(f"expected {n} --hyperplane arguments, got {len(hs)}")
        return [fmt.parse_hyperplane(self.graph, fmt.read_json(h)) for h in hs]

    def seqs(self, n):
        ss = self.args.seq or []
        if len(ss) != n:
            raise MalformedInput(f"expected {n} --seq arguments, got {len(ss)}")
        return [fmt.parse_sequence(self.graph, fmt.read_json(s)) for s in ss]

    def salvetti_map(self, X):
        if self.args.map:
            return fmt.parse_map(X, fmt.read_json(self.args.map))
        return salvetti_local_isometry(X, self.config.dimensionCap)


w = fmt.word
COMMANDS = {}


def command(name, *options):
    def deco(fn):
        COMMANDS[name] = (fn, options)
        return fn

    return deco


# -- words and geometry ------------------------------------------------------------------


@command("nf", "word")
def _nf(ctx):
    (g,) = ctx.words(1)
    return {"word": w(g), "length": len(g)}, OK


@command("mul", "word")
def _mul(ctx):
    gs = [ctx.el(x) for x in ctx.args.word or []]
    if not gs:
        raise MalformedInput("mul needs at least one --word")
    return {"word": w(product(ctx.graph, *gs))}, OK


@command("len", "word")
def _len(ctx):
    (g,) = ctx.words(1)
    return geodesic_length(g), OK


@command("dist", "word")
def _dist(ctx):
    a, b = ctx.words(2)
    return distance(a, b), OK


@command("median", "word")
def _median(ctx):
    a, b, c = ctx.words(3)
    return {"median": w(median(a, b, c))}, OK


@command("gate", "word", "coset")
def _gate(ctx):
    (x,) = ctx.words(1)
    (A,) = _cosets(ctx, 1)
    return {"gate": w(gate_point(x, A))}, OK


def _cosets(ctx, n):
    cs = ctx.args.coset or []
    if len(cs) != n:
        raise MalformedInput(f"expected {n} --coset arguments, got {len(cs)}")
    return [fmt.parse_coset(ctx.graph, fmt.read_json(c)) for c in cs]


@command("gate-pair", "coset")
def _gate_pair(ctx):
    A, B = _cosets(ctx, 2)
    return {**gate_pair(A, B).to_dict(), "distance": coset_distance(A, B)}, OK


@command("hp-of-edge", "word", "letter")
def _hp_of_edge(ctx):
    (x,) = ctx.words(1)
    with fmt._malformed("letter"):
        letters = parse_letters(ctx.graph, ctx.args.letter or "")
        if len(letters) != 1:
            raise MalformedInput("--letter must be a single generator or inverse")
    return hyperplane_of_edge(x, letters[0]).to_dict(), OK


@command("duals", "word")
def _duals(ctx):
    a, b = ctx.words(2)
    return [h.to_dict() for h in dual_hyperplanes(a, b)], OK


@command("cross", "hyperplane")
def _cross(ctx):
    h, k = ctx.hyperplanes(2)
    return {"cross": hyperplanes_cross(h, k), "contact": hyperplanes_contact(h, k)}, OK


@command("contact-ball", "word", "radius")
def _contact_ball(ctx):
    (c,) = ctx.words(1)
    g = contact_graph_ball(c, _required(ctx, "radius"), ctx.config.ballCap)
    nodes = list(g.nodes)
    index = {h: i for i, h in enumerate(nodes)}
    edges = sorted((min(index[a], index[b]), max(index[a], index[b]), d["cross"]) for a, b, d in g.edges(data=True))
    return {
        "vertices": [h.to_dict() for h in nodes],
        "edges": [{"pair": [i, j], "cross": x} for i, j, x in edges],
    }, OK


def _required(ctx, name):
    value = getattr(ctx.args, name)
    if value is None:
        raise MalformedInput(f"--{name} is required")
    return value


# -- invariants -----------------------------------------------------------------------


def _finite(seq):
    if isinstance(seq, SymbolSeq):
        raise MalformedInput("expected a finite hyperplane sequence (empty period)")
    if not seq:
        raise MalformedInput("hyperplane sequence is empty")
    return seq


@command("invariant", "seq")
def _invariant(ctx):
    (s,) = ctx.seqs(1)
    return classifying_invariant(_finite(s)).to_dict(), OK


@command("orbit-equiv", "seq")
def _orbit_equiv(ctx):
    s1, s2 = ctx.seqs(2)
    g = decide_orbit_equiv(_finite(s1), _finite(s2))
    return {"witness": None if g is None else (w(g) or "1")}, OK


@command("act", "word", "hyperplane", "seq")
def _act(ctx):
    (g,) = ctx.words(1)
    if ctx.args.seq:
        (s,) = ctx.seqs(1)
        return fmt.sequence_to_dict(tuple(act(g, h) for h in _finite(s))), OK
    (h,) = ctx.hyperplanes(1)
    return act(g, h).to_dict(), OK


@command("tail-equiv", "seq")
def _tail_equiv(ctx):
    ss = [fmt.read_json(s) for s in ctx.args.seq or []]
    if len(ss) != 2:
        raise MalformedInput("tail-equiv needs two --seq arguments")
    u, v = (_symbols(ctx, s) for s in ss)
    shift = tail_equivalent(u, v)
    return {"equivalent": shift is not None, "shift": None if shift is None else list(shift)}, OK


def _symbols(ctx, data):
    with fmt._malformed("sequence"):
        entries = list(data.get("preperiod", [])) + list(data.get("period", [])) if isinstance(data, dict) else []
    # bare symbols need no graph; hyperplane entries do
    graph = ctx.graph if any(isinstance(x, dict) for x in entries) else None
    seq = fmt.parse_sequence(graph, data)
    if not isinstance(seq, SymbolSeq):
        raise MalformedInput("tail-equiv needs a nonempty period")
    return seq


@command("fn-equiv", "alpha", "beta", "radius")
def _fn_equiv(ctx):
    alpha = fmt.read_json(_required(ctx, "alpha"))
    beta = fmt.read_json(_required(ctx, "beta"))
    if not isinstance(alpha, list) or not isinstance(beta, list):
        raise MalformedInput("--alpha and --beta must be lists of sequences")
    a = [fmt.parse_sequence(ctx.graph, x) for x in alpha]
    b = [fmt.parse_sequence(ctx.graph, x) for x in beta]
    radius = ctx.args.radius if ctx.args.radius is not None else ctx.config.searchRadius
    verdict = decide_Fn(a, b, radius)
    code = OK if verdict.witness is not None or verdict.label_obstruction else INDETERMINATE
    return verdict.to_dict(), code


# -- rays ---------------------------------------------------------------------------------


@command("ray-vertex", "ray", "index")
def _ray_vertex(ctx):
    (r,) = ctx.rays(1)
    return {"vertex": w(ray_vertex(r, _required(ctx, "index")))}, OK


@command("ray-classes", "ray")
def _ray_classes(ctx):
    (r,) = ctx.rays(1)
    return sorted(infinite_label_classes(r), key=ctx.graph.index.__getitem__), OK


@command("spectrum", "ray", "word", "label", "count")
def _spectrum(ctx):
    (r,) = ctx.rays(1)
    (x,) = ctx.words(1)
    s = label_spectrum(r, x, _required(ctx, "label"), _required(ctx, "count"), ctx.config.horizon)
    return s.to_dict(), OK


@command("order-check", "ray", "word", "label", "count")
def _order_check(ctx):
    (r,) = ctx.rays(1)
    x, y = ctx.words(2)
    ok = order_consistency_check(r, x, y, _required(ctx, "label"), _required(ctx, "count"), ctx.config.horizon)
    return {"consistent": ok}, OK


@command("separators", "ray")
def _separators(ctx):
    r1, r2 = ctx.rays(2)
    sep = separating_hyperplanes(r1, r2, ctx.config.horizon)
    return sep.to_dict(), OK if sep.exact else INDETERMINATE


@command("roller-adjacent", "ray")
def _roller_adjacent(ctx):
    r1, r2 = ctx.rays(2)
    verdict = roller_adjacent(r1, r2, ctx.config.horizon)
    return {"adjacent": verdict}, INDETERMINATE if verdict is None else OK


# -- complexes ----------------------------------------------------------------------------


@command("check-special", "complex")
def _check_special(ctx):
    return check_special(ctx.complex(), ctx.config.dimensionCap).to_dict(), OK


@command("crossing-graph", "complex")
def _crossing_graph(ctx):
    return crossing_graph(ctx.complex(), ctx.config.dimensionCap).to_dict(), OK


@command("salvetti-map", "complex")
def _salvetti_map(ctx):
    m = salvetti_local_isometry(ctx.complex(), ctx.config.dimensionCap)
    return m.to_dict(), OK


@command("pi1-embed", "complex", "map", "basepoint")
def _pi1_embed(ctx):
    X = ctx.complex()
    m = ctx.salvetti_map(X)
    pres = pi1_presentation(X, ctx.args.basepoint)
    images = pi1_embedding(X, m, ctx.args.basepoint)
    return {"presentation": pres.to_dict(), "images": {e: w(g) for e, g in images.items()}}, OK


@command("develop", "complex", "map", "path", "basepoint")
def _develop(ctx):
    X = ctx.complex()
    m = ctx.salvetti_map(X)
    g = develop_path(X, m, fmt.parse_path(ctx.args.path or ""), ctx.args.basepoint)
    return {"element": w(g)}, OK


@command("convexity-probe", "complex", "map", "radius", "basepoint")
def _convexity_probe(ctx):
    X = ctx.complex()
    m = ctx.salvetti_map(X)
    ok = convexity_probe(X, m, _required(ctx, "radius"), ctx.config.ballCap, ctx.args.basepoint)
    return {"convex": ok}, OK


# -- hyperbolic ---------------------------------------------------------------------------


@command("gromov-product", "word", "base")
def _gromov_product(ctx):
    x, y = ctx.words(2)
    base = ctx.el(ctx.args.base or "")
    return {"product": str(gromov_product(x, y, base))}, OK


@command("delta", "word", "radius")
def _delta(ctx):
    center = ctx.el(ctx.args.word[0]) if ctx.args.word else ctx.graph.identity()
    d = delta_estimate(center, _required(ctx, "radius"), ctx.config.ballCap)
    return {"ballDelta": str(d)}, OK


@command("boundary-equal", "ray")
def _boundary_equal(ctx):
    r1, r2 = ctx.rays(2)
    v = gromov_boundary_equal(r1, r2, ctx.config.horizon)
    return v.to_dict(), INDETERMINATE if v.verdict == "indeterminate" else OK


@command("fiber-sample", "rays")
def _fiber_sample(ctx):
    data = fmt.read_json(_required(ctx, "rays"))
    if not isinstance(data, list) or not data:
        raise MalformedInput("--rays must be a nonempty list of rays")
    rays = [fmt.parse_ray(ctx.graph, r) for r in data]
    return fiber_sample(rays, ctx.config.horizon).to_dict(), OK


# -- driver ---------------------------------------------------------------------------------

_OPTIONS = {
    "word": dict(action="append", help="group element, e.g. 'a b^-1' (repeatable)"),
    "coset": dict(action="append", help="coset JSON (file or inline; repeatable)"),
    "letter": dict(help="generator or inverse, e.g. 'a^-1'"),
    "hyperplane": dict(action="append", help="hyperplane JSON (repeatable)"),
    "radius": dict(type=int),
    "seq": dict(action="append", help="sequence JSON (repeatable)"),
    "alpha": dict(help="list of sequences"),
    "beta": dict(help="list of sequences"),
    "ray": dict(action="append", help="ray JSON (repeatable)"),
    "rays": dict(help="list of rays"),
    "index": dict(type=int),
    "label": dict(),
    "count": dict(type=int),
    "complex": dict(help="complex JSON"),
    "map": dict(help="map JSON; defaults to the Salvetti local isometry"),
    "path": dict(help="edge path, e.g. 'e1 e2^-1'"),
    "basepoint": dict(),
    "base": dict(help="base point of the Gromov product"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="raagkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, (_, options) in COMMANDS.items():
        p = sub.add_parser(name)
        p.add_argument("--graph", help="defining graph JSON (file or inline)")
        p.add_argument("--config", help="JSON file overriding the default config")
        for opt in options:
            p.add_argument(f"--{opt}", **_OPTIONS[opt])
    return parser


def run(argv) -> tuple:
    """Run one command; returns (report text, exit status)."""
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise MalformedInput("no command given")
        ctx = Context(args)
        fn, _ = COMMANDS[args.command]
        try:
            result, code = fn(ctx)
            status = "ok" if code == OK else "indeterminate"
        except HorizonInsufficient as exc:
            result, code, status = {"error": str(exc)}, INDETERMINATE, "indeterminate"
        except RaagError as exc:
            result, code, status = {"error": str(exc)}, DOMAIN, "error"
        report = {
            "command": args.command,
            "status": status,
            "config": ctx.config.to_dict(),
            "digest": None if ctx.subject is None else fmt.digest(ctx.subject),
            "result": result,
        }
        return fmt.dumps(report), code
    except MalformedInput as exc:
        return fmt.dumps({"status": "malformed", "error": str(exc)}), MALFORMED


def main(argv=None) -> int:
    text, code = run(sys.argv[1:] if argv is None else argv)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
