"""Orbits of hyperplane sequences under A(Gamma).

The classifying invariant runs the nested gate recursion between successive
carrier cosets. Two sequences of the same length lie in one orbit exactly
when their invariants agree, and the terminal cosets then hand us the
translating element directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .errors import PreconditionError, RaagError, WordError
from .gates import StandardCoset, gate_pair
from .geometry import Hyperplane, make_hyperplane
from .words import GroupElement, ball, format_word, invert


def carrier_coset(h: Hyperplane) -> StandardCoset:
    return h.carrier


def act(g: GroupElement, h: Hyperplane) -> Hyperplane:
    return make_hyperplane(h.label, g * h.base)


def act_all(g: GroupElement, seq) -> tuple:
    return tuple(act(g, h) for h in seq)


@dataclass(frozen=True)
class ClassifyingInvariant:
    labels: tuple
    s: tuple
    t: tuple
    terminal: StandardCoset

    def key(self) -> tuple:
        """Everything except the terminal coset; equal keys means one orbit."""
        return (self.labels, tuple(x.word for x in self.s), tuple(x.word for x in self.t))

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "s": [format_word(x) for x in self.s],
            "t": [format_word(x) for x in self.t],
            "terminal": self.terminal.to_dict(),
        }


def classifying_invariant(seq: Sequence[Hyperplane]) -> ClassifyingInvariant:
    seq = tuple(seq)
    if not seq:
        raise PreconditionError("hyperplane sequence must be nonempty")
    graph = seq[0].graph
    for h in seq:
        if h.graph != graph:
            raise WordError("hyperplanes live over different defining graphs")
    labels = tuple(h.label for h in seq)
    H = [h.carrier for h in seq]
    if len(seq) == 1:
        return ClassifyingInvariant(labels, (), (), H[0])

    pairs = [gate_pair(H[n], H[n + 1]) for n in range(len(H) - 1)]
    s = tuple(p.translation for p in pairs)
    t = []
    C = pairs[0].rhoA
    D = pairs[0].rhoB
    u = s[0]  # cumulative translator s_1 t_2 s_2 ... t_n s_n
    for n in range(1, len(pairs)):
        inner = gate_pair(D, pairs[n].rhoA)
        t.append(inner.translation)
        C = inner.rhoA.right_translate(invert(u))
        D = inner.rhoB.right_translate(s[n])
        u = u * inner.translation * s[n]
    return ClassifyingInvariant(labels, s, tuple(t), C)


def decide_orbit_equiv(seq1: Sequence[Hyperplane], seq2: Sequence[Hyperplane]) -> GroupElement | None:
    """The element g with g.seq1 = seq2, or None when no such g exists."""
    seq1, seq2 = tuple(seq1), tuple(seq2)
    if len(seq1) != len(seq2):
        raise PreconditionError(f"sequence lengths differ ({len(seq1)} != {len(seq2)})")
    inv1 = classifying_invariant(seq1)
    inv2 = classifying_invariant(seq2)
    if inv1.key() != inv2.key():
        return None
    g = inv2.terminal.base * invert(inv1.terminal.base)
    if act_all(g, seq1) != seq2:
        # equal invariants always yield a witness; reaching here is a bug
        raise RaagError("orbit witness failed verification")
    return g


# -- eventually periodic sequences ------------------------------------------


@dataclass(frozen=True)
class SymbolSeq:
    """``preperiod`` followed by ``period`` repeated forever."""

    preperiod: tuple
    period: tuple

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise PreconditionError("period must be nonempty")

    def __getitem__(self, i: int):
        pre = len(self.preperiod)
        if i < pre:
            return self.preperiod[i]
        return self.period[(i - pre) % len(self.period)]

    def __iter__(self):
        raise TypeError("SymbolSeq is infinite; use prefix(k)")

    def prefix(self, k: int) -> list:
        return [self[i] for i in range(k)]

    def map(self, f) -> "SymbolSeq":
        return SymbolSeq(tuple(map(f, self.preperiod)), tuple(map(f, self.period)))


def _agree_from(u: SymbolSeq, n: int, w: SymbolSeq, m: int) -> bool:
    # past both preperiods the shifted sequences are periodic with period lcm
    span = max(len(u.preperiod) - n, len(w.preperiod) - m, 0) + lcm(len(u.period), len(w.period))
    return all(u[n + i] == w[m + i] for i in range(span))


def tail_equivalent(u: SymbolSeq, w: SymbolSeq) -> tuple | None:
    """Lexicographically least (n, m) with u[n+i] = w[m+i] for all i, or None.

    A witness with n past u's first period can be pulled back by one period
    of u, so the least n is below ``len(preperiod) + len(period)``; the same
    bound holds for m once n is fixed.
    """
    for n in range(len(u.preperiod) + len(u.period)):
        for m in range(len(w.preperiod) + len(w.period)):
            if _agree_from(u, n, w, m):
                return (n, m)
    return None


# -- F_n ----------------------------------------------------------------------


@dataclass(frozen=True)
class FnVerdict:
    """Outcome of the bounded search for one g relating alpha to beta.

    ``witness`` is None when nothing was found within ``radius``;
    ``label_obstruction`` records that the label sequences alone already
    rule out every g, at any radius.
    """

    witness: GroupElement | None
    radius: int
    shifts: tuple
    label_obstruction: bool

    @property
    def status(self) -> str:
        return "witness" if self.witness is not None else "none-within-radius"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "witness": None if self.witness is None else format_word(self.witness),
            "radius": self.radius,
            "shifts": [list(s) if s is not None else None for s in self.shifts],
            "labelObstruction": self.label_obstruction,
        }


def _related(g: GroupElement, a, b):
    """Shift witness for g.a ~ b: tail shifts for SymbolSeqs, (0, 0) for equal finite lists."""
    if isinstance(a, SymbolSeq):
        return tail_equivalent(a.map(lambda h: act(g, h)), b)
    return (0, 0) if act_all(g, a) == tuple(b) else None


def _labels_compatible(a, b) -> bool:
    if isinstance(a, SymbolSeq) != isinstance(b, SymbolSeq):
        return False
    if isinstance(a, SymbolSeq):
        return tail_equivalent(a.map(lambda h: h.label), b.map(lambda h: h.label)) is not None
    return len(a) == len(b) and [h.label for h in a] == [h.label for h in b]


def decide_Fn(alpha: Sequence, beta: Sequence, search_radius: int) -> FnVerdict:
    """Search g with |g| <= search_radius such that g.alpha_i is tail equivalent to beta_i for all i.

    Entries are :class:`SymbolSeq` over hyperplanes (infinite sequences) or
    plain hyperplane tuples (finite sequences, which must match exactly).
    Candidates are tried in ShortLex order, so the witness is the ShortLex
    least element of the ball that works.
    """
    if isinstance(alpha, SymbolSeq) or isinstance(beta, SymbolSeq):
        raise PreconditionError("alpha and beta are tuples of coordinates, not single sequences")
    alpha, beta = list(alpha), list(beta)
    if len(alpha) != len(beta):
        raise PreconditionError(f"arity mismatch ({len(alpha)} != {len(beta)})")
    if not alpha:
        raise PreconditionError("empty tuples")
    graph = _first_hyperplane(alpha[0]).graph
    if not all(_labels_compatible(a, b) for a, b in zip(alpha, beta)):
        return FnVerdict(None, search_radius, (None,) * len(alpha), True)
    for g in ball(graph.identity(), search_radius):
        shifts = []
        for a, b in zip(alpha, beta):
            s = _related(g, a, b)
            if s is None:
                break
            shifts.append(s)
        else:
            return FnVerdict(g, search_radius, tuple(shifts), False)
    return FnVerdict(None, search_radius, (None,) * len(alpha), False)


def _first_hyperplane(x) -> Hyperplane:
    if isinstance(x, SymbolSeq):
        return x[0]
    if not x:
        raise PreconditionError("empty hyperplane sequence")
    return x[0]

