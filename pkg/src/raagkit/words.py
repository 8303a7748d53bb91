"""Exact arithmetic in A(Gamma).

Letters are encoded as ints ``2 * vertex_index + (1 if inverse else 0)`` so
that the natural int order is the letter order used for ShortLex:
``a < a^-1 < b < b^-1 < ...`` in declaration order. A :class:`GroupElement`
always stores the ShortLex-least geodesic word of the element.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, NamedTuple

from .errors import WordError
from .graph import DefiningGraph


class Letter(NamedTuple):
    vertex: str
    sign: int  # +1 or -1

    def __str__(self):
        return self.vertex if self.sign > 0 else f"{self.vertex}^-1"


def encode(graph: DefiningGraph, letter) -> int:
    if isinstance(letter, int):
        return letter
    vertex, sign = letter
    try:
        i = graph.index[vertex]
    except KeyError:
        raise WordError(f"letter over unknown vertex {vertex!r}") from None
    if sign not in (1, -1):
        raise WordError(f"bad sign {sign!r}")
    return 2 * i + (sign < 0)


def decode(graph: DefiningGraph, code: int) -> Letter:
    return Letter(graph.vertices[code >> 1], -1 if code & 1 else 1)


# -- kernel ------------------------------------------------------------------
# The functions below work on lists of letter codes and the graph's
# ``blocks`` table: ``blocks[v]`` has bit u set iff u == v or u, v do not
# commute, i.e. a v-letter cannot be shuffled past a u-letter.


def _push(word: list, code: int, blocks) -> None:
    """Right-multiply the reduced word in place by one letter."""
    v = code >> 1
    bv = blocks[v]
    for k in range(len(word) - 1, -1, -1):
        c = word[k]
        u = c >> 1
        if u == v:
            if c == code ^ 1:
                del word[k]
                return
            break
        if bv >> u & 1:
            break
    word.append(code)


def _reduce(codes: Iterable[int], blocks) -> list:
    word: list = []
    for c in codes:
        _push(word, c, blocks)
    return word


def _shortlex(word: list, blocks) -> tuple:
    """Lexicographically least shuffle of a reduced word (greedy on the heap)."""
    remaining = list(word)
    out = []
    while remaining:
        seen = 0
        best = -1
        best_pos = -1
        for pos, c in enumerate(remaining):
            v = c >> 1
            if not seen & blocks[v] and (best < 0 or c < best):
                best, best_pos = c, pos
            seen |= 1 << v
        out.append(best)
        del remaining[best_pos]
    return tuple(out)


def _front(word, blocks) -> dict:
    """Letters that can be shuffled to the front: code -> position."""
    seen = 0
    out = {}
    for pos, c in enumerate(word):
        v = c >> 1
        if not seen & blocks[v]:
            out[c] = pos
        seen |= 1 << v
    return out


def _split_prefix(word, mask: int, blocks) -> tuple:
    """Split a reduced word as (p, r) with p the largest left divisor
    supported in ``mask`` and word = p r."""
    rest = list(word)
    prefix = []
    while True:
        seen = 0
        found = -1
        for pos, c in enumerate(rest):
            v = c >> 1
            if mask >> v & 1 and not seen & blocks[v]:
                found = pos
                break
            seen |= 1 << v
        if found < 0:
            return prefix, rest
        prefix.append(rest.pop(found))


def _common_prefix(w1, w2, blocks) -> list:
    """Largest common left divisor of two reduced words."""
    r1, r2 = list(w1), list(w2)
    out = []
    while True:
        f1 = _front(r1, blocks)
        f2 = _front(r2, blocks)
        common = f1.keys() & f2.keys()
        if not common:
            return out
        c = min(common)
        del r1[f1[c]]
        del r2[f2[c]]
        out.append(c)


# -- elements ----------------------------------------------------------------


class GroupElement:
    """An element of A(Gamma) held in ShortLex normal form.

    Supports ``g * h``, ``~g`` (inverse), ``g ** n``, ``len(g)`` (word
    length), equality and hashing. Use :func:`normal_form` or
    :func:`parse_word` to build one from an arbitrary word.
    """

    __slots__ = ("graph", "word", "_hash")

    def __init__(self, graph: DefiningGraph, word: tuple):
        # ``word`` must already be canonical
        self.graph = graph
        self.word = word
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.word == other.word and (self.graph is other.graph or self.graph == other.graph)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.word)
        return self._hash

    def __lt__(self, other):
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __len__(self):
        return len(self.word)

    def __bool__(self):
        return True

    def __mul__(self, other):
        return multiply(self, other)

    def __invert__(self):
        return invert(self)

    def __pow__(self, n: int):
        if n < 0:
            return invert(self) ** -n
        blocks = self.graph.blocks
        word: list = []
        for _ in range(n):
            for c in self.word:
                _push(word, c, blocks)
        return GroupElement(self.graph, _shortlex(word, blocks))

    @property
    def letters(self) -> tuple:
        return tuple(decode(self.graph, c) for c in self.word)

    def is_identity(self) -> bool:
        return not self.word

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"<{format_word(self) or '1'}>"


def normal_form(graph: DefiningGraph, letters: Iterable) -> GroupElement:
    """Canonical element for a word given as Letters, (vertex, sign) pairs or codes."""
    blocks = graph.blocks
    word = _reduce((encode(graph, x) for x in letters), blocks)
    return GroupElement(graph, _shortlex(word, blocks))


def _check_same(g: GroupElement, h: GroupElement) -> None:
    if g.graph is not h.graph and g.graph != h.graph:
        raise WordError("elements live over different defining graphs")


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    _check_same(g, h)
    if not h.word:
        return g
    if not g.word:
        return h
    blocks = g.graph.blocks
    word = list(g.word)
    for c in h.word:
        _push(word, c, blocks)
    return GroupElement(g.graph, _shortlex(word, blocks))


def product(graph: DefiningGraph, *elements: GroupElement) -> GroupElement:
    blocks = graph.blocks
    word: list = []
    for g in elements:
        _check_same(GroupElement(graph, ()), g)
        for c in g.word:
            _push(word, c, blocks)
    return GroupElement(graph, _shortlex(word, blocks))


def invert(g: GroupElement) -> GroupElement:
    if not g.word:
        return g
    return GroupElement(g.graph, _shortlex([c ^ 1 for c in reversed(g.word)], g.graph.blocks))


def geodesic_length(g: GroupElement) -> int:
    return len(g.word)


def support(g: GroupElement) -> frozenset:
    return g.graph.names(support_mask(g))


def support_mask(g: GroupElement) -> int:
    m = 0
    for c in g.word:
        m |= 1 << (c >> 1)
    return m


def in_standard_subgroup(g: GroupElement, U: Iterable[str]) -> bool:
    mask = g.graph.mask(U)
    return support_mask(g) & ~mask == 0


def split_prefix(g: GroupElement, mask: int) -> tuple:
    """``(p, r)`` with g = p r and p the largest left divisor of g in <mask>."""
    blocks = g.graph.blocks
    p, r = _split_prefix(g.word, mask, blocks)
    return (
        GroupElement(g.graph, _shortlex(p, blocks)),
        GroupElement(g.graph, _shortlex(r, blocks)),
    )


def common_prefix(g: GroupElement, h: GroupElement) -> GroupElement:
    _check_same(g, h)
    blocks = g.graph.blocks
    return GroupElement(g.graph, _shortlex(_common_prefix(g.word, h.word, blocks), blocks))


def generators(graph: DefiningGraph) -> tuple:
    """The 2|V| generator letters as elements, in letter order."""
    return tuple(GroupElement(graph, (c,)) for c in range(2 * len(graph.vertices)))


def ball(center: GroupElement, radius: int) -> list:
    """All elements within ``radius`` of ``center``, ordered by (length, word) of ``center^-1 x``."""
    graph = center.graph
    out = [center * g for g in _identity_ball(graph, radius)]
    return out


_BALLS: dict = {}


def _identity_ball(graph: DefiningGraph, radius: int) -> tuple:
    key = (graph, radius)
    cached = _BALLS.get(key)
    if cached is not None:
        return cached
    blocks = graph.blocks
    n = 2 * len(graph.vertices)
    seen = {(): 0}
    frontier = deque([()])
    while frontier:
        w = frontier.popleft()
        if len(w) == radius:
            continue
        for c in range(n):
            word = list(w)
            _push(word, c, blocks)
            if len(word) <= len(w):
                continue
            nw = _shortlex(word, blocks)
            if nw not in seen:
                seen[nw] = len(nw)
                frontier.append(nw)
    result = tuple(GroupElement(graph, w) for w in sorted(seen, key=lambda w: (len(w), w)))
    _BALLS[key] = result
    return result


def sphere(graph: DefiningGraph, radius: int) -> list:
    return [g for g in _identity_ball(graph, radius) if len(g) == radius]


def parse_word(graph: DefiningGraph, text: str) -> GroupElement:
    """Parse ``"a b^-1 c"``; ``"1"`` or the empty string is the identity."""
    return normal_form(graph, parse_letters(graph, text))


def parse_letters(graph: DefiningGraph, text: str) -> list:
    letters = []
    for tok in text.split():
        if tok == "1":
            continue
        if tok.endswith("^-1"):
            name, sign = tok[:-3], -1
        elif tok.endswith("^1"):
            name, sign = tok[:-2], 1
        else:
            name, sign = tok, 1
        if name not in graph.index:
            raise WordError(f"unknown generator {name!r} in word {text!r}")
        letters.append(Letter(name, sign))
    return letters


def format_word(g: GroupElement) -> str:
    return " ".join(str(decode(g.graph, c)) for c in g.word)


def iter_letters(g: GroupElement) -> Iterator[Letter]:
    for c in g.word:
        yield decode(g.graph, c)
