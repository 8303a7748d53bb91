"""Finite cube complexes carried as 2-skeleta."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ComplexError


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str

    def start(self, direction: int) -> str:
        return self.src if direction > 0 else self.dst

    def end(self, direction: int) -> str:
        return self.dst if direction > 0 else self.src


Side = tuple  # (edge id, direction in {+1, -1})


@dataclass(frozen=True)
class CubeComplex:
    """Vertices, directed edges (loops allowed) and squares.

    A square is four ``(edge_id, direction)`` pairs read around its boundary;
    consecutive sides must meet and the last must end where the first starts.
    Cubes of dimension three and up are implied by flag completion of links.
    """

    vertices: tuple
    edges: tuple
    squares: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(
            self,
            "squares",
            tuple(tuple((str(e), int(d)) for e, d in sq) for sq in self.squares),
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise ComplexError("duplicate vertex")
        vset = set(self.vertices)
        ids = set()
        for e in self.edges:
            if e.id in ids:
                raise ComplexError(f"duplicate edge id {e.id!r}")
            ids.add(e.id)
            if e.src not in vset or e.dst not in vset:
                raise ComplexError(f"edge {e.id!r} has an unknown endpoint")
        for n, sq in enumerate(self.squares):
            if len(sq) != 4:
                raise ComplexError(f"square {n} does not have four sides")
            for e, d in sq:
                if e not in ids:
                    raise ComplexError(f"square {n} uses unknown edge {e!r}")
                if d not in (1, -1):
                    raise ComplexError(f"square {n} has direction {d}")
            for i in range(4):
                e0, d0 = sq[i]
                e1, d1 = sq[(i + 1) % 4]
                if self.edge(e0).end(d0) != self.edge(e1).start(d1):
                    raise ComplexError(f"square {n} boundary does not close at side {i}")

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._edge_index[edge_id]
        except AttributeError:
            object.__setattr__(self, "_edge_index", {e.id: e for e in self.edges})
            return self._edge_index[edge_id]

    @property
    def edge_ids(self) -> tuple:
        return tuple(e.id for e in self.edges)
