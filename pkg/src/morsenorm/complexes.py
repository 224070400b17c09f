"""Finite simplicial complexes and their Hasse diagrams.

A complex is stored as an explicit, downward-closed set of simplices
together with immediate-face and immediate-coface lookup tables.  All
iteration is in the canonical order (dimension first, then vertex
sequence), so every derived structure is reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping


class ComplexError(ValueError):
    """Malformed complex, facet, or simplex lookup outside the complex."""


class Simplex:
    """A simplex, stored as a strictly increasing tuple of vertex ids.

    Vertex ids are non-negative integers.  Input order does not matter;
    vertices are sorted on construction.  Repeated or negative vertices
    are rejected.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int]):
        vs = tuple(sorted(vertices))
        if not vs:
            raise ComplexError("empty simplex")
        for v in vs:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ComplexError(f"vertex id must be an integer, got {v!r}")
            if v < 0:
                raise ComplexError(f"negative vertex id {v}")
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise ComplexError(f"repeated vertex {a}")
        object.__setattr__(self, "vertices", vs)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def faces(self) -> tuple[Simplex, ...]:
        """Immediate faces: drop one vertex.  Empty for a vertex."""
        if self.dim == 0:
            return ()
        return tuple(Simplex(c) for c in combinations(self.vertices, self.dim))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.dim, self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Simplex) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __lt__(self, other: Simplex) -> bool:
        return self.sort_key() < other.sort_key()

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Simplex is immutable")

    def __repr__(self) -> str:
        return f"Simplex({', '.join(map(str, self.vertices))})"

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.vertices)) + "}"


class SimplicialComplex:
    """A finite, non-empty, downward-closed set of simplices.

    Immutable after construction.  Use :func:`build_complex` to create
    one from a list of facets; the constructor itself requires the full
    simplex set and checks downward closure.
    """

    def __init__(self, simplices: Iterable[Simplex]):
        ordered = sorted(set(simplices))
        if not ordered:
            raise ComplexError("empty complex")
        present = frozenset(ordered)
        faces: dict[Simplex, frozenset[Simplex]] = {}
        cofaces: dict[Simplex, set[Simplex]] = {s: set() for s in ordered}
        for s in ordered:
            fs = s.faces()
            for f in fs:
                if f not in present:
                    raise ComplexError(f"not downward closed: missing face {f} of {s}")
                cofaces[f].add(s)
            faces[s] = frozenset(fs)
        self._simplices = tuple(ordered)
        self._present = present
        self._faces = faces
        self._cofaces = {s: frozenset(c) for s, c in cofaces.items()}

    @property
    def simplices(self) -> tuple[Simplex, ...]:
        """All simplices in canonical order (dimension, then vertices)."""
        return self._simplices

    @property
    def dim(self) -> int:
        return self._simplices[-1].dim

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(s.vertices[0] for s in self._simplices if s.dim == 0)

    def immediate_faces(self, s: Simplex) -> frozenset[Simplex]:
        try:
            return self._faces[s]
        except KeyError:
            raise ComplexError(f"unknown simplex {s}") from None

    def immediate_cofaces(self, s: Simplex) -> frozenset[Simplex]:
        try:
            return self._cofaces[s]
        except KeyError:
            raise ComplexError(f"unknown simplex {s}") from None

    def __contains__(self, s: object) -> bool:
        return s in self._present

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self._simplices)

    def __len__(self) -> int:
        return len(self._simplices)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self._present == other._present

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self)} simplices, dim {self.dim})"


def build_complex(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of a facet list.

    Facets need not be maximal or distinct; duplicates collapse.  An
    empty facet list is an error, as is a facet with a repeated vertex.
    """
    closure: set[Simplex] = set()
    seen_any = False
    for facet in facets:
        seen_any = True
        raw = tuple(facet)
        try:
            top = Simplex(raw)
        except ComplexError as err:
            raise ComplexError(f"degenerate facet {list(raw)}: {err}") from None
        for k in range(1, len(top.vertices) + 1):
            for sub in combinations(top.vertices, k):
                closure.add(Simplex(sub))
    if not seen_any:
        raise ComplexError("empty complex")
    return SimplicialComplex(closure)


@dataclass(frozen=True)
class Digraph:
    """A directed graph on simplices with a matched flag per edge.

    ``succ`` maps each node to its out-neighbours as (target, matched)
    pairs in canonical target order.  No parallel edges.
    """

    nodes: tuple[Simplex, ...]
    succ: Mapping[Simplex, tuple[tuple[Simplex, bool], ...]]

    @staticmethod
    def build(nodes: Iterable[Simplex], edges: Mapping[tuple[Simplex, Simplex], bool]) -> Digraph:
        ordered = tuple(sorted(nodes))
        present = set(ordered)
        succ: dict[Simplex, list[tuple[Simplex, bool]]] = {u: [] for u in ordered}
        for (u, v), matched in edges.items():
            if u not in present or v not in present:
                raise ComplexError(f"edge endpoint outside node set: {u} -> {v}")
            succ[u].append((v, matched))
        frozen = {u: tuple(sorted(out)) for u, out in succ.items()}
        return Digraph(ordered, frozen)

    def edges(self) -> list[tuple[Simplex, Simplex, bool]]:
        """All edges as (source, target, matched), canonically ordered."""
        return [(u, v, m) for u in self.nodes for v, m in self.succ[u]]

    @property
    def n_edges(self) -> int:
        return sum(len(self.succ[u]) for u in self.nodes)

    @property
    def n_matched(self) -> int:
        return sum(1 for _, _, m in self.edges() if m)


def hasse_diagram(cx: SimplicialComplex) -> Digraph:
    """Hasse diagram of the face poset: one edge per coface/face pair,
    directed coface to face, all unmatched."""
    edges = {}
    for s in cx:
        for f in cx.immediate_faces(s):
            edges[(s, f)] = False
    return Digraph.build(cx.simplices, edges)
