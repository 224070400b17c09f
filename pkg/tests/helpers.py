"""Shared fixtures and independent cross-check oracles for the suite.

The oracles here deliberately avoid the library's own graph machinery:
heights are recomputed by enumerating paths over plain edge lists, and
admissibility is rechecked against the definition of a closed V-path.
Expected values frozen in the tests were produced by these functions.
"""

from __future__ import annotations

import random
from fractions import Fraction

from morsenorm import (
    MorseFunction,
    Simplex,
    SimplicialComplex,
    VectorField,
    build_complex,
    random_complex,
    random_field,
)

# --- canonical small complexes -------------------------------------------

TRIANGLE_BOUNDARY = [[0, 1], [0, 2], [1, 2]]
TRIANGLE_FULL = [[0, 1, 2]]


def sx(*vertices: int) -> Simplex:
    return Simplex(vertices)


def triangle_boundary() -> SimplicialComplex:
    return build_complex(TRIANGLE_BOUNDARY)


def two_pair_field() -> VectorField:
    return VectorField({sx(0): sx(0, 1), sx(1): sx(1, 2)})


def three_pair_field() -> VectorField:
    return VectorField({sx(0): sx(0, 1), sx(1): sx(1, 2), sx(2): sx(0, 2)})


# The modified Hasse diagram of the two-pair field on the triangle
# boundary, written out by hand: (source, target, matched).
RUNNING_DIAGRAM = [
    ((0,), (0, 1), True),
    ((1,), (1, 2), True),
    ((0, 1), (1,), False),
    ((1, 2), (2,), False),
    ((0, 2), (0,), False),
    ((0, 2), (2,), False),
]

# Heights of the running example, frozen from
# brute_height(RUNNING_NODES, RUNNING_DIAGRAM).
RUNNING_NODES = [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]
RUNNING_HEIGHT = {
    (0,): 2,
    (1,): 1,
    (2,): 0,
    (0, 1): 2,
    (0, 2): 3,
    (1, 2): 1,
}

# --- independent oracles ---------------------------------------------------


def brute_height(
    nodes: list[tuple[int, ...]],
    edges: list[tuple[tuple[int, ...], tuple[int, ...], bool]],
) -> dict[tuple[int, ...], int]:
    """Height per node of an explicit edge list: enumerate every simple
    directed path from each node, counting unmatched edges."""
    out_edges: dict[tuple[int, ...], list[tuple[tuple[int, ...], int]]] = {u: [] for u in nodes}
    for u, v, matched in edges:
        out_edges[u].append((v, 0 if matched else 1))

    def longest(u, visited):
        best = 0
        for v, weight in out_edges[u]:
            if v not in visited:
                best = max(best, weight + longest(v, visited | {v}))
        return best

    return {u: longest(u, {u}) for u in nodes}


def node_list(cx: SimplicialComplex) -> list[tuple[int, ...]]:
    return [s.vertices for s in cx]


def diagram_of(cx: SimplicialComplex, field: VectorField) -> list[tuple[tuple[int, ...], tuple[int, ...], bool]]:
    """Modified Hasse edge list built directly from the definitions,
    without the library's Digraph type."""
    edges = []
    for s in cx:
        for f in cx.immediate_faces(s):
            if field.pairs.get(f) == s:
                edges.append((f.vertices, s.vertices, True))
            else:
                edges.append((s.vertices, f.vertices, False))
    return edges


def has_closed_vpath(cx: SimplicialComplex, field: VectorField) -> bool:
    """Definitional admissibility check: is there a cycle in the
    relation s -> s' with s' a face of the pairing's value at s,
    s' != s, and s' itself paired up?"""
    succ = {
        s: [f for f in cx.immediate_faces(field.pairs[s]) if f != s and f in field.pairs]
        for s in field.pairs
    }

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {s: WHITE for s in succ}

    def visit(s) -> bool:
        color[s] = GRAY
        for nxt in succ[s]:
            if color[nxt] == GRAY or (color[nxt] == WHITE and visit(nxt)):
                return True
        color[s] = BLACK
        return False

    return any(color[s] == WHITE and visit(s) for s in sorted(succ))


def all_matchings(cx: SimplicialComplex, size: int) -> list[VectorField]:
    """Every vector field with exactly ``size`` pairs, by brute force."""
    candidates = [(s, t) for s in cx for t in sorted(cx.immediate_cofaces(s))]
    found: list[VectorField] = []

    def extend(start: int, chosen: list, used: set) -> None:
        if len(chosen) == size:
            found.append(VectorField(dict(chosen)))
            return
        for i in range(start, len(candidates)):
            s, t = candidates[i]
            if s in used or t in used:
                continue
            extend(i + 1, chosen + [(s, t)], used | {s, t})

    extend(0, [], set())
    return found


def random_matching_unchecked(cx: SimplicialComplex, seed: int) -> VectorField:
    """Greedy random matching that skips the acyclicity check, so it may
    be inadmissible.  Still satisfies W1, W2, W3."""
    rng = random.Random(seed)
    candidates = [(s, t) for s in cx for t in sorted(cx.immediate_cofaces(s))]
    rng.shuffle(candidates)
    used: set[Simplex] = set()
    pairs: dict[Simplex, Simplex] = {}
    for s, t in candidates:
        if s not in used and t not in used:
            pairs[s] = t
            used.update((s, t))
    return VectorField(pairs)


# --- seeded instance family shared by the property suites ------------------


def instance(seed: int) -> tuple[SimplicialComplex, VectorField]:
    n = 1 + seed % 6
    dim = seed % 4
    density = Fraction(2 + seed % 4, 6)
    cx = random_complex(n, dim, density, seed)
    return cx, random_field(cx, seed)


def instances(count: int = 200) -> list[tuple[int, SimplicialComplex, VectorField]]:
    return [(seed, *instance(seed)) for seed in range(count)]


# --- same-gradient function builders ---------------------------------------


def perturb_same_gradient(
    cx: SimplicialComplex, field: VectorField, heights: MorseFunction, rng: random.Random
) -> MorseFunction:
    """A Morse function equivalent to ``heights`` with gradient
    ``field``: add a fractional bump per pair class so paired simplices
    stay tied and all strict comparisons keep their direction."""
    tail_of = field.inverse()
    representative = {s: tail_of.get(s, s) for s in cx}
    classes = sorted(set(representative.values()))
    rng.shuffle(classes)
    index = {rep: i for i, rep in enumerate(classes)}
    step = Fraction(1, len(classes) + 1)
    return MorseFunction({s: heights[s] + index[representative[s]] * step for s in cx})


def inflate(cx: SimplicialComplex, func: MorseFunction, rng: random.Random) -> MorseFunction:
    """Random strictly increasing remap of the distinct values; the
    result induces the same order, hence the same gradient."""
    distinct = sorted({func[s] for s in cx})
    remap = {}
    value = rng.randint(0, 3)
    for i, v in enumerate(distinct):
        if i:
            value += rng.randint(1, 4)
        remap[v] = value
    return MorseFunction({s: remap[func[s]] for s in cx})
