"""Seeded random complexes, fields, and Morse functions.

Everything here is deterministic in its seed, so test suites built on
these generators replay exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Union

from .complexes import Simplex, SimplicialComplex, build_complex
from .fields import MorseFunction, VectorField
from .height import height

# Distinct stream for the value perturbation, so it is independent of
# the pair choices made from the same seed.
_PERTURB_SALT = 0x9E3779B97F4A7C15


def random_complex(n_vertices: int, dim: int, density: Union[float, Fraction], seed: int) -> SimplicialComplex:
    """Closure of a random facet set on ``n_vertices`` vertices.

    Every candidate simplex of dimension up to ``dim`` (capped at
    n_vertices - 1) is kept as a facet with probability ``density``.
    When nothing survives, one facet of the top size is drawn so the
    complex is never empty.
    """
    if n_vertices < 1:
        raise ValueError("n_vertices must be at least 1")
    if dim < 0:
        raise ValueError("dim must be non-negative")
    if not 0 <= density <= 1:
        raise ValueError("density must be in [0, 1]")
    rng = random.Random(seed)
    top = min(dim, n_vertices - 1)
    chosen = []
    for k in range(top + 1):
        for facet in combinations(range(n_vertices), k + 1):
            if rng.random() < density:
                chosen.append(facet)
    if not chosen:
        pool = list(combinations(range(n_vertices), top + 1))
        chosen = [pool[rng.randrange(len(pool))]]
    return build_complex(chosen)


def _reachable(adjacency: dict[Simplex, set[Simplex]], source: Simplex, goal: Simplex) -> bool:
    stack = [source]
    seen = {source}
    while stack:
        u = stack.pop()
        if u == goal:
            return True
        for v in adjacency[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def random_field(cx: SimplicialComplex, seed: int) -> VectorField:
    """A random admissible field: candidate pairs are shuffled, then
    added greedily while both simplices are unused and reversing the
    pair's edge keeps the modified Hasse diagram acyclic."""
    rng = random.Random(seed)
    candidates = [(s, t) for s in cx for t in sorted(cx.immediate_cofaces(s))]
    rng.shuffle(candidates)
    adjacency: dict[Simplex, set[Simplex]] = {s: set(cx.immediate_faces(s)) for s in cx}
    used: set[Simplex] = set()
    pairs: dict[Simplex, Simplex] = {}
    for s, t in candidates:
        if s in used or t in used:
            continue
        # The reversed edge s -> t closes a cycle exactly when t still
        # reaches s some other way.
        adjacency[t].discard(s)
        if _reachable(adjacency, t, s):
            adjacency[t].add(s)
            continue
        adjacency[s].add(t)
        pairs[s] = t
        used.update((s, t))
    return VectorField(pairs)


def random_morse(cx: SimplicialComplex, seed: int) -> MorseFunction:
    """A random Morse function whose gradient is random_field(cx, seed).

    Built as the field's height function plus a fractional bump per
    pair class: paired simplices share a bump, so they stay tied, while
    every other comparison keeps its strict direction.
    """
    field = random_field(cx, seed)
    heights = height(cx, field)
    tail_of = field.inverse()
    representative = {s: tail_of.get(s, s) for s in cx}
    classes = sorted(set(representative.values()))
    rng = random.Random(seed ^ _PERTURB_SALT)
    rng.shuffle(classes)
    bump_index = {rep: i for i, rep in enumerate(classes)}
    step = Fraction(1, len(classes) + 1)
    values = {s: heights[s] + bump_index[representative[s]] * step for s in cx}
    return MorseFunction(values)
