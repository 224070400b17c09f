"""Height of every simplex in the modified Hasse diagram.

The height of a simplex is the largest number of unmatched edges on any
directed path of the modified Hasse diagram starting there.  For an
admissible field the diagram is acyclic, so a single longest-path pass
in reverse topological order computes all heights in linear time.  The
resulting function is Morse, its gradient is the field itself, and it
is the pointwise minimum among all equivalent non-negative integer
Morse functions.

:func:`height_oracle` recomputes the same values by enumerating every
simple directed path explicitly.  That route is exponential and only
meant to cross-check the fast one on small complexes.
"""

from __future__ import annotations

import os

from .complexes import Digraph, Simplex, SimplicialComplex
from .fields import (
    InadmissibleError,
    MorseFunction,
    VectorField,
    _cycle_to_vpath,
    _find_cycle,
    modified_hasse,
)

ORACLE_LIMIT_ENV = "NORMALIZE_ORACLE_LIMIT"
DEFAULT_ORACLE_LIMIT = 64


class OracleSizeError(ValueError):
    """Complex too large for exhaustive path enumeration."""


def _checked_diagram(cx: SimplicialComplex, field: VectorField) -> Digraph:
    """Modified Hasse diagram, guaranteed acyclic.  Raises
    InvalidFieldError on a malformed field and InadmissibleError, with
    the witness V-path, on a cyclic one."""
    digraph = modified_hasse(cx, field)
    cycle = _find_cycle(digraph)
    if cycle is not None:
        raise InadmissibleError(_cycle_to_vpath(cycle, field))
    return digraph


def _postorder(digraph: Digraph) -> list[Simplex]:
    """DFS post-order over all nodes, canonical roots and successors.
    Every successor of a node appears before the node itself."""
    seen: set[Simplex] = set()
    order: list[Simplex] = []
    for root in digraph.nodes:
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, iter(digraph.succ[root]))]
        while stack:
            node, it = stack[-1]
            advanced = False
            for v, _ in it:
                if v not in seen:
                    seen.add(v)
                    stack.append((v, iter(digraph.succ[v])))
                    advanced = True
                    break
            if not advanced:
                order.append(node)
                stack.pop()
    return order


def height(cx: SimplicialComplex, field: VectorField) -> MorseFunction:
    """Height of every simplex, by one longest-path pass.

    Sinks get 0; otherwise the height is the best over out-edges of the
    target's height plus 1 for an unmatched edge, plus 0 for a matched
    one.  Linear in simplices plus diagram edges.
    """
    digraph = _checked_diagram(cx, field)
    values: dict[Simplex, int] = {}
    for node in _postorder(digraph):
        best = 0
        for v, matched in digraph.succ[node]:
            candidate = values[v] + (0 if matched else 1)
            if candidate > best:
                best = candidate
        values[node] = best
    return MorseFunction(values)


def height_oracle(cx: SimplicialComplex, field: VectorField, *, limit: int | None = None) -> MorseFunction:
    """Heights by brute force: walk every simple directed path from
    every node and keep the largest unmatched-edge count.

    Refuses complexes above ``limit`` simplices (default 64, or the
    NORMALIZE_ORACLE_LIMIT environment variable).
    """
    if limit is None:
        limit = int(os.environ.get(ORACLE_LIMIT_ENV, DEFAULT_ORACLE_LIMIT))
    if len(cx) > limit:
        raise OracleSizeError(f"oracle size limit: {len(cx)} simplices exceeds {limit}")
    digraph = _checked_diagram(cx, field)
    nodes = digraph.nodes
    index = {s: i for i, s in enumerate(nodes)}
    adjacency = [
        tuple((index[v], 0 if matched else 1) for v, matched in digraph.succ[u]) for u in nodes
    ]
    n = len(nodes)
    values: dict[Simplex, int] = {}
    on_path = bytearray(n)

    def walk(u: int, count: int) -> int:
        best = count
        on_path[u] = 1
        for v, weight in adjacency[u]:
            if not on_path[v]:
                candidate = walk(v, count + weight)
                if candidate > best:
                    best = candidate
        on_path[u] = 0
        return best

    for start in range(n):
        values[nodes[start]] = walk(start, 0)
    return MorseFunction(values)
