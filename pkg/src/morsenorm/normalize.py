"""Sweep that rewrites an integer Morse function into its minimal form.

Starting from a non-negative integer Morse function with minimum 0, the
sweep visits every simplex once per pass, in ascending value order with
higher-dimensional simplices first among ties, and replaces each value
by the smallest one compatible with the function's own gradient pairing:

* critical simplex: one more than the largest face value (0 for a
  critical vertex);
* tail of a pair (paired up to a coface): the coface's current value;
* head of a pair (some face is paired up to it): one more than the
  largest value among its other faces.

After as many passes as there are simplices the function is the height
function of its gradient.  The pairing is fixed from the input up
front; every intermediate function keeps exactly that gradient, which
is asserted after each step.
"""

from __future__ import annotations

from typing import Sequence

from .complexes import Simplex, SimplicialComplex
from .fields import MorseFunction, NotMorseError, gradient, morse_violations


def to_integer_ranks(cx: SimplicialComplex, func: MorseFunction) -> MorseFunction:
    """Replace every value by its rank among the distinct values, so the
    result is integer-valued from 0 up and induces the same order."""
    violations = morse_violations(cx, func)
    if violations:
        raise NotMorseError(violations)
    distinct = sorted({func[s] for s in cx})
    rank = {v: i for i, v in enumerate(distinct)}
    return MorseFunction({s: rank[func[s]] for s in cx})


def sweep_order(cx: SimplicialComplex, func: MorseFunction) -> list[Simplex]:
    """Visit order of the sweep: ascending value, then descending
    dimension, then vertex sequence."""
    return sorted(cx, key=lambda s: (func[s], -s.dim, s.vertices))


def _check_order(cx: SimplicialComplex, func: MorseFunction, order: Sequence[Simplex]) -> None:
    if sorted(order) != list(cx.simplices):
        raise ValueError("order must visit every simplex of the complex exactly once")
    for a, b in zip(order, order[1:]):
        if func[a] > func[b]:
            raise ValueError(f"order must be non-decreasing in value: {a} before {b}")
        if func[a] == func[b] and a.dim < b.dim:
            raise ValueError(f"ties must put higher dimension first: {a} before {b}")


def normalize_sweep(
    cx: SimplicialComplex,
    func: MorseFunction,
    *,
    order: Sequence[Simplex] | None = None,
    early_exit: bool = False,
) -> MorseFunction:
    """Run the full sweep and return the rewritten function.

    The input must be Morse, integer-valued, and attain 0.  ``order``
    may inject any visit order satisfying the constraints above; by
    default it is computed from the input values.  With ``early_exit``
    the sweep stops once a pass changes nothing; the result is the same
    either way.
    """
    pairing = gradient(cx, func)
    for s in cx:
        if not isinstance(func[s], int):
            raise ValueError(f"integer values required, got {func[s]} on {s}")
        if func[s] < 0:
            raise ValueError(f"non-negative values required, got {func[s]} on {s}")
    if min(func[s] for s in cx) != 0:
        raise ValueError("minimum value must be 0")
    if order is None:
        order = sweep_order(cx, func)
    else:
        order = list(order)
        _check_order(cx, func, order)

    paired_up = pairing.pairs
    paired_down = pairing.inverse()
    current = {s: func[s] for s in cx}

    for _ in range(len(order)):
        changed = False
        for s in order:
            coface = paired_up.get(s)
            if coface is not None:
                new = current[coface]
            else:
                face = paired_down.get(s)
                if face is not None:
                    others = [current[f] for f in cx.immediate_faces(s) if f != face]
                    new = max(others) + 1
                else:
                    new = max((current[f] for f in cx.immediate_faces(s)), default=-1) + 1
            if new != current[s]:
                current[s] = new
                changed = True
            _assert_pairing_intact(cx, paired_up, paired_down, current, s)
        if early_exit and not changed:
            break
    return MorseFunction(current)


def _assert_pairing_intact(
    cx: SimplicialComplex,
    paired_up: dict[Simplex, Simplex],
    paired_down: dict[Simplex, Simplex],
    current: dict[Simplex, int],
    s: Simplex,
) -> None:
    # Rewriting one value may only disturb comparisons along edges at s;
    # each of those must still encode exactly the fixed pairing.
    for f in cx.immediate_faces(s):
        assert (current[f] >= current[s]) == (paired_down.get(s) == f), (
            f"sweep broke the pairing between {f} and {s}"
        )
    for t in cx.immediate_cofaces(s):
        assert (current[s] >= current[t]) == (paired_up.get(s) == t), (
            f"sweep broke the pairing between {s} and {t}"
        )
