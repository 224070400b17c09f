"""Discrete vector fields and combinatorial Morse functions.

A vector field pairs some simplices with immediate cofaces; a Morse
function is a value assignment whose local descents are consistent with
such a pairing.  This module validates both notions, extracts the
gradient field of a Morse function, and decides admissibility of a
field by searching the modified Hasse diagram for directed cycles.

All values are exact: int or fractions.Fraction.  Floats are rejected
so that comparisons never depend on rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .complexes import Digraph, Simplex, SimplicialComplex, hasse_diagram

Value = Union[int, Fraction]


@dataclass(frozen=True)
class Violation:
    """One failed validity rule, with the simplices that witness it."""

    rule: str
    message: str
    simplices: tuple[Simplex, ...] = ()

    def __str__(self) -> str:
        return f"{self.rule}: {self.message}"


class InvalidFieldError(ValueError):
    """A vector field that breaks W1, W2, or W3."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


class NotMorseError(ValueError):
    """A value assignment that breaks M1, M2, or the pairing rule."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass(frozen=True)
class VPath:
    """A V-path: simplices of one dimension linked through the pairing.

    ``simplices`` lists the k-simplices visited in order; a closed path
    repeats its first entry at the end.
    """

    index: int
    simplices: tuple[Simplex, ...]

    @property
    def is_closed(self) -> bool:
        return len(self.simplices) > 1 and self.simplices[0] == self.simplices[-1]

    def __str__(self) -> str:
        return " -> ".join(str(s) for s in self.simplices)


class InadmissibleError(ValueError):
    """A valid field with a closed V-path, carried as the witness."""

    def __init__(self, witness: VPath):
        self.witness = witness
        super().__init__(f"inadmissible field: closed V-path of index {witness.index}: {witness}")


class VectorField:
    """A pairing of simplices with immediate cofaces, as a map.

    The map sends each paired simplex to its coface.  Validity (W1: the
    value is an immediate coface of the key; W2: injective; W3: no value
    is itself a key) is checked by :func:`validate_field`, not here.
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs: Mapping[Simplex, Simplex] | Iterable[tuple[Simplex, Simplex]] = ()):
        object.__setattr__(self, "pairs", dict(pairs))

    @property
    def domain(self) -> frozenset[Simplex]:
        return frozenset(self.pairs)

    @property
    def image(self) -> frozenset[Simplex]:
        return frozenset(self.pairs.values())

    def inverse(self) -> dict[Simplex, Simplex]:
        """Coface back to its paired face.  Only meaningful for valid fields."""
        return {t: s for s, t in self.pairs.items()}

    @property
    def is_null(self) -> bool:
        return not self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VectorField) and self.pairs == other.pairs

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("VectorField is immutable")

    def __repr__(self) -> str:
        body = ", ".join(f"{s}->{t}" for s, t in sorted(self.pairs.items()))
        return f"VectorField({body})"


class MorseFunction:
    """A map from simplices to exact values.

    Values are int or Fraction; integral fractions collapse to int so
    equal functions compare equal and serialize identically.  The map is
    not tied to a complex; totality is checked where it matters.
    """

    __slots__ = ("values",)

    def __init__(self, values: Mapping[Simplex, Value]):
        cleaned: dict[Simplex, Value] = {}
        for s, v in values.items():
            cleaned[s] = _exact(v)
        object.__setattr__(self, "values", cleaned)

    def __getitem__(self, s: Simplex) -> Value:
        return self.values[s]

    def __contains__(self, s: object) -> bool:
        return s in self.values

    def __len__(self) -> int:
        return len(self.values)

    def items(self) -> list[tuple[Simplex, Value]]:
        """(simplex, value) pairs in canonical simplex order."""
        return sorted(self.values.items())

    def __iter__(self) -> Iterator[Simplex]:
        return iter(sorted(self.values))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MorseFunction) and self.values == other.values

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MorseFunction is immutable")

    def __repr__(self) -> str:
        body = ", ".join(f"{s}={v}" for s, v in self.items())
        return f"MorseFunction({body})"


def _exact(v: object) -> Value:
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else v
    raise TypeError(f"Morse values must be int or Fraction, got {type(v).__name__}")


def dimension_function(cx: SimplicialComplex) -> MorseFunction:
    """The map sending every simplex to its dimension."""
    return MorseFunction({s: s.dim for s in cx})


def validate_field(cx: SimplicialComplex, field: VectorField) -> list[Violation]:
    """Check W1 (pairs go one dimension up), W2 (injective), and W3
    (no simplex is both paired up and the image of a pair).

    Returns one Violation per failed rule instance, in canonical order;
    an empty list means the field is valid over ``cx``.
    """
    out: list[Violation] = []
    pairs = field.pairs
    known: dict[Simplex, Simplex] = {}
    for s in sorted(pairs):
        t = pairs[s]
        missing = [x for x in (s, t) if x not in cx]
        if missing:
            names = ", ".join(str(x) for x in missing)
            out.append(Violation("unknown", f"unknown simplex {names}", tuple(missing)))
            continue
        if t not in cx.immediate_cofaces(s):
            out.append(Violation("W1", f"{t} is not an immediate coface of {s}", (s, t)))
            continue
        known[s] = t
    by_value: dict[Simplex, list[Simplex]] = {}
    for s in sorted(known):
        by_value.setdefault(known[s], []).append(s)
    for t in sorted(by_value):
        sources = by_value[t]
        if len(sources) > 1:
            names = " and ".join(str(s) for s in sources)
            out.append(Violation("W2", f"{t} is the value of {names}", (*sources, t)))
    inverse = {t: s for s, t in known.items()}
    for s in sorted(set(known) & set(inverse)):
        out.append(
            Violation(
                "W3",
                f"{s} is paired up to {known[s]} but is also the value of {inverse[s]}",
                (inverse[s], s, known[s]),
            )
        )
    return out


def modified_hasse(cx: SimplicialComplex, field: VectorField) -> Digraph:
    """Hasse diagram with every paired edge reversed and flagged matched.

    The unpaired edges keep their coface-to-face direction; each pair
    (s, t) replaces the edge t -> s by the matched edge s -> t.
    """
    violations = validate_field(cx, field)
    if violations:
        raise InvalidFieldError(violations)
    edges = {(u, v): m for u, v, m in hasse_diagram(cx).edges()}
    for s, t in field.pairs.items():
        del edges[(t, s)]
        edges[(s, t)] = True
    return Digraph.build(cx.simplices, edges)


def _find_cycle(digraph: Digraph) -> list[Simplex] | None:
    """First directed cycle in canonical DFS order, as a node list, or None."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {u: WHITE for u in digraph.nodes}
    for root in digraph.nodes:
        if color[root] != WHITE:
            continue
        color[root] = GRAY
        path = [root]
        iters = [iter(digraph.succ[root])]
        while iters:
            try:
                v, _ = next(iters[-1])
            except StopIteration:
                color[path.pop()] = BLACK
                iters.pop()
                continue
            if color[v] == GRAY:
                return path[path.index(v):]
            if color[v] == WHITE:
                color[v] = GRAY
                path.append(v)
                iters.append(iter(digraph.succ[v]))
    return None


def _cycle_to_vpath(cycle: list[Simplex], field: VectorField) -> VPath:
    """Convert a directed cycle of the modified Hasse diagram into the
    closed V-path it witnesses.

    Up-steps are only possible along matched edges and no simplex in the
    image of the field has a matched out-edge, so any cycle alternates
    between dimensions k and k+1; the k-simplices, read in cycle order,
    form the V-path.
    """
    k = min(s.dim for s in cycle)
    least = min(s for s in cycle if s.dim == k)
    start = cycle.index(least)
    rotated = cycle[start:] + cycle[:start]
    assert len(rotated) % 2 == 0, "modified Hasse cycle of odd length"
    assert all(s.dim == (k if i % 2 == 0 else k + 1) for i, s in enumerate(rotated)), (
        "modified Hasse cycle spans more than two dimensions"
    )
    steps = rotated[0::2]
    for s in steps:
        assert s in field.pairs, "unpaired simplex on a modified Hasse cycle"
    return VPath(index=k, simplices=(*steps, steps[0]))


def find_closed_vpath(cx: SimplicialComplex, field: VectorField) -> VPath | None:
    """A closed V-path of the field, or None if the field is admissible.

    Deterministic: the same field always yields the same witness.
    """
    cycle = _find_cycle(modified_hasse(cx, field))
    if cycle is None:
        return None
    return _cycle_to_vpath(cycle, field)


def is_admissible(cx: SimplicialComplex, field: VectorField) -> bool:
    """True iff the field has no non-stationary closed V-path, which is
    exactly when its modified Hasse diagram is acyclic."""
    return find_closed_vpath(cx, field) is None


def morse_violations(cx: SimplicialComplex, func: MorseFunction) -> list[Violation]:
    """Check the Morse conditions of ``func`` on ``cx``.

    M1: at most one immediate face has a value >= the simplex's own.
    M2: at most one immediate coface has a value <= the simplex's own.
    pairing: no simplex may have both such a face and such a coface,
    since it would then be the head of one pair and the tail of another.

    A function missing a value on some simplex is an error, not a
    violation.  Returns violations in canonical simplex order.
    """
    for s in cx:
        if s not in func:
            raise ValueError(f"partial function: no value for {s}")
    out: list[Violation] = []
    for s in cx:
        high_faces = [f for f in sorted(cx.immediate_faces(s)) if func[f] >= func[s]]
        low_cofaces = [t for t in sorted(cx.immediate_cofaces(s)) if func[t] <= func[s]]
        if len(high_faces) > 1:
            names = ", ".join(str(f) for f in high_faces)
            out.append(Violation("M1", f"{s} has {len(high_faces)} faces with value >= its own: {names}", (s, *high_faces)))
        if len(low_cofaces) > 1:
            names = ", ".join(str(t) for t in low_cofaces)
            out.append(Violation("M2", f"{s} has {len(low_cofaces)} cofaces with value <= its own: {names}", (s, *low_cofaces)))
        if high_faces and low_cofaces:
            out.append(
                Violation(
                    "pairing",
                    f"{s} would be paired both down to {high_faces[0]} and up to {low_cofaces[0]}",
                    (high_faces[0], s, low_cofaces[0]),
                )
            )
    return out


def is_morse(cx: SimplicialComplex, func: MorseFunction) -> bool:
    """True iff ``func`` satisfies M1, M2, and the pairing rule on ``cx``."""
    return not morse_violations(cx, func)


def gradient(cx: SimplicialComplex, func: MorseFunction) -> VectorField:
    """Gradient field of a Morse function: pair s with its unique
    immediate coface of value <= func(s), where one exists."""
    violations = morse_violations(cx, func)
    if violations:
        raise NotMorseError(violations)
    pairs: dict[Simplex, Simplex] = {}
    for s in cx:
        for t in sorted(cx.immediate_cofaces(s)):
            if func[t] <= func[s]:
                pairs[s] = t
                break
    return VectorField(pairs)


def critical_simplices(cx: SimplicialComplex, field: VectorField) -> set[Simplex]:
    """Simplices neither paired up nor the value of a pair."""
    violations = validate_field(cx, field)
    if violations:
        raise InvalidFieldError(violations)
    taken = field.domain | field.image
    return {s for s in cx if s not in taken}


def equivalent(cx: SimplicialComplex, f: MorseFunction, g: MorseFunction) -> bool:
    """True iff f and g induce the same strict order on every
    face/coface pair, which is exactly when their gradients agree."""
    for func in (f, g):
        violations = morse_violations(cx, func)
        if violations:
            raise NotMorseError(violations)
    for s in cx:
        for t in cx.immediate_cofaces(s):
            if (f[s] < f[t]) != (g[s] < g[t]):
                return False
    return True
