"""JSON documents for complexes, fields, and functions, plus DOT output.

A document is one JSON object:

    {"facets":   [[0,1,2], [2,3]],
     "matching": [[[0], [0,1]], [[1], [1,2]]],      # optional
     "morse":    [[[0], 2], [[0,1], "5/2"]]}        # optional

Facets describe the complex by downward closure.  Matching entries pair
a simplex with an immediate coface.  Morse values are exact integers or
strings parsed as rationals ("5/2", "0.25"); plain JSON floats are
rejected.  Parsing normalizes: vertex lists sorted, facets deduplicated
and canonically ordered, matching and morse entries canonically
ordered.  Serialization of a parsed document is therefore stable byte
for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .complexes import SimplicialComplex, Simplex, build_complex
from .fields import MorseFunction, Value, VectorField, modified_hasse


class DocumentError(ValueError):
    """Malformed document: bad syntax, bad shape, or unknown simplices."""


@dataclass(frozen=True)
class ComplexDocument:
    facets: tuple[tuple[int, ...], ...]
    matching: tuple[tuple[Simplex, Simplex], ...] | None = None
    morse: tuple[tuple[Simplex, Value], ...] | None = None

    def to_complex(self) -> SimplicialComplex:
        return build_complex(self.facets)

    def to_field(self) -> VectorField:
        """The matching as a field; the null field when absent."""
        return VectorField(self.matching or ())

    def to_morse(self) -> MorseFunction | None:
        if self.morse is None:
            return None
        return MorseFunction(dict(self.morse))


def _as_vertex(raw: object) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise DocumentError(f"vertex id must be an integer, got {raw!r}")
    if raw < 0:
        raise DocumentError(f"negative vertex id {raw}")
    return raw


def _as_simplex(raw: object, where: str) -> Simplex:
    if not isinstance(raw, list) or not raw:
        raise DocumentError(f"{where}: simplex must be a non-empty list, got {raw!r}")
    vertices = [_as_vertex(v) for v in raw]
    if len(set(vertices)) != len(vertices):
        raise DocumentError(f"{where}: degenerate simplex {raw}")
    return Simplex(vertices)


def _as_value(raw: object, where: str) -> Value:
    if isinstance(raw, bool):
        raise DocumentError(f"{where}: morse value must be an integer or a rational string, got {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"{where}: cannot parse morse value {raw!r} as a rational") from None
    raise DocumentError(f"{where}: morse value must be an integer or a rational string, got {raw!r}")


def parse_document(data: bytes | str) -> ComplexDocument:
    """Parse and normalize a document, checking that every simplex in
    matching and morse lies in the closure of the facets."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as err:
        raise DocumentError(f"syntax error at line {err.lineno} column {err.colno}: {err.msg}") from None
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    unknown = set(obj) - {"facets", "matching", "morse"}
    if unknown:
        raise DocumentError(f"unknown key {sorted(unknown)[0]!r}")
    if "facets" not in obj or not isinstance(obj["facets"], list):
        raise DocumentError("document needs a 'facets' list")

    facet_simplices = [_as_simplex(raw, "facets") for raw in obj["facets"]]
    facets = tuple(sorted({s.vertices for s in facet_simplices}, key=lambda v: (len(v), v)))
    cx = build_complex(facets)

    matching = None
    if "matching" in obj:
        if not isinstance(obj["matching"], list):
            raise DocumentError("'matching' must be a list of simplex pairs")
        pairs: dict[Simplex, Simplex] = {}
        for entry in obj["matching"]:
            if not isinstance(entry, list) or len(entry) != 2:
                raise DocumentError(f"matching entry must be a pair of simplices, got {entry!r}")
            s = _as_simplex(entry[0], "matching")
            t = _as_simplex(entry[1], "matching")
            for x, raw in ((s, entry[0]), (t, entry[1])):
                if x not in cx:
                    raise DocumentError(f"unknown simplex {sorted(raw)}")
            if s in pairs:
                raise DocumentError(f"duplicate matching entry for {list(s.vertices)}")
            pairs[s] = t
        matching = tuple(sorted(pairs.items()))

    morse = None
    if "morse" in obj:
        if not isinstance(obj["morse"], list):
            raise DocumentError("'morse' must be a list of [simplex, value] pairs")
        values: dict[Simplex, Value] = {}
        for entry in obj["morse"]:
            if not isinstance(entry, list) or len(entry) != 2:
                raise DocumentError(f"morse entry must be [simplex, value], got {entry!r}")
            s = _as_simplex(entry[0], "morse")
            if s not in cx:
                raise DocumentError(f"unknown simplex {sorted(entry[0])}")
            if s in values:
                raise DocumentError(f"duplicate morse entry for {list(s.vertices)}")
            values[s] = _as_value(entry[1], "morse")
        morse = tuple(sorted(values.items()))

    return ComplexDocument(facets=facets, matching=matching, morse=morse)


def _json_value(v: Value) -> int | str:
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def serialize_document(doc: ComplexDocument) -> bytes:
    """Compact JSON for a document, stable byte for byte on a parsed
    (hence normalized) document."""
    obj: dict[str, object] = {"facets": [list(f) for f in doc.facets]}
    if doc.matching is not None:
        obj["matching"] = [[list(s.vertices), list(t.vertices)] for s, t in doc.matching]
    if doc.morse is not None:
        obj["morse"] = [[list(s.vertices), _json_value(v)] for s, v in doc.morse]
    return json.dumps(obj, separators=(",", ":")).encode("utf-8")


def serialize_function(cx: SimplicialComplex, func: MorseFunction) -> bytes:
    """Compact JSON list of [vertex list, value] in canonical order."""
    entries = []
    for s in cx:
        if s not in func:
            raise ValueError(f"partial function: no value for {s}")
        entries.append([list(s.vertices), _json_value(func[s])])
    return json.dumps(entries, separators=(",", ":")).encode("utf-8")


def emit_dot(cx: SimplicialComplex, field: VectorField, heights: MorseFunction | None = None) -> str:
    """Modified Hasse diagram in DOT form.

    Matched edges are dashed.  When ``heights`` is given, each node is
    labelled "simplex : value".  Output is deterministic.
    """
    digraph = modified_hasse(cx, field)
    lines = ["digraph modified_hasse {", "  rankdir=BT;"]
    for node in digraph.nodes:
        label = f"{node} : {heights[node]}" if heights is not None else str(node)
        lines.append(f'  "{node}" [label="{label}"];')
    for u, v, matched in digraph.edges():
        style = " [style=dashed]" if matched else ""
        lines.append(f'  "{u}" -> "{v}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"
