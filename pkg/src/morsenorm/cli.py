"""Command line for complex documents: validate, analyze, transform.

Exit codes: 0 on success, 1 when the input fails validation or a
computation's preconditions, 2 on usage errors.  Results go to stdout,
diagnostics to stderr.  Every subcommand takes --json for a
machine-readable result.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .complexes import ComplexError, SimplicialComplex
from .fields import (
    InadmissibleError,
    InvalidFieldError,
    MorseFunction,
    NotMorseError,
    critical_simplices,
    equivalent,
    find_closed_vpath,
    gradient,
    morse_violations,
    validate_field,
)
from .formats import (
    ComplexDocument,
    DocumentError,
    emit_dot,
    parse_document,
    serialize_document,
    serialize_function,
)
from .generators import random_complex, random_field, random_morse
from .height import OracleSizeError, height, height_oracle
from .normalize import normalize_sweep, to_integer_ranks


def _read_document(path: str) -> ComplexDocument:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as handle:
            data = handle.read()
    return parse_document(data)


def _print_json(obj: object) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _print_function(cx: SimplicialComplex, func: MorseFunction, as_json: bool) -> None:
    if as_json:
        print(serialize_function(cx, func).decode("utf-8"))
    else:
        for s in cx:
            print(f"{s}: {func[s]}")


def _require_morse(doc: ComplexDocument) -> MorseFunction:
    func = doc.to_morse()
    if func is None:
        raise DocumentError("document has no 'morse' entry")
    return func


def cmd_validate(args: argparse.Namespace) -> int:
    doc = _read_document(args.document)
    cx = doc.to_complex()
    violations = validate_field(cx, doc.to_field())
    if doc.morse is not None:
        violations += morse_violations(cx, _require_morse(doc))
    if args.json:
        _print_json(
            {
                "ok": not violations,
                "violations": [
                    {"rule": v.rule, "message": v.message, "simplices": [list(s.vertices) for s in v.simplices]}
                    for v in violations
                ],
            }
        )
    elif violations:
        for v in violations:
            print(v)
    else:
        print("ok")
    return 1 if violations else 0


def cmd_admissible(args: argparse.Namespace) -> int:
    doc = _read_document(args.document)
    cx = doc.to_complex()
    witness = find_closed_vpath(cx, doc.to_field())
    if args.json:
        payload = None
        if witness is not None:
            payload = {"index": witness.index, "simplices": [list(s.vertices) for s in witness.simplices]}
        _print_json({"admissible": witness is None, "witness": payload})
    elif witness is None:
        print("admissible")
    else:
        print(f"closed V-path of index {witness.index}: {witness}")
    return 0 if witness is None else 1


def cmd_height(args: argparse.Namespace) -> int:
    doc = _read_document(args.document)
    cx = doc.to_complex()
    compute = height_oracle if args.oracle else height
    _print_function(cx, compute(cx, doc.to_field()), args.json)
    return 0


def cmd_normalize(args: argparse.Namespace) -> int:
    doc = _read_document(args.document)
    cx = doc.to_complex()
    func = _require_morse(doc)
    if args.ranks:
        func = to_integer_ranks(cx, func)
    _print_function(cx, normalize_sweep(cx, func), args.json)
    return 0


def cmd_gradient(args: argparse.Namespace) -> int:
    doc = _read_document(args.document)
    cx = doc.to_complex()
    field = gradient(cx, _require_morse(doc))
    pairs = sorted(field.pairs.items())
    if args.json:
        _print_json([[list(s.vertices), list(t.vertices)] for s, t in pairs])
    else:
        for s, t in pairs:
            print(f"{s} -> {t}")
    return 0


def cmd_critical(args: argparse.Namespace) -> int:
    doc = _read_document(args.document)
    cx = doc.to_complex()
    critical = sorted(critical_simplices(cx, doc.to_field()))
    if args.json:
        _print_json([list(s.vertices) for s in critical])
    else:
        for s in critical:
            print(s)
    return 0


def cmd_equiv(args: argparse.Namespace) -> int:
    doc_a = _read_document(args.document)
    doc_b = _read_document(args.other)
    cx = doc_a.to_complex()
    if cx != doc_b.to_complex():
        raise DocumentError("documents describe different complexes")
    result = equivalent(cx, _require_morse(doc_a), _require_morse(doc_b))
    if args.json:
        _print_json({"equivalent": result})
    else:
        print("equivalent" if result else "not equivalent")
    return 0


def cmd_dot(args: argparse.Namespace) -> int:
    doc = _read_document(args.document)
    cx = doc.to_complex()
    field = doc.to_field()
    heights = height(cx, field) if args.height else None
    print(emit_dot(cx, field, heights), end="")
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    cx = random_complex(args.vertices, args.dim, args.density, args.seed)
    facets = tuple(s.vertices for s in cx if not cx.immediate_cofaces(s))
    matching = None
    if args.field or args.morse:
        matching = tuple(sorted(random_field(cx, args.seed).pairs.items()))
    morse = None
    if args.morse:
        morse = tuple(random_morse(cx, args.seed).items())
    doc = ComplexDocument(facets=facets, matching=matching, morse=morse)
    print(serialize_document(doc).decode("utf-8"))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="morsenorm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, document: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if document:
            p.add_argument("document", help="document file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    add("validate", cmd_validate, "check the document's field and function")
    add("admissible", cmd_admissible, "decide admissibility; print a closed V-path if not")
    p = add("height", cmd_height, "height of every simplex under the document's matching")
    p.add_argument("--oracle", action="store_true", help="recompute by exhaustive path enumeration")
    p = add("normalize", cmd_normalize, "rewrite the document's morse function to its minimal form")
    p.add_argument("--ranks", action="store_true", help="replace values by their integer ranks first")
    add("gradient", cmd_gradient, "gradient pairing of the document's morse function")
    add("critical", cmd_critical, "simplices left unpaired by the document's matching")
    p = add("equiv", cmd_equiv, "compare the morse functions of two documents")
    p.add_argument("other", help="second document file")
    p = add("dot", cmd_dot, "modified Hasse diagram in DOT form")
    p.add_argument("--height", action="store_true", help="label nodes with their height")
    p = add("gen", cmd_gen, "generate a random document", document=False)
    p.add_argument("--vertices", type=int, required=True, help="number of vertices")
    p.add_argument("--dim", type=int, required=True, help="largest facet dimension")
    p.add_argument("--density", type=Fraction, default=Fraction(1, 2), help="facet density in [0, 1]")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.add_argument("--field", action="store_true", help="include a random admissible matching")
    p.add_argument("--morse", action="store_true", help="include a random morse function")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (
        OSError,
        ComplexError,
        DocumentError,
        InvalidFieldError,
        NotMorseError,
        InadmissibleError,
        OracleSizeError,
        ValueError,
    ) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
