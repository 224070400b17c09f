"""Canonical integer-valued discrete Morse functions.

Build a simplicial complex, pair simplices with a discrete vector
field, and compute the field's height function: the unique minimal
non-negative integer Morse function among all functions with that
gradient.  Two independent routes compute it (a linear longest-path
pass and an exhaustive oracle), and a sweep rewrites any integer Morse
function into the same canonical form.
"""

from .complexes import (
    ComplexError,
    Digraph,
    Simplex,
    SimplicialComplex,
    build_complex,
    hasse_diagram,
)
from .fields import (
    InadmissibleError,
    InvalidFieldError,
    MorseFunction,
    NotMorseError,
    VectorField,
    Violation,
    VPath,
    critical_simplices,
    dimension_function,
    equivalent,
    find_closed_vpath,
    gradient,
    is_admissible,
    is_morse,
    modified_hasse,
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
from .height import (
    DEFAULT_ORACLE_LIMIT,
    ORACLE_LIMIT_ENV,
    OracleSizeError,
    height,
    height_oracle,
)
from .normalize import normalize_sweep, sweep_order, to_integer_ranks

__version__ = "0.1.0"

__all__ = [
    "ComplexDocument",
    "ComplexError",
    "DEFAULT_ORACLE_LIMIT",
    "Digraph",
    "DocumentError",
    "InadmissibleError",
    "InvalidFieldError",
    "MorseFunction",
    "NotMorseError",
    "ORACLE_LIMIT_ENV",
    "OracleSizeError",
    "Simplex",
    "SimplicialComplex",
    "VPath",
    "VectorField",
    "Violation",
    "build_complex",
    "critical_simplices",
    "dimension_function",
    "emit_dot",
    "equivalent",
    "find_closed_vpath",
    "gradient",
    "hasse_diagram",
    "height",
    "height_oracle",
    "is_admissible",
    "is_morse",
    "modified_hasse",
    "morse_violations",
    "normalize_sweep",
    "parse_document",
    "random_complex",
    "random_field",
    "random_morse",
    "serialize_document",
    "serialize_function",
    "sweep_order",
    "to_integer_ranks",
    "validate_field",
]
