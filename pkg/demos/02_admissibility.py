"""
When a matching cannot come from any Morse function
===================================================

A discrete vector field is admissible when its modified Hasse diagram
is acyclic.  Pairing every simplex of the hollow triangle makes that
impossible, and the library hands back the offending cycle as a closed
V-path.
"""

from morsenorm import (
    InadmissibleError,
    Simplex,
    VectorField,
    build_complex,
    find_closed_vpath,
    height,
    is_admissible,
)

cx = build_complex([[0, 1], [0, 2], [1, 2]])

# two pairs leave two critical cells and everything is fine
ok = VectorField({Simplex([0]): Simplex([0, 1]), Simplex([1]): Simplex([1, 2])})
print("two pairs admissible:", is_admissible(cx, ok))

# adding the third pair consumes every simplex: no critical cells at
# all, which no Morse function can produce
bad = VectorField(
    {
        Simplex([0]): Simplex([0, 1]),
        Simplex([1]): Simplex([1, 2]),
        Simplex([2]): Simplex([0, 2]),
    }
)
print("three pairs admissible:", is_admissible(cx, bad))

# the witness is a closed V-path: start at a vertex, flow up its
# matched edge, step down to the other endpoint, and repeat until the
# walk bites its own tail
witness = find_closed_vpath(cx, bad)
print(f"witness (index {witness.index}): {witness}")

# height refuses to run and carries the same witness in its error
try:
    height(cx, bad)
except InadmissibleError as err:
    print("height raised:", err)

# the failure is not an artifact of which three pairs we chose; both
# perfect matchings of the hollow triangle spin around the same loop
other = VectorField(
    {
        Simplex([0]): Simplex([0, 2]),
        Simplex([1]): Simplex([0, 1]),
        Simplex([2]): Simplex([1, 2]),
    }
)
print("mirror matching admissible:", is_admissible(cx, other))
print("mirror witness:", find_closed_vpath(cx, other))
