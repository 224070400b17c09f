"""
Sweeping an untidy Morse function down to its canonical form
============================================================

Any two Morse functions that induce the same gradient field normalize
to the same integer-valued function, and that function is the height.
This demo starts from a deliberately messy function and watches the
sweep find the canonical values.
"""

from fractions import Fraction

from morsenorm import (
    MorseFunction,
    Simplex,
    build_complex,
    equivalent,
    gradient,
    height,
    normalize_sweep,
    sweep_order,
    to_integer_ranks,
)

cx = build_complex([[0, 1], [0, 2], [1, 2]])

# hand-picked values: gaps, a fraction, nothing canonical about them
f = MorseFunction(
    {
        Simplex([2]): 0,
        Simplex([1, 2]): 2,
        Simplex([1]): Fraction(5, 2),
        Simplex([0, 1]): 4,
        Simplex([0]): 5,
        Simplex([0, 2]): 7,
    }
)

# the gradient pairs a simplex with a coface that fails to increase
field = gradient(cx, f)
print("gradient pairs:")
for s, t in sorted(field.pairs.items()):
    print(f"  {s} -> {t}")

# the sweep wants integer values starting at 0, so collapse the values
# to their ranks first; order is preserved, nothing else survives
ranks = to_integer_ranks(cx, f)
print("ranked:", {str(s): v for s, v in ranks.items()})

# simplices are visited by increasing value, higher dimension first
print("sweep order:", " ".join(str(s) for s in sweep_order(cx, ranks)))

# each pass lowers values that sit higher than anything forces them to
# be; after as many passes as simplices the result is stable
g = normalize_sweep(cx, ranks)
print("normalized:", {str(s): v for s, v in g.items()})

# the result is the height function of the gradient, reached without
# ever looking at a path
h = height(cx, field)
print("equals height:", g == h)

# normalizing again changes nothing
print("idempotent:", normalize_sweep(cx, g) == g)

# any equivalent function (same strict order on face/coface pairs)
# lands on the same canonical form
doubled = MorseFunction({s: 2 * v for s, v in ranks.items()})
print("doubled is equivalent:", equivalent(cx, ranks, doubled))
print("doubled normalizes identically:", normalize_sweep(cx, doubled) == h)
