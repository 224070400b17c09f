"""
The hollow triangle, two arrows, and its canonical heights
==========================================================

"""

# the complex is the boundary of a triangle: three vertices, three edges
from morsenorm import build_complex

cx = build_complex([[0, 1], [0, 2], [1, 2]])
print("simplices:", ", ".join(str(s) for s in cx))

# match vertex {0} into edge {0,1} and vertex {1} into edge {1,2};
# vertex {2} and edge {0,2} stay critical
from morsenorm import Simplex, VectorField, critical_simplices

field = VectorField({Simplex([0]): Simplex([0, 1]), Simplex([1]): Simplex([1, 2])})
print("critical:", ", ".join(str(s) for s in sorted(critical_simplices(cx, field))))

# the matched edges of the Hasse diagram point upward, all others
# keep pointing from a simplex to its faces
from morsenorm import modified_hasse

for src, dst, matched in modified_hasse(cx, field).edges():
    arrow = "==>" if matched else "-->"
    print(f"  {src} {arrow} {dst}")

# the height of a simplex counts the most downward steps any directed
# walk from it can take; it is the canonical normalized function
from morsenorm import height

h = height(cx, field)
for s, value in h.items():
    print(f"  h{s} = {value}")

# heights form a combinatorial Morse function whose gradient recovers
# exactly the field we started from
from morsenorm import gradient, is_morse

print("is a Morse function:", is_morse(cx, h))
print("gradient recovers field:", gradient(cx, h) == field)

# a brute-force check walks every simple path instead of solving the
# longest-path recurrence; both routes must agree
from morsenorm import height_oracle

print("exhaustive oracle agrees:", height_oracle(cx, field) == h)
