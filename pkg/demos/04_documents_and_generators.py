"""
Documents on disk, random instances, and the command line
=========================================================

"""

# a complex travels as a JSON object listing its facets; matching and
# morse entries are optional
from morsenorm import parse_document, serialize_document

text = """
{
  "facets": [[2, 1], [0, 1], [2, 0]],
  "matching": [[[0], [0, 1]], [[1], [1, 2]]],
  "morse": [[[2], 0], [[1, 2], 2], [[1], "5/2"],
            [[0, 1], 4], [[0], 5], [[0, 2], 7]]
}
"""
doc = parse_document(text)
print("parsed", len(doc.to_complex()), "simplices")

# serialization is canonical: vertex order, facet order, and entry
# order are all normalized, so equal documents give identical bytes
blob = serialize_document(doc)
print("canonical bytes:")
print(" ", blob.decode())
print("stable:", serialize_document(parse_document(blob)) == blob)

# random instances are seeded and reproducible: same seed, same
# complex, same field, same function
from fractions import Fraction

from morsenorm import gradient, random_complex, random_field, random_morse

cx = random_complex(6, 2, Fraction(1, 2), seed=11)
field = random_field(cx, seed=11)
print("random complex:", len(cx), "simplices,", len(field.pairs), "pairs")

f = random_morse(cx, seed=11)
print("generated function induces the field:", gradient(cx, f) == field)

# the same operations are scriptable; every subcommand reads a
# document and writes text or canonical JSON:
#
#   morsenorm height triangle.json
#   morsenorm height --oracle --json triangle.json
#   morsenorm admissible triangle.json
#   morsenorm normalize --ranks --json triangle.json
#   morsenorm gen --vertices 6 --dim 2 --seed 11 --field | morsenorm height --json -
#
# exit status is 0 for a clean answer, 1 for a failed check or bad
# input, 2 for usage errors
from morsenorm import emit_dot

# Graphviz output for the modified Hasse diagram, matched edges dashed
print(emit_dot(doc.to_complex(), doc.to_field()))
