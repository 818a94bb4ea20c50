"""Finite Cayley-table structures and the four laws.

Shows the two worked three-element structures, the aligned law report,
and the zero adjunction that turns any semigroup hom-associative.
"""

import json

from invhom import (
    FiniteHomMagma,
    adjoin_zero,
    classify,
    fixture,
    has_zero,
    structure_to_dict,
)

print("a structure that is hom-associative but not a semigroup:")
m = fixture("hom_not_sg")
print(classify(m).as_text())
print()

print("the involutive one, with alpha swapping x and y:")
m2 = fixture("involutive")
print(classify(m2).as_text())
print()

print("both carry z as an absorbing element, index", has_zero(m))
print()

print("a left-zero semigroup (ab = a) has no absorbing element,")
print("so adjoining routes alpha onto a fresh zero:")
left_zero = FiniteHomMagma(("a", "b"), ((0, 0), (1, 1)), (0, 1))
grown = adjoin_zero(left_zero)
print(classify(grown).as_text())
print()
print("note alpha is now constant, hence not an involution; doing it")
print("again changes nothing:", adjoin_zero(grown) == grown)
print()

print("structures serialize to a label-based JSON shape:")
print(json.dumps(structure_to_dict(m2), indent=2))
