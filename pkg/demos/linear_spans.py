"""Formal sums of words with rational coefficients.

Words span an algebra: addition merges coefficients, the twisted
product extends bilinearly, and the involution acts term by term.
The hom-associativity of words carries over to the whole span.
"""

from fractions import Fraction

from invhom import AlgebraElement, alpha_alg, eval_algebra, parse_word

x = AlgebraElement.from_word(parse_word("x"))
y = AlgebraElement.from_word(parse_word("y"))
ym = AlgebraElement.from_word(parse_word("[y]"))

a = x + 2 * y
b = ym - x
print("a          =", a)
print("b          =", b)
print("a + b      =", a + b)
print("a - a      =", a - a)
print("3/2 . a    =", Fraction(3, 2) * a)
print()

print("the product distributes over both arguments:")
print("  a * b           =", a * b)
print("  a*ym - a*x      =", a * ym - a * x)
print()

print("single letters concatenate, so x * y has no marks, but a longer")
print("left factor picks them up:")
print("  x * y      =", x * y)
print("  (x*y) * x  =", (x * y) * x)
print()

print("the involution is linear and squares to the identity:")
print("  alpha(a)        =", alpha_alg(a))
print("  alpha(alpha(a)) =", alpha_alg(alpha_alg(a)))
print()

c = eval_algebra("x y - 2 . [z]")
print("expressions parse straight into the span:")
print("  eval_algebra('x y - 2 . [z]') =", c)
print()

print("hom-associativity on a random-looking combination:")
lhs = (alpha_alg(a) * (b * c))
rhs = ((a * b) * alpha_alg(c))
print("  alpha(a) * (b c) =", lhs)
print("  (a b) * alpha(c) =", rhs)
print("  equal:", lhs == rhs)
