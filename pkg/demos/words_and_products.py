"""A walk through bracketed words and the twisted product.

Words are sequences of generators, each carrying a bit; the involution
flips every bit, and the product concatenates after twisting the left
factor.  Run me directly, I just print a narrative.
"""

from invhom import (
    alpha_power,
    alpha_word,
    concat,
    diamond,
    diamond_closed,
    embed,
    parse_word,
)

x = embed("x")
y = embed("y")
z = embed("z")

print("generators embed as bare single-letter words:")
print("  x ->", x)
print()

print("the involution flips the bit on every letter:")
w = parse_word("x [y] z")
print("  alpha(%s) = %s" % (w, alpha_word(w)))
print("  alpha twice is the identity:", alpha_word(alpha_word(w)) == w)
print()

print("products with a single letter on the left just concatenate:")
print("  x * (y z) =", diamond(x, parse_word("y z")))
print()

print("longer left factors twist as they fold in:")
xy = diamond(x, y)
print("  (x y) * z  =", diamond(xy, z))
print("  x * (y z)  =", diamond(x, diamond(y, z)))
print("so the product is not associative; only the twisted law holds:")
lhs = diamond(alpha_word(x), diamond(y, z))
rhs = diamond(diamond(x, y), alpha_word(z))
print("  alpha(x)(yz) = %s = (xy)alpha(z) = %s" % (lhs, rhs))
print()

print("the closed form flips all but the last bit of the left factor")
print("and twists the right factor once per flipped letter:")
u = parse_word("[x] y [z]")
v = parse_word("w w")
print("  recursive:  %s" % diamond(u, v))
print("  closed:     %s" % diamond_closed(u, v))
print()

print("splitting the left factor anywhere respects the product:")
w1, w2, w3 = parse_word("x [y]"), parse_word("z"), parse_word("y y")
whole = diamond(concat(w1, w2), w3)
split = concat(alpha_word(w1), diamond(w2, alpha_power(w3, len(w1))))
print("  (w1 w2) * w3           =", whole)
print("  alpha(w1) (w2 * a^2 w3) =", split)
