"""Extending generator images to every word.

Any map from generator names into a lawful finite target extends to a
morphism on all words: marked letters go through the target's alpha, and
longer words fold the product in from the right.  The verifiers then
hunt for violations and, finding none, illustrate freeness.
"""

from invhom import (
    GeneratorAssignment,
    alpha_word,
    diamond,
    extend,
    fixture,
    parse_word,
    verify_morphism,
    verify_uniqueness,
)

target = fixture("involutive")
f = GeneratorAssignment.from_labels(target, {"x": "x", "y": "z"})

print("target labels:", target.labels)
print("assignment: x -> x, y -> z")
print()

for text in ["x", "[x]", "x x", "x [y] x", "y y y"]:
    w = parse_word(text)
    print("  f(%-9s) = %s" % (text, target.labels[extend(f, w)]))
print()

u = parse_word("x [y]")
v = parse_word("[x] x")
fu, fv = extend(f, u), extend(f, v)
print("the extension is a morphism for the twisted product:")
print(
    "  f(u * v) = %s,  f(u) f(v) = %s"
    % (target.labels[extend(f, diamond(u, v))], target.labels[target.mul[fu][fv]])
)
print("and intertwines the involutions:")
print(
    "  f(alpha(u)) = %s,  alpha(f(u)) = %s"
    % (target.labels[extend(f, alpha_word(u))], target.labels[target.alpha[fu]])
)
print()

print("randomized search for a counterexample (there is none):")
print("  verify_morphism ->", verify_morphism(f, max_len=6, samples=500, seed=42))
print()

print("every word factors through the product at each split point, so the")
print("generator images force the whole morphism:")
print("  verify_uniqueness ->", verify_uniqueness(f, max_len=4))
