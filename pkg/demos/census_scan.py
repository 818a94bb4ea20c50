"""Counting small structures by which laws they satisfy.

An order-n candidate is a product table plus a unary map, n^(n^2+n)
in all.  The census buckets every candidate by four independent laws;
the stream hands back only the structures matching a requested
profile, optionally one per isomorphism class.
"""

from itertools import islice

from invhom import canonical_form, census, iter_matching, relabel, structure_to_dict

for order in (1, 2):
    c = census(order)
    print("order %d: %d candidates" % (order, c.total_candidates))
    print("  hom-associative          %d" % c.law_count(hom_associative=True))
    print(
        "  multiplicative hom-sgs   %d"
        % c.law_count(hom_associative=True, multiplicative=True)
    )
    print(
        "  involutive hom-sgs       %d"
        % c.law_count(hom_associative=True, multiplicative=True, involutive_alpha=True)
    )
    print()

c2 = census(2, up_to_iso=True)
print("order 2 up to isomorphism: %d classes" % sum(c2.counts.values()))
print()

print("first involutive hom-semigroups of order 3, streamed:")
stream = iter_matching(
    3, hom_associative=True, multiplicative=True, involutive_alpha=True
)
for m in islice(stream, 4):
    d = structure_to_dict(m)
    print("  mul=%s alpha=%s" % (d["mul"], d["alpha"]))
print()

m = next(
    iter_matching(2, hom_associative=True, multiplicative=True, involutive_alpha=True)
)
swapped = relabel(m, (1, 0))
print("relabelling never changes the canonical form:")
print("  ", canonical_form(m.mul, m.alpha) == canonical_form(swapped.mul, swapped.alpha))
