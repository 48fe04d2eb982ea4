"""
Which circuits admit n+1 positive solutions?
=============================================

A circuit is n+2 points in n-space with a single affine relation.  Here we
compute that relation for a few circuits and ask for an ordering witness.
"""

from galecircuit import characterize, realize_circuit, sign_balance_check

# The standard circuit with relation (3, -7, 6, -3, 1): three scaled unit
# vectors, one extra point, and the origin.
c = realize_circuit((3, -7, 6, -3, 1))
for p in c.points:
    print([int(x) for x in p])

v = characterize(c)
print("relation:", v.relation.coeffs)
print("supports n+1 positive solutions:", v.supports_max)
print("witness order:", v.witness.order, "running sums:", v.witness.partial_sums)

# The unit square passes the sign-balance test but no ordering works:
# after 1, -1 the running sum is already zero.
square = [(0, 0), (1, 0), (0, 1), (1, 1)]
v = characterize(square)
print(v.relation.coeffs, sign_balance_check(v.relation), v.supports_max, v.failure_reason)

# A point inside a triangle is unbalanced: three positive coefficients
# against one negative.
v = characterize([(0, 0), (3, 0), (0, 3), (1, 1)])
print(v.relation.coeffs, v.failure_reason)

# Reordering the points does not change the verdict, only the witness labels.
shuffled = [c.points[i] for i in (4, 2, 0, 3, 1)]
v = characterize(shuffled)
print(v.relation.coeffs, v.witness.order, v.witness.signed_seq)
