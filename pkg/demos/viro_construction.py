"""
Building a system with the maximal number of positive solutions
================================================================

From an ordering witness we build a univariate Gale polynomial whose
coefficients are powers of a small parameter t, certify n+1 positive roots
with a Sturm sequence, and lift the roots back to points in the orthant.
"""

import mpmath

from galecircuit import (
    construct_system,
    count_positive_solutions,
    diagonalize,
    facial_subpolynomials,
    lift_solutions,
    heights,
    p_sequence,
    realize_circuit,
    system_residuals,
    viro_exponents,
)

lam = (3, -7, 6, -3, 1)

# Interleaved partial sums, then heights with slopes 0, 1, 2, 3.
p = p_sequence(lam)
h = heights(p)
alpha = viro_exponents(p, h)
print("p =", [str(x) for x in p], " h =", [str(x) for x in h])
print("alpha =", [str(a) for a in alpha])

# Every lower-hull edge of the (degree, t-order) support carries a binomial
# with coefficients of opposite sign, hence one positive root.
for b in facial_subpolynomials(lam, alpha):
    print("edge", [tuple(map(str, v)) for v in b.edge], "terms", [(d, str(c)) for d, c in b.terms])

c = realize_circuit(lam)
built = construct_system(c)
cert = built.certificate
print(f"tau = 1/2^{cert.k}, t = tau^{cert.M}, Gale degree {cert.gale.degree}, roots {cert.root_count}")

# The emitted system, one equation per row over the circuit's points.
for row in built.system.coefficients:
    print([str(x) for x in row])

# Recount from scratch through the default diagonalization, then lift.
d = diagonalize(built.system)
gc = count_positive_solutions(d)
print("independent count:", gc.count)
sols = lift_solutions(d, gc.intervals, gale=gc.gale)
with mpmath.workdps(30):
    for sol in sols:
        z = [mpmath.nstr(x, 12) for x in sol.z]
        print("z =", z, " max residual", f"{max(system_residuals(built.system, sol.z)):.1e}")
