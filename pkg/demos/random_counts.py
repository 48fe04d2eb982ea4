"""
Positive solution counts of random systems
==========================================

Draw random circuits in the plane and in space, put random integer
coefficients on them, and count positive solutions exactly.
"""

import random
import warnings
from collections import Counter

from galecircuit import (
    SupportedSystem,
    characterize,
    count_positive_solutions,
    diagonalize,
    kouchnirenko_bound,
    validate_circuit,
)
from galecircuit.errors import DegenerateSystem, NoDiagonalization, NotACircuit

warnings.simplefilter("ignore")
rng = random.Random(0)
tally = Counter()

while sum(tally.values()) < 300:
    n = rng.choice((2, 3))
    pts = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n + 2)]
    try:
        c = validate_circuit(pts)
    except NotACircuit:
        continue
    rows = [[rng.choice([-3, -2, -1, 1, 2, 3]) for _ in pts] for _ in range(n)]
    try:
        gc = count_positive_solutions(diagonalize(SupportedSystem(n, pts, rows)))
    except (NoDiagonalization, DegenerateSystem):
        continue
    assert gc.count <= min(n + 1, kouchnirenko_bound(c))
    tally[(n, gc.count, characterize(c).supports_max)] += 1

# (n, count, circuit verdict) -> frequency
for key in sorted(tally):
    print(key, tally[key])
