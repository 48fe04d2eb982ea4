import random
import warnings
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galecircuit import (
    DiagonalSystem,
    SupportedSystem,
    characterize,
    count_positive_solutions,
    diagonalize,
    gale_polynomial,
    kouchnirenko_bound,
    lift_solutions,
    normalize_support,
    positivity_domain,
    system_residuals,
)
from galecircuit.errors import DegenerateSystem, NoDiagonalization
from galecircuit.gale import diagonal_residuals, monomial, solve_system
from galecircuit.polynomial import RatPoly
from galecircuit.sturm import RatInterval

from sampling import random_circuit, random_system, tropical_system

EPS = 1e-9


def count(s):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return count_positive_solutions(diagonalize(s))


def test_hand_computed_gale_polynomial():
    # z1 = 1 + y, z2 = 2 - y, y = z1 z2: G = (1 + y)(2 - y) - y = 2 - y^2
    d = DiagonalSystem(2, [(1, 0), (0, 1)], (1, 1), [(1, 1), (2, -1)])
    assert d.relation() == (1, 1, -1, -1)
    assert gale_polynomial(d) == RatPoly([2, 0, -1])
    assert positivity_domain(d) == RatInterval(0, 2)
    gc = count_positive_solutions(d)
    assert gc.count == 1 and gc.squarefree
    (sol,) = lift_solutions(d, gc.intervals)
    with mpmath.workdps(30):
        assert abs(sol.z[0] - (1 + mpmath.sqrt(2))) < 1e-20
        assert abs(sol.z[1] - (2 - mpmath.sqrt(2))) < 1e-20


def test_descartes_quadratic():
    s = SupportedSystem(1, [[0], [1], [2]], [[1, -3, 1]])
    d, gc, sols = solve_system(s)
    assert gc.count == 2 and len(sols) == 2
    with mpmath.workdps(30):
        roots = sorted(float(x.z[0]) for x in sols)
        assert roots == pytest.approx([(3 - 5**0.5) / 2, (3 + 5**0.5) / 2], rel=1e-12)
        for sol in sols:
            assert max(system_residuals(s, sol.z)) < EPS


def test_diagonalize_prefers_first_labels():
    s = SupportedSystem(2, [(1, 0), (0, 1), (1, 1), (0, 0)], [[1, 0, -1, 2], [0, 1, 3, -1]])
    d = diagonalize(s)
    assert d.labels == ((0, 1), 2, 3)
    assert d.linear_parts == ((-2, 1), (1, -3))


def test_diagonalize_fails_on_rank_deficient_coefficients():
    s = SupportedSystem(2, [(1, 0), (0, 1), (1, 1), (0, 0)], [[1, 2, 3, 4], [2, 4, 6, 8]])
    with pytest.raises(NoDiagonalization):
        diagonalize(s)


def test_degenerate_gale_polynomial():
    d = DiagonalSystem(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], (2, 1, -1), [(0, 0), (1, 1), (0, 0)])
    with pytest.raises(DegenerateSystem):
        count_positive_solutions(d)


def test_empty_positivity_domain():
    d = DiagonalSystem(1, [(2,)], (1,), [(-1, -1)])
    assert positivity_domain(d) is None
    assert count_positive_solutions(d).count == 0


def test_dependent_exponents_rejected():
    with pytest.raises(NoDiagonalization):
        DiagonalSystem(2, [(1, 1), (2, 2)], (1, 0), [(1, 1), (1, 1)])


def test_system_validation():
    with pytest.raises(ValueError):
        diagonalize(SupportedSystem(2, [(0, 0), (1, 0), (0, 1)], [[1, 1, 1], [1, 1, 1]]))
    with pytest.raises(ValueError):
        SupportedSystem(1, [(0,), (0,), (1,)], [[1, 1, 1]])
    with pytest.raises(ValueError):
        SupportedSystem(1, [(0,), (1,), (2,)], [[1, 1]])


def test_normalize_support_scales_and_translates():
    s = SupportedSystem(1, [[Fraction(1, 2)], [Fraction(3, 2)], [1]], [[1, -3, 1]])
    t, m = normalize_support(s)
    assert m == 2
    assert [w[0] for w in t.support] == [-1, 1, 0]
    assert count(s).count == count(t).count


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2, 3]))
def test_count_invariant_under_row_scaling_and_permutation(seed, n):
    rng = random.Random(seed)
    c = random_circuit(rng, n)
    s = random_system(rng, c)
    try:
        base = count(s).count
    except (NoDiagonalization, DegenerateSystem):
        return
    rows = [[x * k for x in row] for row, k in zip(s.coefficients, [rng.randint(1, 9) for _ in range(n)])]
    rng.shuffle(rows)
    assert count(SupportedSystem(n, s.support, rows)).count == base


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2, 3]))
def test_lift_is_bijective(seed, n):
    rng = random.Random(seed)
    c = random_circuit(rng, n)
    s = tropical_system(rng, c, spread=6) if seed % 2 else random_system(rng, c)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            d, gc, sols = solve_system(s)
    except (NoDiagonalization, DegenerateSystem):
        return
    assert len(sols) == gc.count
    ys = [sol.y for sol in sols]
    assert ys == sorted(ys)
    for sol in sols:
        assert max(sol.residuals) < EPS
        assert max(system_residuals(s, sol.z)) < EPS
        assert all(x > 0 for x in sol.z)


def test_residuals_detect_wrong_point():
    d = DiagonalSystem(2, [(1, 0), (0, 1)], (1, 1), [(1, 1), (2, -1)])
    with mpmath.workdps(30):
        res = diagonal_residuals(d, (mpmath.mpf(2), mpmath.mpf(1)), mpmath.mpf(1))
        assert max(res) > 0.1
        assert monomial((mpmath.mpf(4), mpmath.mpf(9)), (Fraction(1, 2), Fraction(1, 2))) == 6


def test_random_sweep_bounds():
    rng = random.Random(2024)
    for _ in range(150):
        n = rng.choice((1, 2, 3))
        c = random_circuit(rng, n)
        try:
            gc = count(random_system(rng, c))
        except (NoDiagonalization, DegenerateSystem):
            continue
        assert gc.count <= n + 1
        assert gc.count <= kouchnirenko_bound(c)
        if gc.count == n + 1:
            assert characterize(c).supports_max


def test_tropical_sweep_reaches_maximum_only_on_positive_circuits():
    # unbiased integer coefficients almost never reach n+1; this sampler does
    rng = random.Random(3)
    hits = 0
    for _ in range(300):
        n = rng.choice((2, 3))
        c = random_circuit(rng, n)
        try:
            gc = count(tropical_system(rng, c))
        except (NoDiagonalization, DegenerateSystem):
            continue
        assert gc.count <= n + 1
        if gc.count == n + 1:
            hits += 1
            assert characterize(c).supports_max
    assert hits >= 1
