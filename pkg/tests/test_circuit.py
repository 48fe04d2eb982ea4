import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from galecircuit import (
    affine_relation,
    canonical_max_positive_relation,
    characterize,
    check_partial_sums,
    find_witness_ordering,
    kouchnirenko_bound,
    realize_circuit,
    sign_balance_check,
    validate_circuit,
)
from galecircuit.circuit import FAILED_PARTIAL_SUMS, normalize_relation
from galecircuit.errors import NotACircuit, PreconditionViolated

from oracles import alternating_sequences, hull_volume, running_sums_alternate, witness_exists

EXAMPLE = (3, -7, 6, -3, 1)
UNIT_SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


@st.composite
def relations(draw, max_abs=8, max_n=5):
    n = draw(st.integers(1, max_n))
    head = draw(st.lists(st.integers(-max_abs, max_abs).filter(bool), min_size=n + 1, max_size=n + 1))
    last = -sum(head)
    assume(last != 0 and abs(last) <= max_abs)
    return tuple(head) + (last,)


def test_example_relation_and_witness():
    c = realize_circuit(EXAMPLE)
    assert [list(p) for p in c.points] == [[3, 0, 0], [0, 3, 0], [0, 0, 3], [3, -7, 6], [0, 0, 0]]
    v = characterize(c)
    assert v.supports_max and v.sign_balanced
    assert v.relation.coeffs == EXAMPLE
    assert v.witness.order == (1, 2, 3, 4, 5)
    assert v.witness.partial_sums == (3, -4, 2, -1, 0)


def test_unit_square_fails_partial_sums():
    v = characterize(UNIT_SQUARE)
    assert not v.supports_max
    assert v.sign_balanced
    assert v.failure_reason == FAILED_PARTIAL_SUMS
    assert sorted(v.relation.coeffs) == [-1, -1, 1, 1]


def test_sign_balance_failure_reported():
    # interior point of a triangle: three positive coefficients against one
    v = characterize([(0, 0), (3, 0), (0, 3), (1, 1)])
    assert v.relation.coeffs == (1, 1, 1, -3)
    assert not v.supports_max and not v.sign_balanced
    assert "sign balance" in v.failure_reason


@pytest.mark.parametrize("points", [
    [],
    [(0, 0), (1, 0), (0, 1)],
    [(0, 0), (1, 0), (0, 1), (0, 1)],
    [(0, 0), (1, 0), (2, 0), (0, 1)],
    [(0, 0), (1, 0), (0, 1), (1,)],
])
def test_invalid_circuits(points):
    with pytest.raises(NotACircuit):
        validate_circuit(points)


@settings(max_examples=150)
@given(relations())
def test_realize_round_trip(r):
    c = realize_circuit(r)
    assert affine_relation(c).coeffs == normalize_relation(r)
    assert c.is_integral()


def test_realize_rejects_bad_relations():
    with pytest.raises(PreconditionViolated):
        realize_circuit((1, -1, 1))
    with pytest.raises(PreconditionViolated):
        realize_circuit((1, 0, -1))
    with pytest.raises(PreconditionViolated):
        realize_circuit((1, -2, 1), n=2)


def test_check_partial_sums_preconditions():
    assert check_partial_sums((1, -2, 2, -1))
    assert not check_partial_sums((2, -2, 2, -2))
    with pytest.raises(PreconditionViolated):
        check_partial_sums((1, 2, -3))
    with pytest.raises(PreconditionViolated):
        check_partial_sums((1, -2, 2))


def test_witness_matches_exhaustive_oracle():
    seen = set()
    for seq in alternating_sequences(6, 6):
        key = tuple(sorted(seq))
        if key in seen:
            continue
        seen.add(key)
        # shuffle so the search never starts from the given order
        shuffled = list(seq)
        random.Random(len(seen)).shuffle(shuffled)
        w = find_witness_ordering(shuffled)
        assert (w is not None) == witness_exists(seq), seq
        if w is not None:
            assert running_sums_alternate(w.signed_seq)
            assert sign_balance_check(shuffled)
            base = normalize_relation(shuffled)
            assert w.signed_seq == tuple(w.sign * base[i] for i in w.indices)


def test_witness_is_lexicographically_smallest():
    from itertools import permutations

    r = (6, -3, 1, 3, -7)
    w = find_witness_ordering(r)
    best = None
    for sign in (1, -1):
        for perm in permutations(range(5)):
            seq = [sign * r[i] for i in perm]
            if all((x > 0) == (k % 2 == 0) for k, x in enumerate(seq)) and running_sums_alternate(seq):
                cand = tuple(i + 1 for i in perm)
                best = cand if best is None or cand < best else best
    assert w.order == best


def test_canonical_relation():
    for n in range(1, 9):
        r = canonical_max_positive_relation(n)
        assert len(r) == n + 2 and sum(r) == 0
        assert check_partial_sums(r)
        assert characterize(realize_circuit(r)).supports_max
    with pytest.raises(ValueError):
        canonical_max_positive_relation(0)


def _unimodular(n, rng):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(4):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i != j:
            k = rng.choice((-2, -1, 1, 2))
            m[i] = [a + k * b for a, b in zip(m[i], m[j])]
    if rng.random() < 0.5:
        m[0] = [-a for a in m[0]]
    return m


@settings(max_examples=80)
@given(relations(max_abs=6, max_n=4), st.randoms(use_true_random=False))
def test_characterize_invariance(r, rng):
    c = realize_circuit(r)
    base = characterize(c)
    n = c.dim
    pts = [list(p) for p in c.points]
    rng.shuffle(pts)
    shift = [rng.randint(-5, 5) for _ in range(n)]
    m = _unimodular(n, rng)
    moved = [[sum(m[i][k] * p[k] for k in range(n)) + shift[i] for i in range(n)] for p in pts]
    v = characterize(moved)
    assert v.supports_max == base.supports_max
    assert sorted(v.relation.coeffs) in (sorted(base.relation.coeffs), sorted(-x for x in base.relation.coeffs))


@settings(max_examples=60)
@given(relations(max_abs=5, max_n=3))
def test_kouchnirenko_matches_hull_volume(r):
    c = realize_circuit(r)
    kb = kouchnirenko_bound(c)
    assert kb == pytest.approx(factorial(c.dim) * hull_volume(c.points), rel=1e-9)


def test_kouchnirenko_needs_integral_points():
    c = validate_circuit([(0, 0), (Fraction(1, 2), 0), (0, 1), (1, 1)])
    with pytest.raises(ValueError):
        kouchnirenko_bound(c)
