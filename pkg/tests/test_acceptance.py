"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (with wall time against its budget);
``conftest.py`` prints them at the end of the run.  The module can also be
run directly: ``python3 tests/test_acceptance.py``.
"""
import functools
import json
import random
import sys
import time
import warnings
from fractions import Fraction
from pathlib import Path

import mpmath
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from galecircuit import (  # noqa: E402
    SupportedSystem,
    canonical_max_positive_relation,
    characterize,
    check_partial_sums,
    cli,
    construct_system,
    count_positive_solutions,
    diagonalize,
    edge_counts,
    find_witness_ordering,
    heights,
    kouchnirenko_bound,
    lift_solutions,
    p_sequence,
    realize_circuit,
    select_t,
    system_residuals,
    validate_circuit,
    viro_exponents,
)
from galecircuit.errors import (  # noqa: E402
    DegenerateSystem,
    InvalidProfile,
    NoDiagonalization,
    NotStrictlyIncreasing,
)
from galecircuit.gale import monomial  # noqa: E402
from galecircuit.sturm import RatInterval, refine_interval, sturm_count  # noqa: E402

from oracles import alternating_sequences, witness_exists  # noqa: E402
from sampling import random_circuit, random_system  # noqa: E402

EXAMPLE = (3, -7, 6, -3, 1)
UNIT_SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
RESULTS = []


def criterion(number, title, budget):
    """Time the test body, record a result line, and enforce the time budget."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            detail, ok = "", False
            try:
                detail = fn(*args, **kwargs) or ""
                ok = True
            except BaseException as e:
                detail = f"{type(e).__name__}: {e}".splitlines()[0][:160]
                raise
            finally:
                elapsed = time.perf_counter() - start
                in_time = elapsed < budget
                status = "PASS" if ok and in_time else "FAIL"
                if ok and not in_time:
                    detail = f"over budget; {detail}"
                RESULTS.append(f"[{status}] criterion {number}: {title} ({elapsed:.2f}s / {budget:g}s) {detail}".rstrip())
            assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"

        return run

    return wrap


def _quiet_count(d):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return count_positive_solutions(d)


@criterion(1, "worked example reproduced exactly", 1.0)
def test_criterion_1_example_values():
    v = characterize(realize_circuit(EXAMPLE))
    assert v.supports_max
    assert v.relation.coeffs == EXAMPLE
    assert v.witness.order == (1, 2, 3, 4, 5)
    assert v.witness.signed_seq == EXAMPLE
    prof = edge_counts(EXAMPLE)
    assert prof.edge_counts == (4, 6, 2, 0)
    assert 2 * abs(EXAMPLE[-1]) - 2 == prof.edge_counts[-1] == 0
    p = p_sequence(EXAMPLE)
    assert p.values == (0, 3, 7, 9, 10)
    h = heights(p)
    assert h.values == (0, 0, 4, 8, 11)
    alpha = viro_exponents(p, h)
    F = Fraction
    assert alpha.values == (0, F(4, 7), F(4, 3), F(7, 3))
    pv = p.values
    closed = tuple([F(0)] + [i + F(pv[i + 2] - pv[i + 1], pv[i + 2] - pv[i]) for i in range(3)])
    assert closed == alpha.values
    return "N=(4,6,2,0) p=(0,3,7,9,10) h=(0,0,4,8,11) alpha=(0,4/7,4/3,7/3)"


@criterion(2, "select_t certifies n+1 simple positive roots", 60.0)
def test_criterion_2_select_t():
    cases = [EXAMPLE] + [canonical_max_positive_relation(n) for n in range(1, 9)]
    ks = []
    for seq in cases:
        n = len(seq) - 2
        cert = select_t(seq, tau_budget=64)
        assert cert.k <= 64
        recount = sturm_count(cert.gale, RatInterval(0, None))
        assert recount == n + 1 and recount.squarefree
        assert cert.root_count == n + 1
        ks.append(cert.k)
    return f"k per case {ks}"


@criterion(3, "end-to-end lift on the worked example circuit", 30.0)
def test_criterion_3_end_to_end():
    c = validate_circuit([(3, 0, 0), (0, 3, 0), (0, 0, 3), (3, -7, 6), (0, 0, 0)])
    built = construct_system(c)
    # the independent diagonalization keeps w_1..w_3, so y = z^{w_4}
    d = diagonalize(built.system)
    assert d.labels == ((0, 1, 2), 3, 4)
    gc = _quiet_count(d)
    assert gc.count == 4 and gc.squarefree
    sols = lift_solutions(d, gc.intervals, Fraction(1, 10**9), gale=gc.gale)
    assert len(sols) == 4
    worst_res, worst_y = 0.0, 0.0
    with mpmath.workdps(60):
        for sol in sols:
            res = system_residuals(built.system, sol.z)
            worst_res = max(worst_res, *res)
            y = mpmath.mpf(sol.y.numerator) / sol.y.denominator
            rel = float(abs(monomial(sol.z, c.points[3]) - y) / y)
            worst_y = max(worst_y, rel)
    assert worst_res < 1e-9
    assert worst_y < 1e-9
    return f"4 solutions, max residual {worst_res:.1e}, max y error {worst_y:.1e}"


@criterion(4, "characterization equivalences, exhaustive", 60.0)
def test_criterion_4_equivalences():
    seqs = list(alternating_sequences(6, 6))
    for seq in seqs:
        # single order: T alternation <=> p increasing <=> N >= 0
        t_ok = check_partial_sums(seq)
        try:
            p_sequence(seq)
            p_ok = True
        except NotStrictlyIncreasing:
            p_ok = False
        try:
            edge_counts(seq)
            n_ok = True
        except InvalidProfile:
            n_ok = False
        assert t_ok == p_ok == n_ok, seq
    multisets = {tuple(sorted(s)) for s in seqs}
    found = 0
    for ms in multisets:
        # reorderings: pruned search <=> unpruned permutation oracle
        w = find_witness_ordering(ms)
        assert (w is not None) == witness_exists(ms), ms
        if w is not None:
            found += 1
            assert check_partial_sums(w.signed_seq)
            p_sequence(w.signed_seq)
            edge_counts(w.signed_seq)
    return f"{len(seqs)} sequences, {len(multisets)} multisets ({found} with a witness), 0 discrepancies"


@criterion(5, "1000 random systems respect the sharp bound", 300.0)
def test_criterion_5_random_systems():
    rng = random.Random(12345)
    done = skipped = hits = 0
    while done < 1000:
        n = rng.choice((2, 3))
        c = random_circuit(rng, n)
        s = random_system(rng, c)
        try:
            gc = _quiet_count(diagonalize(s))
        except (NoDiagonalization, DegenerateSystem):
            skipped += 1
            continue
        assert gc.count <= n + 1
        assert gc.count <= kouchnirenko_bound(c)
        if gc.count == n + 1:
            hits += 1
            assert characterize(c).supports_max
        done += 1
    return f"{done} systems ({skipped} redrawn), {hits} reached n+1"


@criterion(6, "negative controls are rejected", 10.0)
def test_criterion_6_negative_controls(tmp_path, capsys):
    for points in (realize_circuit((2, -2, 2, -2)).points, UNIT_SQUARE):
        assert not characterize(points).supports_max
    with pytest.raises(NotStrictlyIncreasing) as e:
        p_sequence((2, -2, 2, -2))
    assert e.value.index == 1 and e.value.values[1] == e.value.values[2]
    with pytest.raises(InvalidProfile) as e:
        edge_counts((2, -2, 2, -2))
    assert (e.value.index, e.value.value) == (2, -2)
    codes = []
    for name, points in (("lam", realize_circuit((2, -2, 2, -2)).points), ("square", UNIT_SQUARE)):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps({"points": [[str(x) for x in p] for p in points]}))
        codes.append(cli.main(["construct", str(path)]))
    capsys.readouterr()
    assert codes == [1, 1]
    return "verdict NO, p_1 = p_2, N_{2,3} = -2, construct exits 1"


@criterion(7, "Descartes base case n=1", 10.0)
def test_criterion_7_descartes():
    built = construct_system(validate_circuit([(0,), (1,), (2,)]))
    assert built.count.count == 2
    s = SupportedSystem(1, [(0,), (1,), (2,)], [[1, -3, 1]])
    d = diagonalize(s)
    gc = _quiet_count(d)
    assert gc.count == 2
    (u,), (ud,) = d.exponents[0], d.distinguished
    got = []
    with mpmath.workdps(50):
        truth = sorted([(3 - mpmath.sqrt(5)) / 2, (3 + mpmath.sqrt(5)) / 2])
        for iv in gc.intervals:
            tight = refine_interval(gc.gale, iv, Fraction(1, 10**16))
            # y = z^ud maps y-intervals monotonically onto z-intervals
            ends = sorted(mpmath.mpf(x.numerator) / x.denominator for x in (tight.lo, tight.hi))
            got.append(sorted(e ** (mpmath.mpf(1) / int(ud)) for e in ends))
        got.sort()
        for (lo, hi), r in zip(got, truth):
            assert lo <= r <= hi
            assert (hi - lo) / r < mpmath.mpf(10) ** -13
            assert mpmath.nstr(lo, 12) == mpmath.nstr(hi, 12) == mpmath.nstr(r, 12)
    return f"roots {mpmath.nstr(got[0][0], 12)}, {mpmath.nstr(got[1][0], 12)}"


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
