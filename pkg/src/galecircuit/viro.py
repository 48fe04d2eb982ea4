"""Witness systems with n+1 positive solutions by Viro patchworking.

Given an alternating relation ``l_1, ..., l_{n+2}`` whose running sums
alternate strictly, take ``P_1 = t^{a_1} y``, ``P_i = 1 + t^{a_i} y`` for
``2 <= i <= n+1`` and ``P_{n+2} = 1``.  The exponents ``a_i`` come from a
convex piecewise-linear height function over the interleaved partial sums
``p_0 < p_1 < ... < p_{n+1}``; every edge of the lower hull of the
resulting Gale polynomial then carries a binomial with one positive root,
so for small ``t`` there are exactly ``n+1`` positive roots.

Everything is kept rational: ``t = tau**M`` where ``M`` clears the
denominators of the ``a_i``.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm
from typing import Optional

from .circuit import affine_relation, characterize, check_partial_sums
from .errors import (
    InvalidSlopes,
    NotBinomial,
    NotStrictlyIncreasing,
    PreconditionViolated,
    SmallTExhausted,
)
from .gale import DiagonalSystem, SupportedSystem, count_positive_solutions
from .hull import lower_hull, on_segment
from .polynomial import RatPoly, poly_mul, poly_pow
from .sturm import RatInterval, SturmChain, isolate_roots, sturm_count


@dataclass(frozen=True)
class PSequence:
    values: tuple
    source: tuple

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class HeightFunction:
    values: tuple
    slopes: tuple

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class ViroExponents:
    """``values[i - 1]`` is the exponent of ``t`` in ``P_i``."""

    values: tuple

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class ViroCertificate:
    lam: tuple
    p: tuple
    h: tuple
    slopes: tuple
    alpha: tuple
    k: int
    M: int
    gale: RatPoly
    root_count: int
    intervals: tuple

    @property
    def tau(self):
        return Fraction(1, 2**self.k)

    @property
    def t(self):
        return self.tau**self.M

    @property
    def n(self):
        return len(self.lam) - 2

    def coefficient(self, i):
        """``t^{a_i}`` for 1-based ``i``, as an exact rational."""
        return self.tau ** int(self.M * self.alpha[i - 1])

    def replay(self):
        """Recount the roots of the stored polynomial on (0, +inf)."""
        return sturm_count(self.gale, RatInterval(0, None))


def _check_alternating(seq):
    seq = tuple(Fraction(x) for x in seq)
    for i, x in enumerate(seq):
        if x == 0 or (x > 0) != (i % 2 == 0):
            raise PreconditionViolated(f"signs do not alternate starting positive at position {i + 1}")
    if sum(seq) != 0:
        raise PreconditionViolated(f"coefficients sum to {sum(seq)}, not 0")
    return seq


def p_sequence(seq):
    """Interleaved partial sums ``p_0 = 0, p_1 = l_1, p_2 = -l_2, p_3 = l_1 + l_3, ...``.

    Raises NotStrictlyIncreasing when the sequence is not strictly
    increasing, which happens exactly when the running-sum test fails.
    """
    seq = _check_alternating(seq)
    sums = [Fraction(0), Fraction(0)]
    values = [Fraction(0)]
    for i, x in enumerate(seq[:-1]):
        sums[i % 2] += abs(x)
        values.append(sums[i % 2])
    values = tuple(values)
    for i in range(len(values) - 1):
        if values[i] >= values[i + 1]:
            raise NotStrictlyIncreasing(i, values)
    return PSequence(values, seq)


def default_slopes(n):
    return tuple(Fraction(i) for i in range(n + 1))


def heights(p, slopes=None):
    """Heights over ``p`` with prescribed edge slopes, starting at ``h_0 = 0``."""
    pv = tuple(p)
    n = len(pv) - 2
    slopes = default_slopes(n) if slopes is None else tuple(Fraction(s) for s in slopes)
    if len(slopes) != n + 1:
        raise InvalidSlopes(f"expected {n + 1} slopes, got {len(slopes)}")
    if any(a >= b for a, b in zip(slopes, slopes[1:])):
        raise InvalidSlopes(f"slopes must be strictly increasing: {[str(s) for s in slopes]}")
    h = [Fraction(0)]
    for i, s in enumerate(slopes):
        h.append(h[-1] + s * (pv[i + 1] - pv[i]))
    pts = list(zip(pv, h))
    if lower_hull(pts) != pts:
        raise InvalidSlopes("lower hull is not the full chain of segments")
    return HeightFunction(tuple(h), slopes)


def viro_exponents(p, h):
    """``a_1 = h_1/p_1``, ``a_2 = h_2/p_2``, ``a_i = (h_i - h_{i-2})/(p_i - p_{i-2})``."""
    pv, hv = tuple(p), tuple(h)
    alpha = [hv[1] / pv[1], hv[2] / pv[2]]
    for i in range(3, len(pv)):
        alpha.append((hv[i] - hv[i - 2]) / (pv[i] - pv[i - 2]))
    alpha = alpha[: len(pv) - 1]
    slopes = getattr(h, "slopes", None)
    if slopes is not None and slopes == default_slopes(len(pv) - 2):
        # unit slopes: a_{i+2} = i + (p_{i+2} - p_{i+1}) / (p_{i+2} - p_i)
        closed = [Fraction(0)] + [
            i + (pv[i + 2] - pv[i + 1]) / (pv[i + 2] - pv[i]) for i in range(len(pv) - 2)
        ]
        if closed != alpha:
            raise AssertionError(f"closed form {closed} disagrees with {alpha}")
    return ViroExponents(tuple(alpha))


def _factors(seq, alpha):
    """Yield ``(sign_class, exponent_of_t, has_constant, power)`` per factor."""
    m = len(seq)
    for i, lam in enumerate(seq):
        if i == m - 1:
            continue  # P_{n+2} = 1
        yield i % 2 == 0, Fraction(alpha[i]), i != 0, abs(int(lam))


def viro_terms(seq, alpha):
    """Bivariate expansion ``{(degree in y, exponent of t): coefficient}``."""
    seq = _check_alternating(seq)
    if any(x.denominator != 1 for x in seq):
        raise PreconditionViolated("Viro expansion needs an integer relation")
    prods = {True: {(0, Fraction(0)): 1}, False: {(0, Fraction(0)): 1}}
    for odd, a, has_const, e in _factors(seq, alpha):
        if has_const:
            factor = {(k, k * a): comb(e, k) for k in range(e + 1)}
        else:
            factor = {(e, e * a): 1}
        out = defaultdict(int)
        for (d1, q1), c1 in prods[odd].items():
            for (d2, q2), c2 in factor.items():
                out[(d1 + d2, q1 + q2)] += c1 * c2
        prods[odd] = out
    terms = defaultdict(int)
    for key, c in prods[True].items():
        terms[key] += c
    for key, c in prods[False].items():
        terms[key] -= c
    return {k: Fraction(c) for k, c in sorted(terms.items()) if c}


def clearing_exponent(alpha):
    """Least ``M`` making every ``M * a_i`` an integer."""
    return lcm(*(Fraction(a).denominator for a in alpha))


def gale_viro(seq, alpha, tau, M, cap=None):
    """Gale polynomial with ``t = tau**M`` substituted; exact rational coefficients."""
    seq = _check_alternating(seq)
    tau = Fraction(tau)
    plus, minus = RatPoly([1]), RatPoly([1])
    for odd, a, has_const, e in _factors(seq, alpha):
        ma = M * a
        if ma.denominator != 1:
            raise PreconditionViolated(f"M = {M} does not clear exponent {a}")
        coeff = tau ** int(ma)
        base = RatPoly([1, coeff]) if has_const else RatPoly([0, coeff])
        f = poly_pow(base, e, cap)
        if odd:
            plus = poly_mul(plus, f, cap)
        else:
            minus = poly_mul(minus, f, cap)
    return plus - minus


@dataclass(frozen=True)
class FacialBinomial:
    """Terms of the Viro expansion lying on one lower-hull edge."""

    edge: tuple
    terms: tuple  # ((degree, coefficient), (degree, coefficient))

    @property
    def positive_root(self):
        """Positive root of the binomial in the edge-scaled variable."""
        (d0, c0), (d1, c1) = self.terms
        return float(-c0 / c1) ** (1.0 / (d1 - d0))


def facial_subpolynomials(seq, alpha):
    """One binomial per lower-hull edge; raises NotBinomial otherwise."""
    terms = viro_terms(seq, alpha)
    hull = lower_hull(terms.keys())
    out = []
    for a, b in zip(hull, hull[1:]):
        on = sorted((d, c) for (d, q), c in terms.items() if on_segment((d, q), a, b))
        if len(on) != 2:
            raise NotBinomial(f"edge {a}-{b} carries {len(on)} terms")
        if (on[0][1] > 0) == (on[1][1] > 0):
            raise NotBinomial(f"edge {a}-{b} has coefficients of equal sign")
        out.append(FacialBinomial((a, b), tuple(on)))
    return out


def select_t(seq, slopes=None, tau_budget=64, cap=None):
    """Find the least ``k <= tau_budget`` with ``tau = 2^-k`` certifying n+1 roots.

    The count is exact (Sturm on (0, +inf)) and the roots must be simple.
    """
    seq = _check_alternating(seq)
    n = len(seq) - 2
    p = p_sequence(seq)
    h = heights(p, slopes)
    alpha = viro_exponents(p, h)
    M = clearing_exponent(alpha)
    positive = RatInterval(0, None)
    for k in range(1, tau_budget + 1):
        g = gale_viro(seq, alpha, Fraction(1, 2**k), M, cap)
        chain = SturmChain(g)
        count = sturm_count(chain, positive)
        if count == n + 1 and count.squarefree:
            return ViroCertificate(
                lam=tuple(seq), p=p.values, h=h.values, slopes=h.slopes, alpha=alpha.values,
                k=k, M=M, gale=g, root_count=int(count),
                intervals=tuple(isolate_roots(chain, positive)),
            )
    raise SmallTExhausted(f"no tau = 2^-k with k <= {tau_budget} gives {n + 1} simple positive roots")


@dataclass(frozen=True)
class Construction:
    system: SupportedSystem
    diagonal: DiagonalSystem
    certificate: ViroCertificate
    witness: object
    count: object = field(default=None, compare=False)


def construct_system(c, witness=None, slopes=None, tau_budget=64, cap=None):
    """Explicit system on circuit ``c`` with n+1 positive solutions.

    The first point in witness order is distinguished (its factor is the
    pure monomial), the last is the origin, and each remaining point gives
    the equation ``z^{w_i - w_o} = 1 + t^{a_i - a_1} z^{w_d - w_o}``.
    """
    if witness is None:
        verdict = characterize(c)
        if not verdict.supports_max:
            raise PreconditionViolated(f"circuit does not support n+1 positive solutions: {verdict.failure_reason}")
        witness = verdict.witness
    if not check_partial_sums(witness.signed_seq):
        raise PreconditionViolated("witness fails the running-sum test")
    rel = affine_relation(c)
    if tuple(witness.sign * rel[i] for i in witness.indices) != tuple(witness.signed_seq):
        raise PreconditionViolated("witness does not match the circuit's relation")
    cert = select_t(witness.signed_seq, slopes, tau_budget, cap)
    n = c.dim
    idx = witness.indices
    d, o = idx[0], idx[-1]
    shift = cert.alpha[0]
    coeffs = [cert.tau ** int(cert.M * (cert.alpha[j] - shift)) for j in range(1, n + 1)]
    w = c.points
    rows = []
    for j, cf in zip(idx[1:-1], coeffs):
        row = [Fraction(0)] * (n + 2)
        row[j] = Fraction(1)
        row[o] = Fraction(-1)
        row[d] = -cf
        rows.append(row)
    system = SupportedSystem(n, w, rows)
    diag = DiagonalSystem(
        n,
        [tuple(x - y for x, y in zip(w[j], w[o])) for j in idx[1:-1]],
        tuple(x - y for x, y in zip(w[d], w[o])),
        [(1, cf) for cf in coeffs],
        labels=(tuple(idx[1:-1]), d, o),
    )
    gc = count_positive_solutions(diag, cap=cap)
    if gc.count != n + 1 or not gc.squarefree:
        raise AssertionError(f"constructed system has {gc.count} positive solutions, expected {n + 1}")
    return Construction(system, diag, cert, witness, gc)
