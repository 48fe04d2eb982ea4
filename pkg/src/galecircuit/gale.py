"""Gale duality for systems supported on n+2 points.

A system ``sum_k c_jk z^{w_k} = 0`` (j = 1..n) is reduced to the diagonal
form ``z^{u_i} = a_i + b_i y`` with ``y = z^{u_d}``, where ``u`` are the
exponents translated so that one support point (the origin) sits at 0.
The positive solutions then correspond to the roots of the Gale
polynomial inside the interval where every ``a_i + b_i y`` and ``y`` are
positive.
"""
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Optional

import mpmath

from . import linalg
from .circuit import normalize_relation
from .errors import DegenerateSystem, NoDiagonalization, ResidualTooLarge, SingularMatrix
from .polynomial import RatPoly, poly_mul, poly_pow
from .sturm import RatInterval, SturmChain, isolate_roots, refine_interval, sturm_count

DEFAULT_EPS = Fraction(1, 10**9)


@dataclass(frozen=True)
class SupportedSystem:
    """``n`` equations; row ``j`` of ``coefficients`` pairs with ``support``."""

    dim: int
    support: tuple
    coefficients: tuple

    def __post_init__(self):
        support = tuple(tuple(Fraction(x) for x in w) for w in self.support)
        coeffs = linalg.as_matrix(self.coefficients)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "coefficients", coeffs)
        if any(len(w) != self.dim for w in support):
            raise ValueError("support vectors must have length dim")
        if len(set(support)) != len(support):
            raise ValueError("support points must be distinct")
        if len(coeffs) != self.dim or any(len(row) != len(support) for row in coeffs):
            raise ValueError(f"expected a {self.dim}x{len(support)} coefficient matrix")


@dataclass(frozen=True)
class DiagonalSystem:
    """The system ``z^{exponents[i]} = a_i + b_i * z^{distinguished}``.

    ``labels`` records which original support indices (0-based) became the
    retained points, the distinguished point and the origin.
    """

    dim: int
    exponents: tuple
    distinguished: tuple
    linear_parts: tuple
    labels: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(tuple(Fraction(x) for x in e) for e in self.exponents))
        object.__setattr__(self, "distinguished", tuple(Fraction(x) for x in self.distinguished))
        object.__setattr__(
            self, "linear_parts", tuple((Fraction(a), Fraction(b)) for a, b in self.linear_parts)
        )
        if len(self.exponents) != self.dim or len(self.linear_parts) != self.dim:
            raise ValueError("need one exponent and one linear part per equation")
        if linalg.rank(self.exponents) != self.dim:
            raise NoDiagonalization("retained exponents are linearly dependent")

    def linear_polys(self):
        return [RatPoly.linear(a, b) for a, b in self.linear_parts]

    def relation(self):
        """Integer relation on (u_1, ..., u_n, u_d, 0), normalized.

        The last entry makes the coefficients sum to zero, as for an affine
        relation on the untranslated points.
        """
        cols = list(zip(*(list(self.exponents) + [self.distinguished])))
        ker = linalg.kernel(cols)
        lam = list(ker[0])
        lam.append(-sum(lam))
        return normalize_relation(lam)


@dataclass(frozen=True)
class PositiveSolution:
    y: Fraction
    interval: RatInterval
    z: tuple
    residuals: tuple
    precision: int


@dataclass(frozen=True)
class GaleCount:
    count: int
    gale: RatPoly
    domain: Optional[RatInterval]
    intervals: tuple
    squarefree: bool = True
    endpoint_root: bool = False


def normalize_support(s):
    """Scale exponents to integers and translate the last point to 0.

    The map ``z -> z^m`` is a bijection of the positive orthant, so the
    positive solution count is unchanged.
    """
    m = lcm(*(x.denominator for w in s.support for x in w))
    origin = s.support[-1]
    support = tuple(tuple((x - o) * m for x, o in zip(w, origin)) for w in s.support)
    return SupportedSystem(s.dim, support, s.coefficients), m


def _candidates(k, n):
    for retained in combinations(range(k), n):
        a, b = [i for i in range(k) if i not in retained]
        yield retained, a, b
        yield retained, b, a


def diagonalize(s):
    """Reduce to diagonal form by Gaussian elimination.

    Retained sets are tried in lexicographic order, so when the first
    ``n`` points work the last two become distinguished and origin.
    """
    n = s.dim
    cols = list(zip(*s.coefficients))
    k = len(s.support)
    if k != n + 2:
        raise ValueError(f"support must have n+2 = {n + 2} points, got {k}")
    inverses = {}
    for retained, d, o in _candidates(k, n):
        if retained not in inverses:
            sub = [[cols[j][i] for j in retained] for i in range(n)]
            try:
                inverses[retained] = linalg.inverse(sub)
            except SingularMatrix:
                inverses[retained] = None
        inv = inverses[retained]
        if inv is None:
            continue
        origin = s.support[o]
        exps = [tuple(x - y for x, y in zip(s.support[j], origin)) for j in retained]
        if linalg.rank(exps) != n:
            continue
        ed = linalg.matvec(inv, cols[d])
        eo = linalg.matvec(inv, cols[o])
        parts = [(-eo[i], -ed[i]) for i in range(n)]
        dist = tuple(x - y for x, y in zip(s.support[d], origin))
        return DiagonalSystem(n, exps, dist, parts, labels=(tuple(retained), d, o))
    raise NoDiagonalization("every choice of retained points gives a singular coefficient block")


def positivity_domain(d):
    """Open interval where ``y`` and every ``a_i + b_i y`` are positive, or None."""
    lo, hi = Fraction(0), None
    for a, b in d.linear_parts:
        if b > 0:
            lo = max(lo, -a / b)
        elif b < 0:
            hi = -a / b if hi is None else min(hi, -a / b)
        elif a <= 0:
            return None
    if hi is not None and lo >= hi:
        return None
    return RatInterval(lo, hi)


def gale_polynomial(d, r=None, cap=None):
    """``prod_{l_i>0} P_i^{l_i} - prod_{l_i<0} P_i^{-l_i}``.

    ``P`` runs over the diagonal linear parts, then ``y`` for the
    distinguished point and ``1`` for the origin.
    """
    lam = d.relation() if r is None else tuple(r)
    polys = d.linear_polys() + [RatPoly.monomial(1)]
    plus, minus = RatPoly([1]), RatPoly([1])
    for p, l in zip(polys, lam):
        if l > 0:
            plus = poly_mul(plus, poly_pow(p, l, cap), cap)
        elif l < 0:
            minus = poly_mul(minus, poly_pow(p, -l, cap), cap)
    return plus - minus


def count_positive_solutions(d, cap=None):
    """Positive solutions of ``d``, counted as Gale roots inside the domain."""
    dom = positivity_domain(d)
    g = gale_polynomial(d, cap=cap)
    if g.is_zero():
        raise DegenerateSystem("Gale polynomial vanishes identically")
    if dom is None:
        return GaleCount(0, g, None, ())
    chain = SturmChain(g)
    n = sturm_count(chain, dom)
    endpoint = any(x is not None and chain.is_root(x) for x in (dom.lo, dom.hi))
    if endpoint:
        warnings.warn("Gale polynomial vanishes at an endpoint of the positivity domain", stacklevel=2)
    ivs = tuple(isolate_roots(chain, dom))
    return GaleCount(int(n), g, dom, ivs, n.squarefree, endpoint)


def _lift_one(d, chain, iv, inv_t, dps):
    tight = refine_interval(chain, iv, Fraction(1, 2))
    # relative width 10^-(dps-5) around the root
    mag = tight.lo if tight.lo > 0 else Fraction(1, 10**dps)
    tight = refine_interval(chain, tight, mag / 10 ** (dps - 5))
    y = tight.lo if tight.is_point else (tight.lo + tight.hi) / 2
    with mpmath.workdps(dps):
        ymp = _mpq(y)
        logs = []
        for a, b in d.linear_parts:
            val = _mpq(a) + _mpq(b) * ymp
            if val <= 0:
                raise ResidualTooLarge(f"linear part not positive at y = {mpmath.nstr(ymp, 15)}")
            logs.append(mpmath.log(val))
        z = tuple(mpmath.exp(mpmath.fsum(_mpq(c) * lg for c, lg in zip(row, logs))) for row in inv_t)
        res = diagonal_residuals(d, z, ymp)
    return PositiveSolution(y, tight, z, res, dps)


def _mpq(x):
    return mpmath.mpf(x.numerator) / x.denominator


def monomial(z, w):
    """``z^w`` for positive mpmath ``z`` and rational ``w``."""
    return mpmath.exp(mpmath.fsum(_mpq(e) * mpmath.log(zi) for e, zi in zip(w, z)))


def diagonal_residuals(d, z, y=None):
    """Relative residuals of the diagonal equations, then of ``z^{u_d} = y``."""
    zd = monomial(z, d.distinguished)
    out = []
    for u, (a, b) in zip(d.exponents, d.linear_parts):
        lhs = monomial(z, u)
        terms = [lhs, _mpq(a), _mpq(b) * zd]
        out.append(float(abs(terms[0] - terms[1] - terms[2]) / mpmath.fsum(abs(t) for t in terms)))
    if y is not None:
        out.append(float(abs(zd - y) / abs(y)))
    return tuple(out)


def system_residuals(s, z):
    """Relative residual of each equation of ``s`` at positive point ``z``.

    Each residual is ``|sum c_k z^{w_k}| / sum |c_k z^{w_k}|``.
    """
    with mpmath.workdps(max(mpmath.mp.dps, 50)):
        monos = [monomial(z, w) for w in s.support]
        out = []
        for row in s.coefficients:
            terms = [_mpq(c) * m for c, m in zip(row, monos)]
            scale = mpmath.fsum(abs(t) for t in terms)
            out.append(float(abs(mpmath.fsum(terms)) / scale) if scale else 0.0)
    return tuple(out)


def lift_solutions(d, roots, eps=DEFAULT_EPS, gale=None, max_dps=1600):
    """Positive solutions ``z`` for each isolating interval in ``roots``.

    Solves ``U log z = log P(y*)`` in multiprecision after refining ``y*``,
    doubling the working precision until every residual is below ``eps``.
    Results are sorted by ``y``.
    """
    roots = list(roots)
    if not roots:
        return []
    eps = float(eps)
    chain = SturmChain(gale_polynomial(d) if gale is None else gale)
    inv_t = linalg.inverse(d.exponents)
    out = []
    for iv in sorted(roots, key=lambda r: r.lo):
        dps = 40
        while True:
            sol = _lift_one(d, chain, iv, inv_t, dps)
            if max(sol.residuals) < eps:
                out.append(sol)
                break
            dps *= 2
            if dps > max_dps:
                raise ResidualTooLarge(
                    f"residual {max(sol.residuals):.3g} above {eps:.3g} at {dps // 2} digits"
                )
    return out


def solve_system(s, eps=DEFAULT_EPS, cap=None):
    """Diagonalize, count and lift in one call.  Returns ``(diag, count, sols)``."""
    d = diagonalize(s)
    gc = count_positive_solutions(d, cap=cap)
    sols = lift_solutions(d, gc.intervals, eps, gale=gc.gale)
    return d, gc, sols
