"""Sturm sequences: exact real root counting, isolation and refinement.

No floating point enters any decision here.  Signs are computed by
evaluating integer-coefficient polynomials homogeneously at ``a/b``.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NotIsolating
from .polynomial import RatPoly, _bigint, sturm_prs


@dataclass(frozen=True)
class RatInterval:
    """Interval with rational or infinite (``None``) endpoints.

    ``lo == hi`` is allowed only for a closed one-point interval, which is
    how an exactly rational root is reported.
    """

    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        if self.lo is not None:
            object.__setattr__(self, "lo", Fraction(self.lo))
        else:
            object.__setattr__(self, "lo_closed", False)
        if self.hi is not None:
            object.__setattr__(self, "hi", Fraction(self.hi))
        else:
            object.__setattr__(self, "hi_closed", False)
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi or (
                self.lo == self.hi and not (self.lo_closed and self.hi_closed)
            ):
                raise ValueError(f"empty interval {self}")

    @classmethod
    def open(cls, lo=None, hi=None):
        return cls(lo, hi)

    @classmethod
    def point(cls, x):
        return cls(x, x, True, True)

    @classmethod
    def real_line(cls):
        return cls()

    @property
    def is_point(self):
        return self.lo is not None and self.lo == self.hi

    @property
    def width(self):
        if self.lo is None or self.hi is None:
            return None
        return self.hi - self.lo

    def __contains__(self, x):
        if self.lo is not None and (x < self.lo or (x == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and not self.hi_closed)):
            return False
        return True

    def __str__(self):
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return f"{left}{lo}, {hi}{right}"


def _sign(x):
    return (x > 0) - (x < 0)


def sign_at(ints, x):
    """Sign of the integer polynomial ``ints`` at rational ``x``."""
    if not ints:
        return 0
    x = Fraction(x)
    a, b = _bigint(x.numerator), _bigint(x.denominator)
    d = len(ints) - 1
    acc = 0
    bpow = 1
    # sum c_i a^i b^(d-i), accumulated by Horner in a with b powers
    for i in range(d, -1, -1):
        acc = acc * a + ints[i] * bpow
        bpow *= b
    return _sign(acc)


def sign_at_infinity(ints, positive=True):
    if not ints:
        return 0
    s = _sign(ints[-1])
    if not positive and (len(ints) - 1) % 2:
        s = -s
    return s


class RootCount(int):
    """Number of distinct roots, carrying a ``squarefree`` flag.

    ``squarefree`` is False when some root in the counted interval is
    multiple in the source polynomial.
    """

    def __new__(cls, count, squarefree=True):
        obj = super().__new__(cls, count)
        obj.squarefree = squarefree
        return obj

    def __repr__(self):
        return f"RootCount({int(self)}, squarefree={self.squarefree})"


def _prs(p0):
    """``p0, p0', -rem, ...`` up to positive factors, stopping before zero."""
    if p0.degree <= 0:
        return [p0]
    seq = sturm_prs(p0.integer_coeffs(), p0.derivative().integer_coeffs())
    return [RatPoly(c) for c in seq]


class SturmChain:
    """Sturm chain of the squarefree part of a nonzero polynomial."""

    def __init__(self, p):
        if p.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        self.source = p
        chain = _prs(p.primitive())
        # the last element is gcd(p, p'); its roots are the multiple roots
        self._multiple = None
        if len(chain) > 1 and chain[-1].degree > 0:
            self._multiple = chain[-1]
            chain = _prs((p // chain[-1]).primitive())
        self.polys = tuple(chain)
        self._ints = tuple(tuple(_bigint(int(c)) for c in q.coeffs) for q in chain)

    @property
    def squarefree_source(self):
        return self._multiple is None

    def variations(self, x):
        """Sign variations at ``x``; ``None`` means -inf, ``"+inf"`` +inf."""
        if x is None:
            signs = [sign_at_infinity(c, positive=False) for c in self._ints]
        elif x == "+inf":
            signs = [sign_at_infinity(c, positive=True) for c in self._ints]
        else:
            signs = [sign_at(c, x) for c in self._ints]
        signs = [s for s in signs if s]
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    def is_root(self, x):
        return sign_at(self._ints[0], x) == 0

    def count(self, iv):
        """Distinct roots in ``iv``, honoring open and closed endpoints."""
        if iv.is_point:
            return int(self.is_root(iv.lo))
        # V(a) - V(b) counts roots in (a, b]
        va = self.variations(iv.lo)
        vb = self.variations("+inf" if iv.hi is None else iv.hi)
        n = va - vb
        if iv.hi is not None and not iv.hi_closed and self.is_root(iv.hi):
            n -= 1
        if iv.lo is not None and iv.lo_closed and self.is_root(iv.lo):
            n += 1
        return n


def sturm_chain(p):
    return SturmChain(p)


def sturm_count(p, iv=None):
    """Count distinct real roots of ``p`` in ``iv`` (default: all of R).

    The result is a :class:`RootCount`; its ``squarefree`` attribute is False
    when ``p`` has a multiple root inside ``iv``.
    """
    iv = RatInterval.real_line() if iv is None else iv
    chain = p if isinstance(p, SturmChain) else SturmChain(p)
    n = chain.count(iv)
    squarefree = True
    if not chain.squarefree_source:
        squarefree = SturmChain(chain._multiple).count(iv) == 0
    return RootCount(n, squarefree)


def root_bound(p):
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lc = abs(p.leading)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0)) + 1


def _finite(chain, iv):
    b = root_bound(chain.polys[0])
    lo = iv.lo if iv.lo is not None else -b if iv.hi is None else min(-b, iv.hi - 1)
    hi = iv.hi if iv.hi is not None else max(b, lo + 1)
    return lo, hi


def isolate_roots(p, iv=None):
    """Disjoint intervals inside ``iv``, one per distinct root.

    Each is open with non-root endpoints, except that a rational root met
    exactly by bisection (or lying on a closed endpoint) is returned as a
    one-point closed interval.  Sorted left to right.
    """
    iv = RatInterval.real_line() if iv is None else iv
    chain = p if isinstance(p, SturmChain) else SturmChain(p)
    if chain.polys[0].degree <= 0:
        return []
    if iv.is_point:
        return [iv] if chain.is_root(iv.lo) else []
    out = []
    lo, hi = _finite(chain, iv)
    if iv.lo_closed and chain.is_root(iv.lo):
        out.append(RatInterval.point(iv.lo))
    stack = [(lo, hi)]
    found = []
    while stack:
        a, b = stack.pop()
        n = chain.count(RatInterval(a, b))
        if n == 0:
            continue
        if n == 1:
            found.append(RatInterval(a, b))
            continue
        m = (a + b) / 2
        if chain.is_root(m):
            found.append(RatInterval.point(m))
        stack.append((m, b))
        stack.append((a, m))
    out.extend(found)
    if iv.hi_closed and chain.is_root(iv.hi):
        out.append(RatInterval.point(iv.hi))
    out.sort(key=lambda r: r.lo)
    return out


def refine_interval(p, iv, eps):
    """Shrink an isolating interval to width at most ``eps``.

    Returns a one-point interval when the root is hit exactly.
    """
    chain = p if isinstance(p, SturmChain) else SturmChain(p)
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if chain.count(iv) != 1:
        raise NotIsolating(f"{iv} contains {chain.count(iv)} roots, expected 1")
    if iv.is_point:
        return iv
    if iv.lo_closed and chain.is_root(iv.lo):
        return RatInterval.point(iv.lo)
    if iv.hi_closed and chain.is_root(iv.hi):
        return RatInterval.point(iv.hi)
    a, b = _finite(chain, iv)
    # move endpoints off roots lying outside the interval
    while chain.is_root(a) or chain.is_root(b):
        m = (a + b) / 2
        if chain.is_root(m):
            return RatInterval.point(m)
        if chain.count(RatInterval(a, m)) == 1:
            b = m
        else:
            a = m
    f = chain._ints[0]
    sa = sign_at(f, a)
    while b - a > eps:
        m = (a + b) / 2
        sm = sign_at(f, m)
        if sm == 0:
            return RatInterval.point(m)
        if sm == sa:
            a = m
        else:
            b = m
    return RatInterval(a, b)


def refine_root(p, iv, eps):
    """Rational approximation within ``eps`` of the unique root in ``iv``."""
    r = refine_interval(p, iv, eps)
    return r.lo if r.is_point else (r.lo + r.hi) / 2
