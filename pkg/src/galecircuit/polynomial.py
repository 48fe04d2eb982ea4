"""Dense univariate polynomials with rational coefficients."""
import os
from fractions import Fraction
from math import gcd, lcm

from .errors import DegreeCapExceeded

try:  # GMP integers make the remainder sequences much faster
    from gmpy2 import gcd as _biggcd
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover
    _bigint, _biggcd = int, gcd

DEFAULT_DEGREE_CAP = 20000


def default_degree_cap():
    """Degree cap from ``GALECIRCUIT_DEGREE_CAP``, else 20000."""
    env = os.environ.get("GALECIRCUIT_DEGREE_CAP")
    return int(env) if env else DEFAULT_DEGREE_CAP


class RatPoly:
    """Immutable polynomial; ``coeffs[i]`` multiplies ``y**i``.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @classmethod
    def linear(cls, a, b):
        """The polynomial ``a + b*y``."""
        return cls([a, b])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RatPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            if mono and abs(c) == 1:
                coeff = "-" if c < 0 else ""
            else:
                coeff = str(c) + ("*" if mono else "")
            terms.append(coeff + mono)
        return " + ".join(terms).replace("+ -", "- ")

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RatPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e):
        return poly_pow(self, e)

    def __call__(self, x):
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def scale(self, s):
        return RatPoly(c * s for c in self.coeffs)

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(1 / self.leading)

    def primitive(self):
        """Positive rational multiple with coprime integer coefficients."""
        if not self.coeffs:
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for x in ints:
            g = gcd(g, x)
        return RatPoly(Fraction(x // g) for x in ints)

    def integer_coeffs(self):
        """Integer coefficients of :meth:`primitive`, as plain ints."""
        return tuple(int(c) for c in self.primitive().coeffs)

    def pseudo_remainder(self, other):
        """Positive multiple of ``self % other``, primitive integer coefficients."""
        return RatPoly(int_prem(self.integer_coeffs(), other.integer_coeffs()))

    def divmod(self, other):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RatPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lc = other.leading
        for k in range(dq, -1, -1):
            q = rem[k + len(other.coeffs) - 1] / lc
            quot[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return RatPoly(quot), RatPoly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other):
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self.integer_coeffs(), other.integer_coeffs()
        while b:
            a, b = b, int_prem(a, b)
        return RatPoly(a).monic()

    def squarefree_part(self):
        """``p / gcd(p, p')``, primitive with positive scaling."""
        if self.degree <= 0:
            return self.primitive()
        g = self.gcd(self.derivative())
        return (self // g).primitive()

    def is_squarefree(self):
        return self.degree <= 0 or self.gcd(self.derivative()).degree == 0


def _coerce(x):
    if isinstance(x, RatPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return RatPoly([x])
    return NotImplemented


def poly_mul(p, q, cap=None):
    """Exact product; raises DegreeCapExceeded if the result is too large."""
    if not p.coeffs or not q.coeffs:
        return RatPoly()
    cap = default_degree_cap() if cap is None else cap
    d = p.degree + q.degree
    if d > cap:
        raise DegreeCapExceeded(d, cap)
    out = [Fraction(0)] * (d + 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return RatPoly(out)


def poly_pow(p, e, cap=None):
    """``p**e`` by repeated squaring, with the degree cap checked up front."""
    if e < 0:
        raise ValueError("negative exponent")
    cap = default_degree_cap() if cap is None else cap
    if p.coeffs and p.degree * e > cap:
        raise DegreeCapExceeded(p.degree * e, cap)
    result = RatPoly([1])
    base = p
    while e:
        if e & 1:
            result = poly_mul(result, base, cap)
        e >>= 1
        if e:
            base = poly_mul(base, base, max(cap, 2 * base.degree))
    return result


def _content(c):
    g = 0
    for x in c:
        g = _biggcd(g, x)
    return g


def int_prem(a, b):
    """Primitive pseudo-remainder of integer coefficient tuples.

    The result is a positive multiple of the remainder of ``a`` by ``b``
    (sign preserved), with content removed.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        q = r[-1]
        # r <- |lc| r - sign(lc) q y^k b keeps the multiplier positive
        s = 1 if lc > 0 else -1
        r = [abs(lc) * x for x in r]
        for j, c in enumerate(b):
            r[k + j] -= s * q * c
        while r and r[-1] == 0:
            r.pop()
    g = _content(r)
    if g > 1:
        r = [x // g for x in r]
    return tuple(r)


def _sgn(x):
    return (x > 0) - (x < 0)


def _raw_prem(a, b):
    """``lc(b)^(deg a - deg b + 1) * a mod b`` over the integers."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        q = r[-1]
        r = [lc * x for x in r]
        for j, c in enumerate(b):
            r[k + j] -= q * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        m = lc**e
        r = [m * x for x in r]
    return r


def sturm_prs(a, b):
    """Subresultant remainder sequence of integer polynomials, Sturm-signed.

    Returns ``[a, b, s_2, ...]`` where each ``s_i`` is a positive multiple
    of the i-th term of the Euclidean Sturm sequence ``f_{i+1} = -(f_{i-1}
    mod f_i)``.  Coefficient growth is linear and no gcds are taken.
    """
    out = [tuple(a), tuple(b)]
    A, B = [_bigint(x) for x in a], [_bigint(x) for x in b]
    if not B:
        return out[:1]
    g = h = 1
    sa, sb = 1, 1  # signs of the scale factors of A and B
    while len(B) > 1:
        delta = len(A) - len(B)
        R = _raw_prem(A, B)
        if not R:
            break
        div = g * h**delta
        R = [x // div for x in R]
        sr = -(_sgn(B[-1]) ** (delta + 1)) * sa * _sgn(div)
        A, B = B, R
        sa, sb = sb, sr
        g = A[-1]
        h = g**delta if delta == 1 else g**delta // h ** (delta - 1)
        c = _content(R)
        out.append(tuple(int(x // c) * sr for x in R))
    return out
