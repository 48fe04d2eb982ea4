"""Exact linear algebra over the rationals.

Matrices are plain sequences of rows; every entry is coerced to
:class:`fractions.Fraction`, and every function returns fresh tuples, so
inputs are never mutated.
"""
from fractions import Fraction
from math import gcd, lcm

from .errors import SingularMatrix


def as_matrix(m):
    """Coerce a nested sequence to a tuple of tuples of Fractions."""
    rows = tuple(tuple(Fraction(x) for x in row) for row in m)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def shape(m):
    return (len(m), len(m[0]) if m else 0)


def rref(m):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``pivots`` lists the pivot column of
    each nonzero row.
    """
    a = [list(r) for r in as_matrix(m)]
    nrows, ncols = shape(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in a), tuple(pivots)


def rank(m):
    return len(rref(m)[1])


def kernel(m):
    """Basis of the right kernel, one vector per free column."""
    rows, pivots = rref(m)
    ncols = shape(as_matrix(m))[1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def matvec(m, v):
    return tuple(sum((a * Fraction(b) for a, b in zip(row, v)), Fraction(0)) for row in as_matrix(m))


def matmul(a, b):
    a = as_matrix(a)
    bt = tuple(zip(*as_matrix(b)))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def transpose(m):
    return tuple(zip(*as_matrix(m)))


def solve(m, rhs):
    """Solve ``m x = rhs`` for square invertible ``m``; raises SingularMatrix."""
    m = as_matrix(m)
    n, k = shape(m)
    if n != k or len(rhs) != n:
        raise ValueError(f"expected square system, got {n}x{k} with rhs of length {len(rhs)}")
    aug = [list(row) + [Fraction(b)] for row, b in zip(m, rhs)]
    rows, pivots = rref(aug)
    if len(pivots) < n or pivots[-1] >= n:
        raise SingularMatrix(f"matrix has rank {sum(1 for p in pivots if p < n)} < {n}")
    return tuple(row[n] for row in rows[:n])


def inverse(m):
    m = as_matrix(m)
    n = len(m)
    eye = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows, pivots = rref([list(r) + e for r, e in zip(m, eye)])
    if pivots[:n] != tuple(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return tuple(row[n:] for row in rows)


def det(m):
    """Determinant by fraction-based elimination."""
    a = [list(r) for r in as_matrix(m)]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def primitive_integer_vector(v):
    """Scale a rational vector to coprime integers, keeping its direction."""
    v = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)
