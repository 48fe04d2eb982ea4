"""Circuits, their affine relation, and the maximal-positivity test.

A circuit of ``n + 2`` points in dimension ``n`` carries a unique (up to
scale) affine relation ``sum(l_i * w_i) = 0``, ``sum(l_i) = 0``, with every
``l_i`` nonzero.  The circuit supports a system with ``n + 1``
non-degenerate positive solutions exactly when the relation can be listed
in an order that alternates in sign, starts positive, and whose running
sums strictly alternate in sign until the final one (which is 0).
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm
from typing import Optional

from . import linalg
from .errors import NotACircuit, PreconditionViolated

FAILED_PARTIAL_SUMS = "partial sum vanishes/changes late"


@dataclass(frozen=True)
class Circuit:
    dim: int
    points: tuple

    @property
    def size(self):
        return len(self.points)

    def is_integral(self):
        return all(x.denominator == 1 for p in self.points for x in p)


@dataclass(frozen=True)
class AffineRelation:
    """Coprime integer coefficients, first entry positive."""

    coeffs: tuple

    @property
    def n(self):
        return len(self.coeffs) - 2

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]


@dataclass(frozen=True)
class OrderingWitness:
    """An ordering certifying maximal positivity.

    ``order`` holds 1-based point labels; ``signed_seq`` is the relation
    read in that order (after the global sign flip ``sign``), and
    ``partial_sums`` its running sums.
    """

    order: tuple
    signed_seq: tuple
    partial_sums: tuple
    sign: int = 1

    @property
    def indices(self):
        return tuple(i - 1 for i in self.order)


@dataclass(frozen=True)
class CharacterizationVerdict:
    supports_max: bool
    relation: AffineRelation
    sign_balanced: bool
    witness: Optional[OrderingWitness] = None
    failure_reason: Optional[str] = None


def augmented_matrix(points):
    """Coordinates stacked column-wise over a row of ones."""
    dim = len(points[0])
    rows = [[p[k] for p in points] for k in range(dim)]
    rows.append([1] * len(points))
    return linalg.as_matrix(rows)


def validate_circuit(points):
    """Check that ``points`` (n+2 vectors of length n) form a circuit."""
    pts = tuple(tuple(Fraction(x) for x in p) for p in points)
    if not pts:
        raise NotACircuit("no points given")
    n = len(pts[0])
    if n < 1 or any(len(p) != n for p in pts):
        raise NotACircuit("points must all have the same positive dimension")
    if len(pts) != n + 2:
        raise NotACircuit(f"a circuit in dimension {n} has {n + 2} points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise NotACircuit("duplicate points")
    ker = linalg.kernel(augmented_matrix(pts))
    if len(ker) != 1:
        raise NotACircuit(f"kernel dimension {len(ker)} != 1")
    zeros = [i + 1 for i, x in enumerate(ker[0]) if x == 0]
    if zeros:
        raise NotACircuit(f"zero coefficient at point(s) {zeros}; points are not minimally dependent")
    return Circuit(n, pts)


def normalize_relation(coeffs):
    """Coprime integers with the first nonzero entry positive."""
    v = linalg.primitive_integer_vector(coeffs)
    first = next((x for x in v if x), 0)
    if first < 0:
        v = tuple(-x for x in v)
    return v


def affine_relation(c):
    ker = linalg.kernel(augmented_matrix(c.points))
    return AffineRelation(normalize_relation(ker[0]))


def _coeffs(r):
    return tuple(r.coeffs) if isinstance(r, AffineRelation) else tuple(r)


def sign_balance_check(r):
    """Positive and negative coefficient counts differ by at most n mod 2."""
    c = _coeffs(r)
    n = len(c) - 2
    pos = sum(1 for x in c if x > 0)
    neg = sum(1 for x in c if x < 0)
    return abs(pos - neg) <= n % 2


def partial_sums(seq):
    out = []
    acc = 0
    for x in seq:
        acc += x
        out.append(acc)
    return tuple(out)


def check_partial_sums(seq):
    """True iff the running sums of ``seq`` strictly alternate in sign.

    ``seq`` must alternate in sign starting positive and sum to zero.
    Running sums ``T_1 .. T_{n+1}`` must be positive at odd and negative
    at even positions.
    """
    seq = tuple(seq)
    if len(seq) < 3:
        raise PreconditionViolated("need at least three coefficients")
    for i, x in enumerate(seq):
        if x == 0 or (x > 0) != (i % 2 == 0):
            raise PreconditionViolated(f"signs do not alternate starting positive at position {i + 1}")
    if sum(seq) != 0:
        raise PreconditionViolated(f"coefficients sum to {sum(seq)}, not 0")
    t = partial_sums(seq)
    return all((s > 0) if i % 2 == 0 else (s < 0) for i, s in enumerate(t[:-1]))


def _search(vals):
    """Lexicographically smallest passing order of indices, or None."""
    m = len(vals)
    pos = [i for i, v in enumerate(vals) if v > 0]
    neg = [i for i, v in enumerate(vals) if v < 0]
    if len(pos) != (m + 1) // 2 or len(neg) != m // 2:
        return None
    used = [False] * m
    order = []

    def dfs(slot, acc):
        if slot == m:
            return True
        pool = pos if slot % 2 == 0 else neg
        tried = set()
        for i in pool:
            if used[i] or vals[i] in tried:
                continue
            # equal values give mirror subtrees; the first label is smaller
            tried.add(vals[i])
            t = acc + vals[i]
            if slot < m - 1 and not ((t > 0) if slot % 2 == 0 else (t < 0)):
                continue
            used[i] = True
            order.append(i)
            if dfs(slot + 1, t):
                return True
            order.pop()
            used[i] = False
        return False

    return tuple(order) if dfs(0, 0) else None


def find_witness_ordering(r):
    """Search orderings of the relation (and of its negative).

    Returns the witness whose label order is lexicographically smallest,
    or None when no ordering satisfies the running-sum condition.
    """
    c = normalize_relation(_coeffs(r))
    best = None
    for sign in (1, -1):
        vals = [sign * x for x in c]
        idx = _search(vals)
        if idx is None:
            continue
        order = tuple(i + 1 for i in idx)
        if best is None or order < best.order:
            seq = tuple(vals[i] for i in idx)
            best = OrderingWitness(order, seq, partial_sums(seq), sign)
    return best


def characterize(c):
    """Decide whether a circuit supports n+1 non-degenerate positive solutions.

    Accepts a :class:`Circuit` or a raw point list (validated here).
    """
    if not isinstance(c, Circuit):
        c = validate_circuit(c)
    r = affine_relation(c)
    balanced = sign_balance_check(r)
    if not balanced:
        pos = sum(1 for x in r if x > 0)
        return CharacterizationVerdict(
            False, r, False,
            failure_reason=f"sign balance fails: {pos} positive vs {len(r) - pos} negative coefficients",
        )
    w = find_witness_ordering(r)
    if w is None:
        return CharacterizationVerdict(False, r, True, failure_reason=FAILED_PARTIAL_SUMS)
    return CharacterizationVerdict(True, r, True, witness=w)


def canonical_max_positive_relation(n):
    """Alternating relation with magnitudes 1, 2, ..., 2, 1 (length n+2)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    mags = [1] + [2] * n + [1]
    return tuple(m if i % 2 == 0 else -m for i, m in enumerate(mags))


def realize_circuit(r, n=None):
    """Standard point configuration whose affine relation is ``r``.

    ``w_i = m e_i`` for i <= n, ``w_{n+2} = 0`` and
    ``w_{n+1} = -(m / r_{n+1}) sum(r_i e_i)``, with ``m`` the least positive
    integer making all coordinates integral.
    """
    r = tuple(Fraction(x) for x in _coeffs(r))
    n = len(r) - 2 if n is None else n
    if len(r) != n + 2:
        raise PreconditionViolated(f"relation of length {len(r)} does not fit dimension {n}")
    if any(x == 0 for x in r) or sum(r) != 0:
        raise PreconditionViolated("relation must have nonzero entries summing to 0")
    ratios = [-r[i] / r[n] for i in range(n)]
    m = lcm(*(q.denominator for q in ratios))
    points = [tuple(Fraction(m if j == i else 0) for j in range(n)) for i in range(n)]
    points.append(tuple(m * q for q in ratios))
    points.append(tuple(Fraction(0) for _ in range(n)))
    return validate_circuit(points)


def _simplex_volume(points):
    base = points[0]
    return abs(linalg.det([[x - y for x, y in zip(p, base)] for p in points[1:]]))


def kouchnirenko_bound(c):
    """``n! * vol(conv(W))``, summed over one of the circuit's triangulations.

    Removing each point with positive coefficient gives a simplex; these
    simplices triangulate the hull.  The negative side is used as a check.
    """
    if not c.is_integral():
        raise ValueError("Kouchnirenko bound needs integral coordinates")
    r = affine_relation(c)
    sides = []
    for positive in (True, False):
        total = Fraction(0)
        for i, x in enumerate(r):
            if (x > 0) == positive:
                total += _simplex_volume(c.points[:i] + c.points[i + 1:])
        sides.append(total)
    if sides[0] != sides[1]:
        raise AssertionError(f"triangulation volumes disagree: {sides}")
    vol = sides[0]
    # |det| already equals n! times the simplex volume
    assert vol.denominator == 1
    return int(vol)


def normalized_volume(c):
    """Euclidean hull volume, for reference (``kouchnirenko_bound / n!``)."""
    return Fraction(kouchnirenko_bound(c), factorial(c.dim))
