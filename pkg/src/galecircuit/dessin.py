"""Combinatorial profile of the real dessin d'enfant of a maximal system.

For an alternating integer relation ``l_1, ..., l_{n+2}`` the special
points ``x_1 < ... < x_{n+2}`` have valency ``V_i = 2|l_i|``.  The number
``N_{i,i+1}`` of non-real edges joining consecutive special points follows
from ``V_1 = N_{1,2} + 2``, ``V_i = N_{i-1,i} + N_{i,i+1} + 4`` and
``V_{n+2} = N_{n+1,n+2} + 2``.  All ``N`` are non-negative exactly when
the running sums of the relation alternate strictly.
"""
import json
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .circuit import normalize_relation, partial_sums
from .errors import InvalidProfile, PreconditionViolated


@dataclass(frozen=True)
class GapLayout:
    """Branches ``L_0`` (real) .. ``L_k`` between ``x_i`` and ``x_{i+1}``."""

    gap: int
    pairs: int
    r_marks: tuple  # r_marks[j] is 1 when L_j (and its conjugate) carries a letter r
    figure_convention: bool = False

    @property
    def r_count(self):
        # L_0 is real; every other branch comes with its conjugate
        return sum(m if j == 0 else 2 * m for j, m in enumerate(self.r_marks))


@dataclass(frozen=True)
class Layout:
    gaps: tuple
    delta_plus_r: int
    total_r: int
    degree: int


@dataclass(frozen=True)
class DessinProfile:
    lam: tuple
    valencies: tuple
    edge_counts: tuple
    degree: int
    scaled: bool = False

    @property
    def n(self):
        return len(self.lam) - 2

    def to_dict(self):
        lay = letter_layout(self)
        return {
            "lambda": list(self.lam),
            "valencies": list(self.valencies),
            "edge_counts": list(self.edge_counts),
            "degree": self.degree,
            "scaled": self.scaled,
            "layout": {
                "gaps": [
                    {
                        "gap": [g.gap, g.gap + 1],
                        "pairs": g.pairs,
                        "r_marks": list(g.r_marks),
                        "figure_convention": g.figure_convention,
                    }
                    for g in lay.gaps
                ],
                "delta_plus_r": lay.delta_plus_r,
                "total_r": lay.total_r,
            },
        }


def edge_counts(seq):
    """Profile of an alternating relation; raises InvalidProfile on ``N < 0``.

    Rational input is scaled to coprime integers first (``scaled=True``),
    which changes the edge counts.
    """
    raw = tuple(Fraction(x) for x in seq)
    scaled = any(x.denominator != 1 for x in raw)
    lam = tuple(int(x) for x in raw)
    if scaled:
        lam = normalize_relation(raw)
    for i, x in enumerate(lam):
        if x == 0 or (x > 0) != (i % 2 == 0):
            raise PreconditionViolated(f"signs do not alternate starting positive at position {i + 1}")
    if sum(lam) != 0:
        raise PreconditionViolated(f"coefficients sum to {sum(lam)}, not 0")
    v = tuple(2 * abs(x) for x in lam)
    m = len(lam)
    counts = [v[0] - 2]
    for i in range(1, m - 1):
        counts.append(v[i] - counts[-1] - 4)
    t = partial_sums(lam)
    for i, c in enumerate(counts):
        # closed form 2 (-1)^(i+1) T_i - 2 with 1-based i
        assert c == 2 * (t[i] if i % 2 == 0 else -t[i]) - 2
        if c < 0:
            raise InvalidProfile(i + 1, c)
    if counts[-1] != v[-1] - 2:
        raise InvalidProfile(m - 1, counts[-1])
    degree = sum(x for x in lam if x > 0)
    return DessinProfile(lam, v, tuple(counts), degree, scaled)


def letter_layout(profile):
    """Place letters r on branches by the parity rule.

    With ``k = N/2`` conjugate pairs, branch ``L_j`` carries one r iff
    ``j`` and ``k - 1`` have the same parity.  The positive interval
    carries ``n + 1`` letters r.  Gaps touching ``x_1`` or ``x_{n+2}`` are
    flagged since they border the positive interval.
    """
    n = profile.n
    gaps = []
    for i, c in enumerate(profile.edge_counts, start=1):
        k = c // 2
        marks = tuple(int(j % 2 == (k - 1) % 2) for j in range(k + 1))
        gaps.append(GapLayout(i, k, marks, figure_convention=i in (1, n + 1)))
    total = sum(g.r_count for g in gaps) + n + 1
    if total != profile.degree:
        warnings.warn(f"r-letter total {total} differs from degree {profile.degree}", stacklevel=2)
    return Layout(tuple(gaps), n + 1, total, profile.degree)


def emit_graph(profile, format="dot"):
    """Deterministic DOT or JSON rendering of the dessin's combinatorics.

    The real circle reads ``x_1, ..., x_{n+2}`` and then closes through the
    positive interval, where letters r alternate with the non-special
    critical points ``c_{n+1}, ..., c_2``.
    """
    if format == "json":
        return json.dumps(profile.to_dict(), indent=2, sort_keys=True)
    if format != "dot":
        raise ValueError(f"unknown format {format!r}")
    lay = letter_layout(profile)
    n = profile.n
    m = n + 2
    lines = ["graph dessin {", "  // letters: p root, q pole, r preimage of 1"]
    for i in range(1, m + 1):
        letter = "p" if i % 2 else "q"
        lines.append(f'  x{i} [label="x{i} ({letter})", valency={profile.valencies[i - 1]}];')
    for i in range(2, n + 2):
        lines.append(f'  c{i} [label="c{i}", shape=point];')
    for g in lay.gaps:
        a, b = f"x{g.gap}", f"x{g.gap + 1}"
        conv = ", convention=figure" if g.figure_convention else ""
        lines.append(f'  {a} -- {b} [kind=real, branch=0, r={g.r_marks[0]}{conv}];')
        for j in range(1, g.pairs + 1):
            lines.append(f'  {a} -- {b} [kind=complex_pair, branch={j}, r={g.r_marks[j]}{conv}];')
    # positive interval: x_{n+2} -> r -> c_{n+1} -> r -> ... -> c_2 -> r -> x_1
    chain = [f"x{m}"]
    for j in range(n + 1):
        chain.append(f"r{j + 1}")
        if j < n:
            chain.append(f"c{n + 1 - j}")
    chain.append("x1")
    for j in range(n + 1):
        lines.append(f'  r{j + 1} [label="r", shape=box];')
    for a, b in zip(chain, chain[1:]):
        lines.append(f"  {a} -- {b} [kind=real, interval=positive];")
    for i in range(2, n + 2):
        lines.append(f"  c{i} -- x{i} [kind=complex_pair, neighbor=true];")
    lines.append("}")
    return "\n".join(lines) + "\n"
