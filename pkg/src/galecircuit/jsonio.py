"""JSON forms of circuits, systems, intervals and certificates.

Rationals travel as strings ``"p/q"`` (``"p"`` when integral); infinite
interval endpoints as ``"inf"`` / ``"-inf"``.
"""
from fractions import Fraction

from .circuit import validate_circuit
from .gale import SupportedSystem
from .sturm import RatInterval


def rat_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(v):
    if isinstance(v, bool):
        raise ValueError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(repr(v))
    if isinstance(v, str):
        return Fraction(v.strip())
    raise ValueError(f"not a rational: {v!r}")


def exponent_json(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else rat_str(x)


def interval_json(iv):
    return {
        "lo": "-inf" if iv.lo is None else rat_str(iv.lo),
        "hi": "inf" if iv.hi is None else rat_str(iv.hi),
        "lo_closed": iv.lo_closed,
        "hi_closed": iv.hi_closed,
    }


def interval_from_json(d):
    lo = None if d["lo"] == "-inf" else parse_rat(d["lo"])
    hi = None if d["hi"] == "inf" else parse_rat(d["hi"])
    return RatInterval(lo, hi, d.get("lo_closed", False), d.get("hi_closed", False))


def circuit_json(c):
    return {"dim": c.dim, "points": [[rat_str(x) for x in p] for p in c.points]}


def circuit_from_json(d):
    if not isinstance(d, dict) or "points" not in d:
        raise ValueError("circuit JSON needs a 'points' list")
    points = [[parse_rat(x) for x in p] for p in d["points"]]
    c = validate_circuit(points)
    if "dim" in d and d["dim"] != c.dim:
        raise ValueError(f"dim {d['dim']} does not match point length {c.dim}")
    return c


def system_json(s):
    return {
        "dim": s.dim,
        "support": [[exponent_json(x) for x in w] for w in s.support],
        "coefficients": [[rat_str(x) for x in row] for row in s.coefficients],
    }


def system_from_json(d):
    if not isinstance(d, dict) or not {"dim", "support", "coefficients"} <= d.keys():
        raise ValueError("system JSON needs 'dim', 'support' and 'coefficients'")
    support = [[parse_rat(x) for x in w] for w in d["support"]]
    coeffs = [[parse_rat(x) for x in row] for row in d["coefficients"]]
    return SupportedSystem(int(d["dim"]), support, coeffs)


def poly_json(p):
    return [rat_str(c) for c in p.coeffs]


def certificate_json(cert):
    return {
        "lambda": [rat_str(x) for x in cert.lam],
        "p": [rat_str(x) for x in cert.p],
        "h": [rat_str(x) for x in cert.h],
        "slopes": [rat_str(x) for x in cert.slopes],
        "alpha": [rat_str(x) for x in cert.alpha],
        "tau": f"1/2^{cert.k}",
        "M": cert.M,
        "alpha_shift": rat_str(cert.alpha[0]),
        "gale_degree": cert.gale.degree,
        "gale_coefficients": poly_json(cert.gale),
        "root_count": cert.root_count,
        "intervals": [interval_json(iv) for iv in cert.intervals],
    }
