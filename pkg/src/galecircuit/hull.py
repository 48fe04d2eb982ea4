"""Exact planar lower hulls (monotone chain)."""
from fractions import Fraction


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points):
    """Vertices of the lower hull, left to right, collinear points dropped.

    Only the lowest point above each abscissa can be a vertex.
    """
    lowest = {}
    for x, y in points:
        x, y = Fraction(x), Fraction(y)
        if x not in lowest or y < lowest[x]:
            lowest[x] = y
    hull = []
    for p in sorted(lowest.items()):
        while len(hull) >= 2 and cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


def on_segment(p, a, b):
    return cross(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
