"""Exact 3D predicates over integers and rationals.

Everything here is sign arithmetic on polynomials in the input coordinates,
so ``int`` and ``fractions.Fraction`` inputs give exact answers.  The
highest degree used is 3 (orientation of four points).
"""
from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from typing import Sequence, Union

Number = Union[int, Fraction]
Coordinate3 = tuple  # (x1, x2, x3), entries int or Fraction
Triangle = tuple  # three Coordinate3 corners, oriented


class DegenerateTriangle(ValueError):
    pass


class IntersectionClass(enum.IntEnum):
    DISJOINT = 0
    SHARED_VERTEX = 1
    SHARED_EDGE = 2
    NONTRIVIAL = 3


def as_coordinate(values: Sequence) -> Coordinate3:
    """Parse ints, Fractions or ``"p/q"`` strings into an exact triple."""
    out = []
    for v in values:
        if isinstance(v, float):
            raise TypeError("floats are not exact; pass int, Fraction or 'p/q'")
        f = Fraction(v)
        out.append(f.numerator if f.denominator == 1 else f)
    if len(out) != 3:
        raise ValueError(f"expected three coordinates, got {len(out)}")
    return tuple(out)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def det3(r1, r2, r3) -> Number:
    return (
        r1[0] * (r2[1] * r3[2] - r2[2] * r3[1])
        - r1[1] * (r2[0] * r3[2] - r2[2] * r3[0])
        + r1[2] * (r2[0] * r3[1] - r2[1] * r3[0])
    )


def orient3d(a, b, c, d) -> int:
    """Sign of det(b - a, c - a, d - a)."""
    return _sign(det3(
        (b[0] - a[0], b[1] - a[1], b[2] - a[2]),
        (c[0] - a[0], c[1] - a[1], c[2] - a[2]),
        (d[0] - a[0], d[1] - a[1], d[2] - a[2]),
    ))


def _orient2d(a, b, c, i: int, j: int) -> int:
    return _sign((b[i] - a[i]) * (c[j] - a[j]) - (b[j] - a[j]) * (c[i] - a[i]))


def normal(t: Triangle) -> tuple:
    a, b, c = t
    u = (b[0] - a[0], b[1] - a[1], b[2] - a[2])
    v = (c[0] - a[0], c[1] - a[1], c[2] - a[2])
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def is_degenerate(t: Triangle) -> bool:
    return normal(t) == (0, 0, 0)


def _projection(t: Triangle) -> tuple[int, int]:
    # drop the axis of the largest normal component
    n = normal(t)
    k = max(range(3), key=lambda i: abs(n[i]))
    return ((1, 2), (0, 2), (0, 1))[k]


def _check(t: Triangle):
    if is_degenerate(t):
        raise DegenerateTriangle(f"degenerate triangle {t}")


def axis_pierces_triangle(p: Coordinate3, t: Triangle) -> bool:
    """Whether the line through the origin along ``p`` meets the closed triangle.

    True iff no two of ``|p v0 v1|, |p v1 v2|, |p v2 v0|`` have strictly
    opposite signs.
    """
    if tuple(p) == (0, 0, 0):
        raise ValueError("axis direction must be non-zero")
    _check(t)
    v0, v1, v2 = t
    signs = {_sign(det3(p, v0, v1)), _sign(det3(p, v1, v2)), _sign(det3(p, v2, v0))}
    return not (1 in signs and -1 in signs)


def _on_segment_2d(p, q, r, i, j) -> bool:
    # r is collinear with pq
    return (min(p[i], q[i]) <= r[i] <= max(p[i], q[i])
            and min(p[j], q[j]) <= r[j] <= max(p[j], q[j]))


def _segments_meet_2d(p1, p2, q1, q2, i, j) -> bool:
    d1 = _orient2d(q1, q2, p1, i, j)
    d2 = _orient2d(q1, q2, p2, i, j)
    d3 = _orient2d(p1, p2, q1, i, j)
    d4 = _orient2d(p1, p2, q2, i, j)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return ((d1 == 0 and _on_segment_2d(q1, q2, p1, i, j))
            or (d2 == 0 and _on_segment_2d(q1, q2, p2, i, j))
            or (d3 == 0 and _on_segment_2d(p1, p2, q1, i, j))
            or (d4 == 0 and _on_segment_2d(p1, p2, q2, i, j)))


def _point_in_triangle_2d(p, t, i, j) -> bool:
    a, b, c = t
    o = _orient2d(a, b, c, i, j)
    return (_orient2d(a, b, p, i, j) * o >= 0
            and _orient2d(b, c, p, i, j) * o >= 0
            and _orient2d(c, a, p, i, j) * o >= 0)


def segment_meets_triangle(s, e, t: Triangle) -> bool:
    """Whether the closed segment ``se`` meets the closed triangle ``t``."""
    a, b, c = t
    os_, oe = orient3d(a, b, c, s), orient3d(a, b, c, e)
    if os_ * oe > 0:
        return False
    if os_ == 0 and oe == 0:
        i, j = _projection(t)
        return (_point_in_triangle_2d(s, t, i, j) or _point_in_triangle_2d(e, t, i, j)
                or _segments_meet_2d(s, e, a, b, i, j)
                or _segments_meet_2d(s, e, b, c, i, j)
                or _segments_meet_2d(s, e, c, a, i, j))
    # the segment meets the plane in a single point; test the line through it
    signs = {orient3d(s, e, a, b), orient3d(s, e, b, c), orient3d(s, e, c, a)}
    return not (1 in signs and -1 in signs)


def _enters(t: Triangle, k: int, r) -> bool:
    """Whether the segment from corner ``t[k]`` to ``r`` contains points of
    ``t`` other than that corner."""
    if orient3d(t[0], t[1], t[2], r) != 0:
        return False
    p, b1, b2 = t[k], t[(k + 1) % 3], t[(k + 2) % 3]
    i, j = _projection(t)
    o = _orient2d(p, b1, b2, i, j)
    return _orient2d(p, b1, r, i, j) * o >= 0 and _orient2d(p, r, b2, i, j) * o >= 0


_EDGES = ((0, 1), (1, 2), (2, 0))


def _edges_escape(t1: Triangle, t2: Triangle, shared: dict[int, int]) -> bool:
    # The intersection is the convex hull of (edges of t1 meet t2) and
    # (edges of t2 meet t1); it stays inside the shared cell iff every
    # such piece does.
    for u, w in _EDGES:
        su, sw = u in shared, w in shared
        if su and sw:
            continue
        if su:
            if _enters(t2, shared[u], t1[w]):
                return True
        elif sw:
            if _enters(t2, shared[w], t1[u]):
                return True
        elif segment_meets_triangle(t1[u], t1[w], t2):
            return True
    return False


def triangle_intersection_class(t1: Triangle, t2: Triangle) -> IntersectionClass:
    """Classify the intersection of two closed triangles as point sets."""
    t1, t2 = tuple(map(tuple, t1)), tuple(map(tuple, t2))
    _check(t1)
    _check(t2)
    shared12 = {i: j for i in range(3) for j in range(3) if t1[i] == t2[j]}
    if len(shared12) == 3:
        return IntersectionClass.NONTRIVIAL
    shared21 = {j: i for i, j in shared12.items()}
    if _edges_escape(t1, t2, shared12) or _edges_escape(t2, t1, shared21):
        return IntersectionClass.NONTRIVIAL
    return IntersectionClass(len(shared12))


def coplanar(points: Sequence[Coordinate3]) -> bool:
    points = [tuple(p) for p in points]
    if len(points) < 4:
        raise ValueError("coplanarity needs at least four points")
    return all(orient3d(*quad) == 0 for quad in itertools.combinations(points, 4))
