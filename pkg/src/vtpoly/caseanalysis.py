"""Pointwise case analysis showing why map M2 cannot be realized.

For a base vertex ``(a, b, c)`` the space splits into four regions by the
signs of a handful of quadratic forms.  Each region forces one of five
geometric events, any of which makes some face orbit self-intersect:

* C1, C2: the I3 axis pierces the Y3- resp. Y4-stabilized triangle at ``v``;
* C3, C4: the Y4 resp. Y3 axis pierces the triangle at ``v`` of the orbit
  ``(Y1,Y4,I1)`` resp. ``(Y1i,Y3i,I2)``;
* C5: those two triangles cross each other.

The determinants below are closed-form polynomials; the geometric events
are re-derived independently by :func:`cross_validate_m2`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from vtpoly.candmap import CandidateMap, build_candidate_map
from vtpoly.catalog import NAMED_MAPS
from vtpoly.geometry import (
    IntersectionClass,
    as_coordinate,
    axis_pierces_triangle,
    triangle_intersection_class,
)
from vtpoly.realize import ZeroVector, integral_positions, on_rotation_axis, verify_realization
from vtpoly.rotgroup import build_tetrahedral_group

CASES = ("C1", "C2", "C3", "C4", "C5")


@dataclass(frozen=True)
class CaseVerdict:
    region: str  # "R1".."R4" or "boundary"
    cases: tuple[str, ...]
    determinants: dict = field(compare=False)
    conditions: dict = field(compare=False)


def _half(x):
    # works for numbers and for symbolic inputs alike
    return x * Fraction(1, 2)


def case_determinants(a, b, c) -> dict[str, tuple]:
    """Closed forms of the piercing determinants (C1..C4) and of the four
    4x4 separation determinants behind C5."""
    return {
        "C1": (b * b + a * c, c * c + a * b, a * a - b * c),
        "C2": (-(a * a + b * c), -(c * c + a * b), -(b * b - a * c)),
        "C3": (
            _half((a + b) ** 2 + (b + c) ** 2 + (c - a) ** 2),
            -2 * a * (b + c),
            (b + c) ** 2 - (a + c) * (b + a),
        ),
        "C4": (
            -_half((a + b) ** 2 + (c - b) ** 2 + (c + a) ** 2),
            2 * b * (a + c),
            -(a + c) ** 2 + (a + b) * (b + c),
        ),
        "C5": (
            -2 * (c - b) * (a * a + a * b - b * b + a * c - b * c - c * c),
            -2 * (c + b) * (a * a - a * b + b * b - a * c - b * c + c * c),
            2 * (c - a) * (-a * a + a * b + b * b - a * c + b * c - c * c),
            2 * (a + c) * (a * a - a * b + b * b - a * c - b * c + c * c),
        ),
    }


def region_forms(a, b, c) -> dict[str, object]:
    return {
        "c2+ab": c * c + a * b,
        "a2+bc": a * a + b * c,
        "b2+ac": b * b + a * c,
        "a2-bc": a * a - b * c,
        "b2-ac": b * b - a * c,
    }


def _no_opposite_signs(values) -> bool:
    return not (any(v > 0 for v in values) and any(v < 0 for v in values))


def _conditions(dets) -> dict[str, bool]:
    d1, d2, d3, d4 = dets["C5"]
    return {
        "C1": _no_opposite_signs(dets["C1"]),
        "C2": _no_opposite_signs(dets["C2"]),
        "C3": _no_opposite_signs(dets["C3"]),
        "C4": _no_opposite_signs(dets["C4"]),
        # each triangle's plane strictly separates the far edge of the other
        "C5": d1 * d2 < 0 and d3 * d4 < 0,
    }


def m2_case_analysis(base) -> CaseVerdict:
    a, b, c = as_coordinate(base)
    if (a, b, c) == (0, 0, 0):
        raise ZeroVector("the base vertex must be non-zero")
    forms = region_forms(a, b, c)
    dets = case_determinants(a, b, c)
    holds = _conditions(dets)
    if any(v == 0 for v in forms.values()):
        region = "boundary"
        cases = tuple(k for k in CASES if holds[k])
    elif forms["c2+ab"] < 0:
        region = "R1"
        cases = ("C4",) if abs(a) >= abs(b) and abs(a) >= abs(c) else ("C3",)
    elif forms["a2+bc"] < 0 and forms["b2+ac"] < 0:
        region = "R2"
        cases = ("C3", "C4")
    elif forms["a2-bc"] < 0 and forms["b2-ac"] < 0:
        region = "R3"
        cases = ("C5",)
    else:
        region = "R4"
        cases = tuple(k for k in ("C1", "C2") if holds[k])
    return CaseVerdict(region, cases, dets, holds)


@lru_cache(maxsize=None)
def m2_map() -> CandidateMap:
    return build_candidate_map(NAMED_MAPS["M2"])


def case_triangles(base) -> dict[str, tuple]:
    """The four triangles at ``v`` the analysis talks about, built from the
    group action rather than from the closed forms."""
    g = build_tetrahedral_group()
    v = as_coordinate(base)

    def img(*names):
        p = v
        for n in names:
            p = g[n].act(p)
        return p

    return {
        "D1": (v, img("Y3"), img("Y3", "Y3")),
        "D2": (v, img("Y4i"), img("Y4i", "Y4i")),
        "D3": (v, img("Y4"), img("Y1i")),
        "D4": (v, img("Y3i"), img("Y1")),
    }


def geometric_events(base) -> dict[str, bool]:
    g = build_tetrahedral_group()
    tri = case_triangles(base)
    i3 = g.axis_of("I3")
    return {
        "C1": axis_pierces_triangle(i3, tri["D1"]),
        "C2": axis_pierces_triangle(i3, tri["D2"]),
        "C3": axis_pierces_triangle(g.axis_of("Y4"), tri["D3"]),
        "C4": axis_pierces_triangle(g.axis_of("Y3"), tri["D4"]),
        "C5": triangle_intersection_class(tri["D3"], tri["D4"]) is IntersectionClass.NONTRIVIAL,
    }


def cross_validate_m2(base) -> bool:
    """True iff every case named by the analysis is geometrically present and
    the generic verifier rejects M2 at ``base``."""
    base = as_coordinate(base)
    if base == (0, 0, 0):
        raise ZeroVector("the base vertex must be non-zero")
    if on_rotation_axis(build_tetrahedral_group(), base):
        raise ValueError(f"base {base} lies on a rotation axis")
    # all predicates are homogeneous, so integer coordinates give the same answer
    base = integral_positions([base])[0]
    verdict = m2_case_analysis(base)
    if not verdict.cases:
        return False
    events = geometric_events(base)
    if not all(events[k] for k in verdict.cases):
        return False
    return not verify_realization(m2_map(), base).embedded
