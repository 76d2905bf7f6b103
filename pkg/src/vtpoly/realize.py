"""Placing a candidate map in space and checking it is an embedded polyhedron."""
from __future__ import annotations

import enum
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from vtpoly import kernel
from vtpoly.candmap import CandidateMap, MapSummary, build_candidate_map
from vtpoly.geometry import Coordinate3, IntersectionClass, as_coordinate, coplanar, is_degenerate


class ZeroVector(ValueError):
    pass


class NotEmbedded(ValueError):
    pass


class Verdict(enum.Enum):
    EMBEDDED = "Embedded"
    FAILED = "Failed"


@dataclass(frozen=True)
class CoincidentVertices:
    first: str
    second: str

    def __str__(self) -> str:
        return f"CoincidentVertices v_{self.first} v_{self.second}"


@dataclass(frozen=True)
class DegenerateFace:
    face: int

    def __str__(self) -> str:
        return f"DegenerateFace {self.face}"


@dataclass(frozen=True)
class FaceIntersection:
    first: int
    second: int
    kind: IntersectionClass

    def __str__(self) -> str:
        return f"FaceIntersection {self.first} {self.second} {self.kind.name}"


Witness = CoincidentVertices | DegenerateFace | FaceIntersection


@dataclass(frozen=True)
class Realization:
    map: CandidateMap
    base: Coordinate3
    positions: tuple[Coordinate3, ...]


@dataclass(frozen=True)
class RealizationReport:
    verdict: Verdict
    counts: MapSummary
    base: Coordinate3
    witness: Witness | None = None

    @property
    def embedded(self) -> bool:
        return self.verdict is Verdict.EMBEDDED

    def lines(self) -> list[str]:
        c = self.counts
        return [
            f"verdict: {self.verdict.value}",
            f"base: {format_coordinate(self.base)}",
            f"vertices: {c.vertex_count}",
            f"edges: {c.edge_count}",
            f"faces: {c.face_count}",
            f"genus: {c.genus}",
            f"witness: {self.witness if self.witness is not None else 'none'}",
        ]


def format_number(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_coordinate(p: Sequence) -> str:
    return ",".join(format_number(x) for x in p)


def place_vertices(m: CandidateMap, base: Sequence) -> Realization:
    """Put ``v_h`` at ``base * h`` for every group element ``h``."""
    base = as_coordinate(base)
    if base == (0, 0, 0):
        raise ZeroVector("the base vertex must be non-zero")
    positions = tuple(h.act(base) for h in m.group.elements)
    return Realization(m, base, positions)


def integral_positions(positions) -> list[tuple[int, int, int]]:
    """Scale by the common denominator; every predicate here is homogeneous."""
    den = 1
    for p in positions:
        for x in p:
            den = math.lcm(den, Fraction(x).denominator)
    return [tuple(int(Fraction(x) * den) for x in p) for p in positions]


def check_mesh(positions: Sequence[Coordinate3], faces: Sequence[tuple[int, ...]],
               names: Sequence[str] | None = None) -> Witness | None:
    """First obstruction to ``faces`` forming an embedded triangulated surface
    on ``positions``: coincident vertices, a degenerate face, or a face pair
    whose intersection is more than the cell they share."""
    names = names or [str(i) for i in range(len(positions))]
    seen: dict[tuple, int] = {}
    for i, p in enumerate(positions):
        key = tuple(Fraction(x) for x in p)
        if key in seen:
            return CoincidentVertices(names[seen[key]], names[i])
        seen[key] = i
    for k, f in enumerate(faces):
        if is_degenerate(tuple(positions[v] for v in f)):
            return DegenerateFace(k)
    bad = kernel.first_bad_pair(integral_positions(positions), [tuple(f) for f in faces])
    if bad is not None:
        i, j, cls = bad
        return FaceIntersection(i, j, IntersectionClass(cls))
    return None


def verify_realization(m: CandidateMap, base: Sequence) -> RealizationReport:
    r = place_vertices(m, base)
    names = [g.name for g in m.group.elements]
    witness = check_mesh(r.positions, m.faces, names)
    verdict = Verdict.EMBEDDED if witness is None else Verdict.FAILED
    return RealizationReport(verdict, m.summary(), r.base, witness)


def on_rotation_axis(group, base) -> bool:
    return any(g.act(base) == tuple(base) for g in group.core_rotations)


def _scan_slice(symbols, a_values, bound):
    m = build_candidate_map(symbols)
    hits = []
    rng = range(-bound, bound + 1)
    for a in a_values:
        for b, c in itertools.product(rng, rng):
            base = (a, b, c)
            if base == (0, 0, 0) or math.gcd(a, b, c) != 1:
                continue
            if on_rotation_axis(m.group, base):
                continue
            if verify_realization(m, base).embedded:
                hits.append(base)
    return hits


def search_realizations(m: CandidateMap, bound: int, workers: int = 1) -> list[tuple[int, int, int]]:
    """Primitive integer bases with all coordinates in ``[-bound, bound]``
    that realize ``m``, in lexicographic order."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    a_values = list(range(-bound, bound + 1))
    if workers <= 1:
        hits = _scan_slice(m.symbols, a_values, bound)
    else:
        slices = [a_values[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_scan_slice, [m.symbols] * workers, slices, [bound] * workers)
            hits = [h for part in parts for h in part]
    return sorted(hits)


def _require_embedded(r: Realization):
    witness = check_mesh(r.positions, r.map.faces, [g.name for g in r.map.group.elements])
    if witness is not None:
        raise NotEmbedded(f"realization is not embedded: {witness}")


def export_off(r: Realization) -> str:
    """OFF text with faces in their oriented boundary-walk order.

    Coordinates print as integers when integral and as ``p/q`` otherwise.
    """
    _require_embedded(r)
    m = r.map
    out = ["OFF", f"{len(r.positions)} {m.face_count} {m.edge_count}"]
    out += [" ".join(format_number(x) for x in p) for p in r.positions]
    out += [" ".join([str(len(f))] + [str(v) for v in f]) for f in m.faces]
    return "\n".join(out) + "\n"


def parse_off(text: str) -> tuple[list[Coordinate3], list[tuple[int, ...]]]:
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0] != "OFF":
        raise ValueError("missing OFF header")
    nv, nf, _ = (int(x) for x in lines[1].split())
    positions = [as_coordinate(lines[2 + i].split()) for i in range(nv)]
    faces = []
    for ln in lines[2 + nv: 2 + nv + nf]:
        parts = [int(x) for x in ln.split()]
        if parts[0] != len(parts) - 1:
            raise ValueError(f"bad face line {ln!r}")
        faces.append(tuple(parts[1:]))
    return positions, faces


def coplanar_adjacent_pairs(positions, faces) -> set[tuple[int, int]]:
    """Pairs of faces sharing an edge whose vertices lie in one plane."""
    pairs = set()
    for i, j in itertools.combinations(range(len(faces)), 2):
        common = set(faces[i]) & set(faces[j])
        if len(common) == 2 and coplanar([positions[v] for v in set(faces[i]) | set(faces[j])]):
            pairs.add((i, j))
    return pairs


def coplanarity_audit(r: Realization) -> set[tuple[int, int]]:
    _require_embedded(r)
    return coplanar_adjacent_pairs(r.positions, r.map.faces)
