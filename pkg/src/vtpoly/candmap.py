"""Orbit symbols, candidate maps and genus bookkeeping.

A candidate map is given by a set of orbit symbols read off at the initial
vertex ``v_1``.  Vertices are indexed by group elements; ``v_h`` is the image
of ``v_1`` under ``h`` and a dart from ``v_x`` to ``v_y`` carries the label
``x^-1 * y``.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from vtpoly.rotgroup import RotationGroup, build_tetrahedral_group


class SymbolError(ValueError):
    """An orbit symbol that violates its local rules."""


class NotCoreRotation(SymbolError):
    pass


class ProductNotIdentity(SymbolError):
    pass


class Type2OrderTwo(SymbolError):
    pass


class RepeatedEntry(SymbolError):
    pass


class InvalidSymbolSet(ValueError):
    """A symbol set that fails one of the candidate-map conditions.

    ``condition`` is one of ``"empty"``, ``"repetition"``, ``"circuit"``,
    ``"connectedness"`` or ``"symbol"``.
    """

    def __init__(self, condition: str, message: str):
        super().__init__(f"{condition}: {message}")
        self.condition = condition


class NotPolyhedral(ValueError):
    """The constructed face structure is not a polyhedral map."""


class MapFileError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class OrbitSymbol:
    entries: tuple[str, ...]

    @property
    def kind(self) -> int:
        return 1 if len(self.entries) == 3 else 2

    @property
    def angles(self) -> tuple[tuple[str, str], ...]:
        """Oriented combinatorial angles ``(incoming, outgoing)`` at ``v_1``."""
        e = self.entries
        if len(e) == 1:
            return ((e[0], e[0]),)
        return ((e[0], e[1]), (e[1], e[2]), (e[2], e[0]))

    def __str__(self) -> str:
        return "(" + ",".join(self.entries) + ")"


def _group(group):
    return group if group is not None else build_tetrahedral_group()


def symbol_key(symbol: OrbitSymbol, group: RotationGroup | None = None) -> tuple[int, ...]:
    group = _group(group)
    return tuple(group.rank(n) for n in symbol.entries)


def validate_symbol(entries: Sequence[str], group: RotationGroup | None = None) -> OrbitSymbol:
    """Check an orbit symbol and rotate it to its least cyclic form."""
    group = _group(group)
    entries = tuple(entries)
    if len(entries) not in (1, 3):
        raise SymbolError(f"orbit symbol must have 1 or 3 entries, got {len(entries)}")
    for n in entries:
        if not group.is_core(n):
            raise NotCoreRotation(f"{n!r} is not a core rotation")
    if len(entries) == 1:
        if group[entries[0]].order <= 2:
            raise Type2OrderTwo(f"singleton ({entries[0]}) needs an element of order > 2")
        return OrbitSymbol(entries)
    if len(set(entries)) != 3:
        raise RepeatedEntry(f"repeated entry in {entries}")
    g1, g2, g3 = (group[n] for n in entries)
    if g1.inverse() * g2.inverse() != g3:
        raise ProductNotIdentity(f"{entries}: third entry is not g1^-1 * g2^-1")
    rotations = [entries[i:] + entries[:i] for i in range(3)]
    best = min(rotations, key=lambda r: tuple(group.rank(n) for n in r))
    return OrbitSymbol(best)


def _as_symbols(symbols, group) -> list[OrbitSymbol]:
    out = []
    for s in symbols:
        entries = s.entries if isinstance(s, OrbitSymbol) else tuple(s)
        out.append(validate_symbol(entries, group))
    return out


def _angle_successor(symbols, group):
    """Map each angle to its successor, or None where the chain breaks."""
    angles = [a for s in symbols for a in s.angles]
    by_first = {a[0]: a for a in angles}
    return angles, {a: by_first.get(group.inverse_name(a[1])) for a in angles}


def local_rotation(symbols, group: RotationGroup | None = None) -> tuple[str, ...] | None:
    """Cyclic sequence of outgoing labels at ``v_1``, or None if the angles
    do not chain into a single circuit."""
    group = _group(group)
    symbols = _as_symbols(symbols, group)
    entries = [n for s in symbols for n in s.entries]
    if not entries or len(set(entries)) != len(entries):
        return None
    angles, succ = _angle_successor(symbols, group)
    start = min(angles, key=lambda a: group.rank(a[1]))
    out, a = [], start
    while True:
        out.append(a[1])
        a = succ[a]
        if a is None:
            return None
        if a == start:
            break
        if len(out) > len(angles):
            return None
    if len(out) != len(angles):
        return None
    return tuple(out)


def circuit_property(symbols, group: RotationGroup | None = None) -> bool:
    return local_rotation(symbols, group) is not None


def connectedness_property(symbols, group: RotationGroup | None = None) -> bool:
    group = _group(group)
    names = {n for s in _as_symbols(symbols, group) for n in s.entries}
    if not names:
        return False
    return len(group.generated_subgroup(sorted(names))) == group.order


@dataclass(frozen=True)
class MapSummary:
    vertex_count: int
    edge_count: int
    face_count: int
    genus: int
    vertex_degree: int

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count


@dataclass(frozen=True)
class Dart:
    tail: int
    head: int
    label: str


@dataclass(frozen=True)
class CandidateMap:
    """Explicit face/dart incidence of a candidate map.

    Vertex ``i`` is ``v_h`` with ``h = group.elements[i]``; faces are oriented
    boundary walks of vertex indices.
    """

    symbols: tuple[OrbitSymbol, ...]
    group: RotationGroup
    faces: tuple[tuple[int, ...], ...]
    face_symbols: tuple[int, ...]
    darts: tuple[Dart, ...]
    local_rotation: tuple[str, ...]

    @property
    def vertex_count(self) -> int:
        return self.group.order

    @property
    def edge_count(self) -> int:
        return len(self.darts) // 2

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    @property
    def vertex_degree(self) -> int:
        return len(self.local_rotation)

    def summary(self) -> MapSummary:
        return MapSummary(self.vertex_count, self.edge_count, self.face_count,
                          genus(self), self.vertex_degree)

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(d.tail, d.head), max(d.tail, d.head)) for d in self.darts})

    def reversed(self) -> CandidateMap:
        """The same labeled map with the opposite orientation."""
        flipped = []
        for s in self.symbols:
            inv = [self.group.inverse_name(n) for n in reversed(s.entries)]
            flipped.append(inv)
        return build_candidate_map(flipped, self.group)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.symbols)


def _least_rotation(walk: tuple[int, ...]) -> tuple[int, ...]:
    return min(walk[i:] + walk[:i] for i in range(len(walk)))


def build_candidate_map(symbols, group: RotationGroup | None = None) -> CandidateMap:
    group = _group(group)
    symbols = list(symbols)
    if not symbols:
        raise InvalidSymbolSet("empty", "no orbit symbols given")
    try:
        symbols = _as_symbols(symbols, group)
    except SymbolError as exc:
        raise InvalidSymbolSet("symbol", str(exc)) from exc
    entries = [n for s in symbols for n in s.entries]
    if len(set(entries)) != len(entries):
        raise InvalidSymbolSet("repetition", "a core rotation appears more than once")
    rotation = local_rotation(symbols, group)
    if rotation is None:
        raise InvalidSymbolSet("circuit", "angles do not form a single circuit")
    if not connectedness_property(symbols, group):
        raise InvalidSymbolSet("connectedness", "entries do not generate the group")
    symbols = sorted(symbols, key=lambda s: symbol_key(s, group))

    idx = group.index
    faces: dict[tuple[int, ...], int] = {}
    walks, owners = [], []
    for si, s in enumerate(symbols):
        count = 0
        for h in group.elements:
            if s.kind == 2:
                g = group[s.entries[0]]
                walk, x = [], h
                for _ in range(g.order):
                    walk.append(idx(x))
                    x = g * x
            else:
                g1, g2 = group[s.entries[0]], group[s.entries[1]]
                walk = [idx(h), idx(g2 * h), idx(g1.inverse() * h)]
            key = _least_rotation(tuple(walk))
            if key not in faces:
                faces[key] = len(walks)
                walks.append(tuple(walk))
                owners.append(si)
                count += 1
        expected = group.order if s.kind == 1 else group.order // group[s.entries[0]].order
        if count != expected:
            raise NotPolyhedral(f"orbit {s} yields {count} faces, expected {expected}")

    darts: dict[tuple[int, int], Dart] = {}
    for walk in walks:
        if len(set(walk)) != len(walk):
            raise NotPolyhedral(f"face {walk} repeats a vertex")
        for k in range(len(walk)):
            x, y = walk[k], walk[(k + 1) % len(walk)]
            if (x, y) in darts:
                raise NotPolyhedral(f"dart {x}->{y} lies on two faces")
            label = group.name_of(group.elements[x].inverse() * group.elements[y])
            darts[(x, y)] = Dart(x, y, label)
    for (x, y), d in darts.items():
        opposite = darts.get((y, x))
        if opposite is None or opposite.label != group.inverse_name(d.label):
            raise NotPolyhedral(f"dart {x}->{y} has no opposite dart")
    vertex_sets = [frozenset(w) for w in walks]
    for i in range(len(walks)):
        for j in range(i + 1, len(walks)):
            common = vertex_sets[i] & vertex_sets[j]
            if len(common) > 2:
                raise NotPolyhedral(f"faces {walks[i]} and {walks[j]} share {len(common)} vertices")
            if len(common) == 2:
                a, b = sorted(common)
                if (a, b) not in darts:
                    raise NotPolyhedral(f"faces {walks[i]} and {walks[j]} meet in non-adjacent vertices")

    return CandidateMap(
        symbols=tuple(symbols),
        group=group,
        faces=tuple(walks),
        face_symbols=tuple(owners),
        darts=tuple(darts[k] for k in sorted(darts)),
        local_rotation=rotation,
    )


def genus(m: CandidateMap) -> int:
    chi = m.euler_characteristic
    if chi % 2:
        raise ValueError(f"odd Euler characteristic {chi}")
    return 1 - chi // 2


def genus_shortcut(symbols, group: RotationGroup | None = None) -> int:
    """Genus from symbol counts alone: each entry contributes ``|G|/2`` edges."""
    group = _group(group)
    symbols = _as_symbols(symbols, group)
    n = group.order
    k = sum(len(s.entries) for s in symbols)
    f = sum(n if s.kind == 1 else n // group[s.entries[0]].order for s in symbols)
    chi = n - (n * k) // 2 + f
    return 1 - chi // 2


def heawood_raw(genus: int) -> int:
    """``ceil((7 + sqrt(1 + 48 g)) / 2)`` in exact integer arithmetic."""
    if genus < 0:
        raise ValueError("genus must be non-negative")
    disc = 1 + 48 * genus
    n = 4
    while (2 * n - 7) ** 2 < disc:
        n += 1
    return n


def heawood_min_vertices(genus: int) -> int:
    """Least vertex count of a polyhedral map of the given genus.

    Genus 2 is the one exception to sharpness: the bound gives 9 but 10
    vertices are needed.
    """
    if genus == 2:
        return 10
    return heawood_raw(genus)


_TUCKER = {
    "T": ((6, 8), (0, 3, 5, 7)),
    "O": ((12, 16, 18), (0, 5, 7, 11, 13)),
    "I": ((30, 40, 48), (0, 11, 19, 21, 29, 31, 37)),
}


def tucker_admissible(group_kind: str, genus: int) -> bool:
    """Whether ``genus`` is a non-negative combination of the group's
    periods plus one of its admissible remainders."""
    if genus < 0:
        return False
    try:
        periods, remainders = _TUCKER[group_kind]
    except KeyError:
        raise ValueError(f"unknown group kind {group_kind!r}") from None
    reachable = [False] * (genus + 1)
    reachable[0] = True
    for x in range(1, genus + 1):
        reachable[x] = any(x >= p and reachable[x - p] for p in periods)
    return any(genus >= r and reachable[genus - r] for r in remainders)


def max_triangulation_genus(vertex_count: int) -> int:
    """Largest genus whose triangulations fit into the complete graph."""
    n = vertex_count
    g = 0
    while 3 * n - 6 + 6 * g <= n * (n - 1) // 2:
        g += 1
    return g - 1 if g else 0


def max_genus_12_vertices() -> int:
    return max_triangulation_genus(12)


def parse_map_text(text: str, group: RotationGroup | None = None) -> list[OrbitSymbol]:
    group = _group(group)
    symbols = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not (line.startswith("(") and line.endswith(")")):
            raise MapFileError(lineno, f"expected '(a,b,c)' or '(g)', got {line!r}")
        parts = [p.strip() for p in line[1:-1].split(",")]
        try:
            symbols.append(validate_symbol(parts, group))
        except SymbolError as exc:
            raise MapFileError(lineno, str(exc)) from exc
    return symbols


def read_map_file(path, group: RotationGroup | None = None) -> list[OrbitSymbol]:
    return parse_map_text(Path(path).read_text(), group)


def format_map(symbols: Iterable[OrbitSymbol], comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines += [str(s) for s in symbols]
    return "\n".join(lines) + "\n"
