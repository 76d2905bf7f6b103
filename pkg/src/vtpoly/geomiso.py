"""Geometric isomorphism of orbit symbols and candidate maps.

The normalizer of the group in O(3) acts on orbit symbols.  Rotations
conjugate entries in place; orientation-reversing elements also reverse the
orientation of the symbol (invert the entries, reverse their cyclic order).
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache

from vtpoly.candmap import OrbitSymbol, symbol_key, validate_symbol
from vtpoly.rotgroup import (
    GroupElement,
    NormalizerGroup,
    RotationGroup,
    build_normalizer,
    build_tetrahedral_group,
    conjugate,
)


class NotInNormalizer(ValueError):
    pass


class UnrealizableOrbit(ValueError):
    pass


class FaceOrbitClass(enum.Enum):
    STABILIZED = "(Y1)"
    ROTATIONS_ONLY = "(Y2i,Y3i,Y4i)"
    ONE_INVOLUTION = "(I1,Y1,Y4)"

    @property
    def representative(self) -> OrbitSymbol:
        return validate_symbol(self.value[1:-1].split(","))


def _ctx(group, normalizer):
    group = group or build_tetrahedral_group()
    return group, normalizer or build_normalizer(group)


def transform_symbol(
    s: OrbitSymbol,
    a: GroupElement,
    group: RotationGroup | None = None,
    normalizer: NormalizerGroup | None = None,
) -> OrbitSymbol:
    group, normalizer = _ctx(group, normalizer)
    return _transform(s, a, group, normalizer)


@lru_cache(maxsize=1 << 16)
def _transform(s: OrbitSymbol, a: GroupElement, group: RotationGroup,
               normalizer: NormalizerGroup) -> OrbitSymbol:
    if a not in normalizer:
        raise NotInNormalizer(f"{a} does not normalize the group")
    entries = list(s.entries)
    if a.det < 0:
        entries = [group.inverse_name(n) for n in reversed(entries)]
    images = [group.name_of(conjugate(group[n], a)) for n in entries]
    return validate_symbol(images, group)


def transform_symbols(symbols, a, group=None, normalizer=None) -> tuple[OrbitSymbol, ...]:
    group, normalizer = _ctx(group, normalizer)
    out = [transform_symbol(s, a, group, normalizer) for s in symbols]
    return tuple(sorted(out, key=lambda s: symbol_key(s, group)))


def _sorted_key(symbols, group):
    return tuple(sorted(symbol_key(s, group) for s in symbols))


def canonical_map_form(symbols, group=None, normalizer=None) -> tuple[OrbitSymbol, ...]:
    """Least transformed symbol set over the whole normalizer."""
    group, normalizer = _ctx(group, normalizer)
    best = None
    for a in normalizer.elements:
        image = transform_symbols(symbols, a, group, normalizer)
        key = _sorted_key(image, group)
        if best is None or key < best[0]:
            best = (key, image)
    return best[1]


def maps_isomorphic(symbols1, symbols2, group=None, normalizer=None) -> GroupElement | None:
    """A normalizer element carrying the first symbol set onto the second."""
    group, normalizer = _ctx(group, normalizer)
    target = _sorted_key(symbols2, group)
    for a in normalizer.elements:
        if _sorted_key(transform_symbols(symbols1, a, group, normalizer), group) == target:
            return a
    return None


@dataclass(frozen=True)
class SymbolClass:
    representative: OrbitSymbol
    members: frozenset[OrbitSymbol]


def symbol_class(s: OrbitSymbol, group=None, normalizer=None) -> SymbolClass:
    group, normalizer = _ctx(group, normalizer)
    members = frozenset(transform_symbol(s, a, group, normalizer) for a in normalizer.elements)
    rep = min(members, key=lambda m: symbol_key(m, group))
    return SymbolClass(rep, members)


def all_orbit_symbols(group: RotationGroup | None = None) -> list[OrbitSymbol]:
    """Every valid orbit symbol, each cyclic class listed once."""
    group = group or build_tetrahedral_group()
    names = [g.name for g in group.core_rotations]
    found = set()
    for n in names:
        if group[n].order > 2:
            found.add(OrbitSymbol((n,)))
    for g1, g2 in itertools.permutations(names, 2):
        g3 = group[g1].inverse() * group[g2].inverse()
        if g3.is_identity:
            continue
        n3 = group.name_of(g3)
        if n3 in (g1, g2):
            continue
        found.add(validate_symbol((g1, g2, n3), group))
    return sorted(found, key=lambda s: symbol_key(s, group))


def classify_face_orbit(s: OrbitSymbol, group: RotationGroup | None = None) -> FaceOrbitClass:
    group = group or build_tetrahedral_group()
    if s.kind == 2:
        return FaceOrbitClass.STABILIZED
    involutions = sum(1 for n in s.entries if group[n].order == 2)
    if involutions == 0:
        return FaceOrbitClass.ROTATIONS_ONLY
    if involutions == 1:
        return FaceOrbitClass.ONE_INVOLUTION
    raise UnrealizableOrbit(f"{s} consists of involutions; its faces form a compound")
