"""Exhaustive enumeration of candidate maps up to geometric isomorphism."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass

from vtpoly.candmap import (
    CandidateMap,
    InvalidSymbolSet,
    MapSummary,
    OrbitSymbol,
    build_candidate_map,
    genus_shortcut,
    symbol_key,
    tucker_admissible,
    validate_symbol,
)
from vtpoly.catalog import CANDIDATE_TABLE, NAMED_MAPS  # noqa: F401  (re-exported)
from vtpoly.geomiso import all_orbit_symbols, canonical_map_form, symbol_class
from vtpoly.rotgroup import RotationGroup, build_normalizer, build_tetrahedral_group

log = logging.getLogger(__name__)

# Genera of the seven classes over T; anything else is a discrepancy worth shouting about.
KNOWN_CLASS_GENERA = (0, 1, 3, 3, 4, 4, 6)


@dataclass(frozen=True)
class MapClass:
    representative: tuple[OrbitSymbol, ...]
    summary: MapSummary
    local_rotation: tuple[str, ...]

    @property
    def genus(self) -> int:
        return self.summary.genus


def complete_with_stabilized(type1: list[OrbitSymbol], group: RotationGroup) -> list[OrbitSymbol]:
    """Add singleton orbits for the inverses the triangle orbits leave open.

    This is the only completion that can satisfy the circuit condition: a
    singleton pair (g), (g^-1) with neither in a triangle orbit closes up on
    its own.
    """
    used = {n for s in type1 for n in s.entries}
    extra = []
    for n in sorted(used, key=group.rank):
        inv = group.inverse_name(n)
        if inv not in used:
            extra.append(validate_symbol((inv,), group))
    return list(type1) + extra


def schewe_filter(summary: MapSummary) -> bool:
    """False exactly for genus 6 on 12 vertices, which admits no polyhedral map."""
    return not (summary.genus == 6 and summary.vertex_count == 12)


def _try_build(symbols, group) -> CandidateMap | None:
    try:
        return build_candidate_map(symbols, group)
    except InvalidSymbolSet:
        return None


def enumerate_candidate_maps(group: RotationGroup | None = None) -> list[MapClass]:
    """All candidate-map classes, sorted by (genus, canonical form).

    Depth-first over sets of triangle orbits with pairwise disjoint entries,
    seeded by one representative per triangle-orbit class (any candidate map
    has a triangle orbit, which some normalizer element moves onto its class
    representative).
    """
    group = group or build_tetrahedral_group()
    normalizer = build_normalizer(group)
    triangles = [s for s in all_orbit_symbols(group) if s.kind == 1]
    seeds = sorted({symbol_class(s, group, normalizer).representative for s in triangles},
                   key=lambda s: symbol_key(s, group))

    found: dict[tuple, MapClass] = {}

    def visit(chosen: list[OrbitSymbol], used: set[str], start: int):
        symbols = complete_with_stabilized(chosen, group)
        m = _try_build(symbols, group)
        if m is not None:
            canon = canonical_map_form(m.symbols, group, normalizer)
            key = tuple(symbol_key(s, group) for s in canon)
            if key not in found:
                cm = build_candidate_map(canon, group)
                found[key] = MapClass(canon, cm.summary(), cm.local_rotation)
        for i in range(start, len(triangles)):
            s = triangles[i]
            if used.isdisjoint(s.entries):
                visit(chosen + [s], used | set(s.entries), i + 1)

    for seed in seeds:
        visit([seed], set(seed.entries), 0)

    classes = sorted(found.values(),
                     key=lambda c: (c.genus, tuple(symbol_key(s, group) for s in c.representative)))
    genera = tuple(c.genus for c in classes)
    if group.order == 12 and Counter(genera) != Counter(KNOWN_CLASS_GENERA):
        log.warning("DISCREPANCY: enumeration found genera %s, expected %s",
                    genera, KNOWN_CLASS_GENERA)
    for c in classes:
        if genus_shortcut(c.representative, group) != c.genus:
            raise AssertionError(f"genus bookkeeping disagrees for {c.representative}")
    return classes


def filter_classes(classes, *, tucker: bool = False, schewe: bool = False,
                   min_genus: int | None = None, group_kind: str = "T") -> list[MapClass]:
    out = []
    for c in classes:
        if tucker and not tucker_admissible(group_kind, c.genus):
            continue
        if schewe and not schewe_filter(c.summary):
            continue
        if min_genus is not None and c.genus < min_genus:
            continue
        out.append(c)
    return out
