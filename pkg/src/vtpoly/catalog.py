"""Symbol sets of the maps that come up by name: M0..M3 and the
triangle-orbit candidates (a)..(e)."""
from __future__ import annotations

from vtpoly.candmap import OrbitSymbol, validate_symbol


def _symbols(*lines: str) -> tuple[OrbitSymbol, ...]:
    return tuple(validate_symbol(line.strip("()").split(",")) for line in lines)


NAMED_MAPS: dict[str, tuple[OrbitSymbol, ...]] = {
    "M0": _symbols("(Y1,Y4,I1)", "(Y1i)", "(Y4i)"),
    "M1": _symbols("(Y1,Y4,I1)", "(Y3i,Y1i,I3)", "(Y4i)", "(Y3)"),
    "M2": _symbols("(Y1,Y4,I1)", "(Y1i,Y3i,I2)", "(Y4i)", "(Y3)"),
    "M3": _symbols("(Y1,Y4,I1)", "(Y1i,I2,Y2i)", "(Y2,Y3i,I3)", "(Y4i)", "(Y3)"),
}

# Local rotations at v_1, as cyclic sequences of outgoing dart labels.
NAMED_ROTATIONS: dict[str, tuple[str, ...]] = {
    "M0": ("Y1", "Y1i", "Y4", "Y4i", "I1"),
    "M1": ("Y1", "I3", "Y3i", "Y3", "Y1i", "Y4", "Y4i", "I1"),
    "M2": ("Y1", "Y3i", "Y3", "I2", "Y1i", "Y4", "Y4i", "I1"),
    "M3": ("Y1", "I2", "Y2i", "Y3i", "Y3", "I3", "Y2", "Y1i", "Y4", "Y4i", "I1"),
}

CANDIDATE_TABLE: dict[str, tuple[OrbitSymbol, ...]] = {
    "a": _symbols("(Y1,Y4,I1)", "(Y1i,I2,Y2i)", "(Y4i)", "(Y2)"),
    "b": _symbols("(Y1,Y4,I1)", "(Y1i,I3,Y3i)", "(Y4i)", "(Y3)"),
    "c": _symbols("(Y1,Y4,I1)", "(Y1i,Y3i,I2)", "(Y4i)", "(Y3)"),
    "d": _symbols("(Y1,Y4,I1)", "(Y1i,I2,Y2i)", "(Y2,Y3i,I3)", "(Y4i)", "(Y3)"),
    "e": _symbols("(Y1,Y4,I1)", "(Y1i,Y3i,I2)", "(Y3,Y2i,I3)", "(Y4i)", "(Y2)"),
}

GENUS1_MAP = _symbols("(Y4i,Y2i,Y3i)", "(Y2)", "(Y3)", "(Y4)")

# Both circuit-breaking: the angles close into a disk before using every orbit.
CIRCUIT_VIOLATION = _symbols("(Y4i,Y2i,Y3i)", "(Y2,Y3,Y1i)", "(Y4)", "(Y1)")
