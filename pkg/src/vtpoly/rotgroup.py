"""Exact integer-matrix model of the tetrahedral rotation group and its normalizer.

Elements act on row vectors from the right, so ``g * h`` means "apply ``g``,
then ``h``" and corresponds to the matrix product ``G @ H``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

Matrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

IDENTITY_NAME = "1"

# Canonical total order on the core rotations; also the wire alphabet.
CORE_NAMES = ("I1", "I2", "I3", "Y1", "Y2", "Y3", "Y4", "Y1i", "Y2i", "Y3i", "Y4i")

_GENERATORS: dict[str, Matrix] = {
    "I1": ((1, 0, 0), (0, -1, 0), (0, 0, -1)),
    "I2": ((-1, 0, 0), (0, 1, 0), (0, 0, -1)),
    "I3": ((-1, 0, 0), (0, -1, 0), (0, 0, 1)),
    "Y1": ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    "Y2": ((0, 0, -1), (1, 0, 0), (0, -1, 0)),
    "Y3": ((0, 0, -1), (-1, 0, 0), (0, 1, 0)),
    "Y4": ((0, 0, 1), (-1, 0, 0), (0, -1, 0)),
}


@lru_cache(maxsize=4096)
def _matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )  # type: ignore[return-value]


@lru_cache(maxsize=4096)
def _transpose(a: Matrix) -> Matrix:
    return tuple(tuple(a[j][i] for j in range(3)) for i in range(3))  # type: ignore[return-value]


def _det(a: Matrix) -> int:
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


_IDENTITY: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@lru_cache(maxsize=4096)
def _is_orthogonal(a: Matrix) -> bool:
    return _matmul(a, _transpose(a)) == _IDENTITY


@dataclass(frozen=True)
class GroupElement:
    """An orthogonal integer matrix; equality ignores the display name."""

    matrix: Matrix
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not _is_orthogonal(self.matrix):
            raise ValueError(f"matrix is not orthogonal: {self.matrix}")

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(_matmul(self.matrix, other.matrix))

    def inverse(self) -> GroupElement:
        return GroupElement(_transpose(self.matrix))

    @property
    def det(self) -> int:
        return _det(self.matrix)

    @property
    def is_identity(self) -> bool:
        return self.matrix == _IDENTITY

    @property
    def order(self) -> int:
        power, n = self, 1
        while not power.is_identity:
            power, n = power * self, n + 1
        return n

    def act(self, vector):
        """Image of a row vector ``v`` under this element, i.e. ``v @ M``."""
        m = self.matrix
        return tuple(sum(vector[k] * m[k][j] for k in range(3)) for j in range(3))

    def __str__(self) -> str:
        if self.name is not None:
            return self.name
        return ";".join(",".join(str(x) for x in row) for row in self.matrix)


def conjugate(g: GroupElement, a: GroupElement) -> GroupElement:
    """Return ``a^-1 * g * a``."""
    return a.inverse() * g * a


def _closure(generators) -> list[GroupElement]:
    identity = GroupElement(_IDENTITY)
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    new.append(y)
        frontier = new
    return elements


def _axis(g: GroupElement) -> tuple[int, int, int]:
    # Entries of T are in {-1,0,1}; its rotation axes are spanned by such vectors.
    for v in itertools.product((1, 0, -1), repeat=3):
        if v != (0, 0, 0) and g.act(v) == v:
            return v
    raise ValueError(f"no small integer axis for {g}")


@dataclass(frozen=True, eq=False)
class RotationGroup:
    elements: tuple[GroupElement, ...]
    core_rotations: tuple[GroupElement, ...]
    axes: tuple[tuple[tuple[int, int, int], int], ...]

    def __post_init__(self):
        object.__setattr__(self, "_by_name", {g.name: g for g in self.elements})
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> GroupElement:
        return self.elements[0]

    def __getitem__(self, name: str) -> GroupElement:
        return self._by_name[name]

    def __contains__(self, g) -> bool:
        return g in self._index

    def index(self, g: GroupElement) -> int:
        return self._index[g]

    def named(self, g: GroupElement) -> GroupElement:
        """The stored (named) copy of ``g``."""
        return self.elements[self._index[g]]

    def name_of(self, g: GroupElement) -> str:
        return self.elements[self._index[g]].name

    def is_core(self, name: str) -> bool:
        return name in self._by_name and name != IDENTITY_NAME

    def inverse_name(self, name: str) -> str:
        return self.name_of(self[name].inverse())

    def rank(self, name: str) -> int:
        """Position of a core rotation in the canonical order."""
        return self.index(self[name]) - 1

    def axis_of(self, name: str) -> tuple[int, int, int]:
        """A non-zero integer vector fixed by the named rotation."""
        return _axis(self[name])

    def generated_subgroup(self, names) -> list[GroupElement]:
        return _closure([self[n] for n in names])


@dataclass(frozen=True, eq=False)
class NormalizerGroup:
    elements: tuple[GroupElement, ...]
    orientation_preserving: tuple[GroupElement, ...]
    centralizer: tuple[GroupElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    def __contains__(self, g) -> bool:
        return g in self._members


@lru_cache(maxsize=None)
def build_tetrahedral_group() -> RotationGroup:
    named = {n: GroupElement(m, n) for n, m in _GENERATORS.items()}
    for k in range(1, 5):
        y = named[f"Y{k}"]
        named[f"Y{k}i"] = GroupElement(y.inverse().matrix, f"Y{k}i")
    identity = GroupElement(_IDENTITY, IDENTITY_NAME)
    core = tuple(named[n] for n in CORE_NAMES)
    elements = (identity,) + core
    closed = _closure(core)
    if set(closed) != set(elements):
        raise AssertionError("tetrahedral generators do not close to 12 elements")
    axes = []
    for g in core:
        ax = _axis(g)
        entry = (ax, g.order)
        if entry not in axes:
            axes.append(entry)
    return RotationGroup(elements, core, tuple(axes))


@lru_cache(maxsize=None)
def build_normalizer(group: RotationGroup | None = None) -> NormalizerGroup:
    """All signed permutation matrices that conjugate ``group`` onto itself."""
    group = group or build_tetrahedral_group()
    members = set(group.elements)
    found = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            m = tuple(
                tuple(signs[i] if j == perm[i] else 0 for j in range(3)) for i in range(3)
            )
            a = GroupElement(m)
            if all(conjugate(g, a) in members for g in group.core_rotations):
                found.append(a)
    # identity first, then a fixed order, so searches are deterministic
    found.sort(key=lambda a: (not a.is_identity, a.det < 0, a.matrix))
    plus = tuple(a for a in found if a.det == 1)
    central = tuple(
        a for a in found if all(a * g == g * a for g in group.elements)
    )
    return NormalizerGroup(tuple(found), plus, central)
