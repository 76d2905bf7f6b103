"""Face-pair kernel dispatch: compiled extension when importable, else pure Python."""
from __future__ import annotations

from vtpoly import _pykernel

try:
    from vtpoly import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

# Compiled path is exact for |coordinate| <= LIMIT (128-bit determinants).
LIMIT = 2 ** 40

BACKEND = "cython" if _compiled is not None else "python"
_active = _compiled if _compiled is not None else _pykernel


def use_backend(name: str) -> None:
    """Select ``"cython"`` or ``"python"`` for subsequent kernel calls."""
    global _active, BACKEND
    if name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        _active = _compiled
    elif name == "python":
        _active = _pykernel
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name


def _fits(coords) -> bool:
    return all(isinstance(x, int) and -LIMIT <= x <= LIMIT for c in coords for x in c)


def first_bad_pair(coords, faces):
    if _active is not _pykernel and _fits(coords):
        return _active.first_bad_pair(coords, faces)
    return _pykernel.first_bad_pair(coords, faces)


def pair_classes(coords, faces) -> list[int]:
    if _active is not _pykernel and _fits(coords):
        return _active.pair_classes(coords, faces)
    return _pykernel.pair_classes(coords, faces)


def classify_pair(t1, t2) -> int:
    if _active is not _pykernel and _fits(list(t1) + list(t2)):
        return _active.classify_pair(t1, t2)
    return _pykernel.classify_pair(t1, t2)
