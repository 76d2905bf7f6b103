"""Pure-Python face-pair kernel; same interface as the compiled ``_kernel``."""
from vtpoly.geometry import triangle_intersection_class


def classify_pair(t1, t2) -> int:
    return int(triangle_intersection_class(t1, t2))


def _expected(f, g) -> int:
    return len(set(f) & set(g))


def first_bad_pair(coords, faces):
    """First face pair ``(i, j, class)`` whose geometric intersection is not
    the cell the two faces share in the map, or None."""
    tris = [tuple(coords[v] for v in f) for f in faces]
    for i in range(len(faces)):
        for j in range(i + 1, len(faces)):
            cls = int(triangle_intersection_class(tris[i], tris[j]))
            if cls != _expected(faces[i], faces[j]):
                return i, j, cls
    return None


def pair_classes(coords, faces) -> list[int]:
    tris = [tuple(coords[v] for v in f) for f in faces]
    return [int(triangle_intersection_class(tris[i], tris[j]))
            for i in range(len(faces)) for j in range(i + 1, len(faces))]
