# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled face-pair kernel.

Coordinates must satisfy |x| <= 2**40 so that every orientation
determinant fits in a signed 128-bit integer.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

from vtpoly.geometry import DegenerateTriangle

cdef extern from *:
    ctypedef long long i128 "__int128"

cdef enum:
    DISJOINT = 0
    SHARED_VERTEX = 1
    SHARED_EDGE = 2
    NONTRIVIAL = 3
    DEGENERATE = -1

LIMIT = 2 ** 40


cdef inline int sgn(i128 x) nogil:
    return (x > 0) - (x < 0)


cdef inline int orient3d(const int64_t* a, const int64_t* b, const int64_t* c,
                         const int64_t* d) nogil:
    cdef i128 bx = <i128>b[0] - a[0], by = <i128>b[1] - a[1], bz = <i128>b[2] - a[2]
    cdef i128 cx = <i128>c[0] - a[0], cy = <i128>c[1] - a[1], cz = <i128>c[2] - a[2]
    cdef i128 dx = <i128>d[0] - a[0], dy = <i128>d[1] - a[1], dz = <i128>d[2] - a[2]
    return sgn(bx * (cy * dz - cz * dy) - by * (cx * dz - cz * dx) + bz * (cx * dy - cy * dx))


cdef inline int orient2d(const int64_t* a, const int64_t* b, const int64_t* c,
                         int i, int j) nogil:
    cdef i128 v = (<i128>b[i] - a[i]) * (<i128>c[j] - a[j]) - (<i128>b[j] - a[j]) * (<i128>c[i] - a[i])
    return sgn(v)


cdef inline i128 iabs(i128 x) nogil:
    return -x if x < 0 else x


cdef void normal(const int64_t* a, const int64_t* b, const int64_t* c, i128* n) nogil:
    cdef i128 ux = <i128>b[0] - a[0], uy = <i128>b[1] - a[1], uz = <i128>b[2] - a[2]
    cdef i128 vx = <i128>c[0] - a[0], vy = <i128>c[1] - a[1], vz = <i128>c[2] - a[2]
    n[0] = uy * vz - uz * vy
    n[1] = uz * vx - ux * vz
    n[2] = ux * vy - uy * vx


cdef inline void projection(const int64_t** t, int* i, int* j) nogil:
    cdef i128 n[3]
    normal(t[0], t[1], t[2], n)
    cdef int k = 0
    if iabs(n[1]) > iabs(n[k]):
        k = 1
    if iabs(n[2]) > iabs(n[k]):
        k = 2
    if k == 0:
        i[0] = 1; j[0] = 2
    elif k == 1:
        i[0] = 0; j[0] = 2
    else:
        i[0] = 0; j[0] = 1


cdef inline bint degenerate(const int64_t** t) nogil:
    cdef i128 n[3]
    normal(t[0], t[1], t[2], n)
    return n[0] == 0 and n[1] == 0 and n[2] == 0


cdef inline bint on_segment(const int64_t* p, const int64_t* q, const int64_t* r,
                            int i, int j) nogil:
    return (min(p[i], q[i]) <= r[i] <= max(p[i], q[i])
            and min(p[j], q[j]) <= r[j] <= max(p[j], q[j]))


cdef bint segments_meet_2d(const int64_t* p1, const int64_t* p2, const int64_t* q1,
                           const int64_t* q2, int i, int j) nogil:
    cdef int d1 = orient2d(q1, q2, p1, i, j)
    cdef int d2 = orient2d(q1, q2, p2, i, j)
    cdef int d3 = orient2d(p1, p2, q1, i, j)
    cdef int d4 = orient2d(p1, p2, q2, i, j)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return ((d1 == 0 and on_segment(q1, q2, p1, i, j))
            or (d2 == 0 and on_segment(q1, q2, p2, i, j))
            or (d3 == 0 and on_segment(p1, p2, q1, i, j))
            or (d4 == 0 and on_segment(p1, p2, q2, i, j)))


cdef bint point_in_triangle_2d(const int64_t* p, const int64_t** t, int i, int j) nogil:
    cdef int o = orient2d(t[0], t[1], t[2], i, j)
    return (orient2d(t[0], t[1], p, i, j) * o >= 0
            and orient2d(t[1], t[2], p, i, j) * o >= 0
            and orient2d(t[2], t[0], p, i, j) * o >= 0)


cdef bint segment_meets_triangle(const int64_t* s, const int64_t* e, const int64_t** t) nogil:
    cdef int os_ = orient3d(t[0], t[1], t[2], s)
    cdef int oe = orient3d(t[0], t[1], t[2], e)
    cdef int i, j, d1, d2, d3
    if os_ * oe > 0:
        return False
    if os_ == 0 and oe == 0:
        projection(t, &i, &j)
        return (point_in_triangle_2d(s, t, i, j) or point_in_triangle_2d(e, t, i, j)
                or segments_meet_2d(s, e, t[0], t[1], i, j)
                or segments_meet_2d(s, e, t[1], t[2], i, j)
                or segments_meet_2d(s, e, t[2], t[0], i, j))
    d1 = orient3d(s, e, t[0], t[1])
    d2 = orient3d(s, e, t[1], t[2])
    d3 = orient3d(s, e, t[2], t[0])
    return not ((d1 > 0 or d2 > 0 or d3 > 0) and (d1 < 0 or d2 < 0 or d3 < 0))


cdef bint enters(const int64_t** t, int k, const int64_t* r) nogil:
    cdef int i, j, o
    if orient3d(t[0], t[1], t[2], r) != 0:
        return False
    cdef const int64_t* p = t[k]
    cdef const int64_t* b1 = t[(k + 1) % 3]
    cdef const int64_t* b2 = t[(k + 2) % 3]
    projection(t, &i, &j)
    o = orient2d(p, b1, b2, i, j)
    return orient2d(p, b1, r, i, j) * o >= 0 and orient2d(p, r, b2, i, j) * o >= 0


cdef inline bint same_point(const int64_t* a, const int64_t* b) nogil:
    return a[0] == b[0] and a[1] == b[1] and a[2] == b[2]


cdef bint edges_escape(const int64_t** t1, const int64_t** t2, const int* shared) nogil:
    # shared[u] is the corner of t2 equal to corner u of t1, or -1
    cdef int e, u, w
    for e in range(3):
        u = e
        w = (e + 1) % 3
        if shared[u] >= 0 and shared[w] >= 0:
            continue
        if shared[u] >= 0:
            if enters(t2, shared[u], t1[w]):
                return True
        elif shared[w] >= 0:
            if enters(t2, shared[w], t1[u]):
                return True
        elif segment_meets_triangle(t1[u], t1[w], t2):
            return True
    return False


cdef int classify(const int64_t** t1, const int64_t** t2) nogil:
    cdef int s12[3]
    cdef int s21[3]
    cdef int i, j, count = 0
    if degenerate(t1) or degenerate(t2):
        return DEGENERATE
    for i in range(3):
        s12[i] = -1
        s21[i] = -1
    for i in range(3):
        for j in range(3):
            if same_point(t1[i], t2[j]):
                s12[i] = j
                s21[j] = i
                count += 1
    if count >= 3:
        return NONTRIVIAL
    if edges_escape(t1, t2, s12) or edges_escape(t2, t1, s21):
        return NONTRIVIAL
    return count


cdef int64_t* _pack(coords) except NULL:
    cdef Py_ssize_t n = len(coords), k
    cdef int64_t* buf = <int64_t*>malloc(3 * max(n, 1) * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    try:
        for k in range(n):
            x, y, z = coords[k]
            if abs(x) > LIMIT or abs(y) > LIMIT or abs(z) > LIMIT:
                raise OverflowError("coordinate exceeds kernel limit")
            buf[3 * k] = x
            buf[3 * k + 1] = y
            buf[3 * k + 2] = z
    except BaseException:
        free(buf)
        raise
    return buf


def classify_pair(t1, t2):
    cdef int64_t* buf = _pack(list(t1) + list(t2))
    cdef const int64_t* a[3]
    cdef const int64_t* b[3]
    cdef int k, cls
    for k in range(3):
        a[k] = buf + 3 * k
        b[k] = buf + 9 + 3 * k
    cls = classify(a, b)
    free(buf)
    if cls == DEGENERATE:
        raise DegenerateTriangle("degenerate triangle")
    return cls


cdef int _fill_faces(faces, int* fv) except -1:
    cdef Py_ssize_t k
    for k in range(len(faces)):
        f = faces[k]
        if len(f) != 3:
            raise ValueError("kernel handles triangular faces only")
        fv[3 * k] = f[0]
        fv[3 * k + 1] = f[1]
        fv[3 * k + 2] = f[2]
    return 0


def first_bad_pair(coords, faces):
    """First face pair ``(i, j, class)`` whose geometric intersection is not
    the cell the two faces share in the map, or None."""
    cdef Py_ssize_t nf = len(faces)
    cdef int64_t* buf = _pack(coords)
    cdef int* fv = <int*>malloc(3 * max(nf, 1) * sizeof(int))
    cdef const int64_t* a[3]
    cdef const int64_t* b[3]
    cdef Py_ssize_t i, j, bad_i = -1, bad_j = -1
    cdef int k, l, expected, cls, bad_cls = 0
    try:
        _fill_faces(faces, fv)
        with nogil:
            for i in range(nf):
                for j in range(i + 1, nf):
                    expected = 0
                    for k in range(3):
                        a[k] = buf + 3 * fv[3 * i + k]
                        b[k] = buf + 3 * fv[3 * j + k]
                        for l in range(3):
                            if fv[3 * i + k] == fv[3 * j + l]:
                                expected += 1
                    cls = classify(a, b)
                    if cls != expected:
                        bad_i, bad_j, bad_cls = i, j, cls
                        break
                if bad_i >= 0:
                    break
    finally:
        free(buf)
        free(fv)
    if bad_i < 0:
        return None
    if bad_cls == DEGENERATE:
        raise DegenerateTriangle("degenerate triangle")
    return (bad_i, bad_j, bad_cls)


def pair_classes(coords, faces):
    cdef Py_ssize_t nf = len(faces)
    cdef int64_t* buf = _pack(coords)
    cdef int* fv = <int*>malloc(3 * max(nf, 1) * sizeof(int))
    cdef const int64_t* a[3]
    cdef const int64_t* b[3]
    cdef Py_ssize_t i, j
    cdef int k, cls
    out = []
    try:
        _fill_faces(faces, fv)
        for i in range(nf):
            for j in range(i + 1, nf):
                for k in range(3):
                    a[k] = buf + 3 * fv[3 * i + k]
                    b[k] = buf + 3 * fv[3 * j + k]
                cls = classify(a, b)
                if cls == DEGENERATE:
                    raise DegenerateTriangle("degenerate triangle")
                out.append(cls)
    finally:
        free(buf)
        free(fv)
    return out
