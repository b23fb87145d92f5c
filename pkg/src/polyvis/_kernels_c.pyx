# cython: language_level=3
"""Compiled exact-arithmetic kernels for polygon visibility.

Mirrors the pure-Python kernel contract over C int64 arithmetic.  Callers must
keep coordinate magnitudes below 2**29 so every intermediate product fits in
int64 (the dispatcher enforces this and falls back to the pure kernel).
"""

from libc.stdlib cimport free, malloc


cdef inline long long _orient(long long ax, long long ay, long long bx,
                              long long by, long long cx, long long cy) nogil:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


cdef inline bint _on_open_segment(long long px, long long py, long long qx,
                                  long long qy, long long rx, long long ry) nogil:
    if _orient(px, py, qx, qy, rx, ry) != 0:
        return False
    if px != qx:
        if px < qx:
            return px < rx < qx
        return qx < rx < px
    if py < qy:
        return py < ry < qy
    return qy < ry < py


cdef inline bint _proper_cross(long long px, long long py, long long qx,
                               long long qy, long long ax, long long ay,
                               long long bx, long long by) nogil:
    cdef long long d1 = _orient(ax, ay, bx, by, px, py)
    cdef long long d2 = _orient(ax, ay, bx, by, qx, qy)
    cdef long long d3, d4
    if d1 == 0 or d2 == 0 or (d1 > 0) == (d2 > 0):
        return False
    d3 = _orient(px, py, qx, qy, ax, ay)
    d4 = _orient(px, py, qx, qy, bx, by)
    return d3 != 0 and d4 != 0 and (d3 > 0) != (d4 > 0)


cdef bint _point_inside_doubled(long long* xs, long long* ys, Py_ssize_t n,
                                long long qx, long long qy) nogil:
    cdef Py_ssize_t k
    cdef long long ax, ay, bx, by, jx, jy, kx, ky, t
    cdef bint inside = False
    for k in range(n):
        ax = 2 * xs[k]
        ay = 2 * ys[k]
        bx = 2 * xs[(k + 1) % n]
        by = 2 * ys[(k + 1) % n]
        if (qx == ax and qy == ay) or _on_open_segment(ax, ay, bx, by, qx, qy):
            return False
    jx = 2 * xs[n - 1]
    jy = 2 * ys[n - 1]
    for k in range(n):
        kx = 2 * xs[k]
        ky = 2 * ys[k]
        if (jy > qy) != (ky > qy):
            t = (kx - jx) * (qy - jy) - (qx - jx) * (ky - jy)
            if ky > jy:
                if t > 0:
                    inside = not inside
            else:
                if t < 0:
                    inside = not inside
        jx = kx
        jy = ky
    return inside


cdef bint _segment_visible(long long* xs, long long* ys, Py_ssize_t n,
                           Py_ssize_t i, Py_ssize_t j) nogil:
    cdef Py_ssize_t k, a, b
    cdef long long px = xs[i], py = ys[i], qx = xs[j], qy = ys[j]
    if i == j:
        return False
    if (i + 1) % n == j or (j + 1) % n == i:
        return True
    for k in range(n):
        if k == i or k == j:
            continue
        if _on_open_segment(px, py, qx, qy, xs[k], ys[k]):
            return False
    for a in range(n):
        b = (a + 1) % n
        if a == i or a == j or b == i or b == j:
            continue
        if _proper_cross(px, py, qx, qy, xs[a], ys[a], xs[b], ys[b]):
            return False
    return _point_inside_doubled(xs, ys, n, px + qx, py + qy)


cdef long long* _copy_coords(object coords, Py_ssize_t n, bint ys) except NULL:
    cdef long long* arr = <long long*> malloc(n * sizeof(long long))
    cdef Py_ssize_t k
    if arr == NULL:
        raise MemoryError()
    for k in range(n):
        arr[k] = coords[k][1 if ys else 0]
    return arr


def segment_visible(coords, Py_ssize_t i, Py_ssize_t j):
    """Exact visibility predicate between polygon vertices i and j."""
    cdef Py_ssize_t n = len(coords)
    cdef long long* xs = _copy_coords(coords, n, False)
    cdef long long* ys = _copy_coords(coords, n, True)
    try:
        return bool(_segment_visible(xs, ys, n, i, j))
    finally:
        free(xs)
        free(ys)


def visibility_edges(coords):
    """All visible vertex pairs (i < j), sorted."""
    cdef Py_ssize_t n = len(coords)
    cdef Py_ssize_t i, j
    cdef long long* xs = _copy_coords(coords, n, False)
    cdef long long* ys = _copy_coords(coords, n, True)
    out = []
    try:
        for i in range(n):
            for j in range(i + 1, n):
                if _segment_visible(xs, ys, n, i, j):
                    out.append((i, j))
        return out
    finally:
        free(xs)
        free(ys)


def has_collinear_triple(coords):
    """True iff any three distinct vertices are collinear."""
    cdef Py_ssize_t n = len(coords)
    cdef Py_ssize_t i, j, k
    cdef bint hit = False
    cdef long long* xs = _copy_coords(coords, n, False)
    cdef long long* ys = _copy_coords(coords, n, True)
    try:
        for i in range(n):
            if hit:
                break
            for j in range(i + 1, n):
                if hit:
                    break
                for k in range(j + 1, n):
                    if _orient(xs[i], ys[i], xs[j], ys[j], xs[k], ys[k]) == 0:
                        hit = True
                        break
        return bool(hit)
    finally:
        free(xs)
        free(ys)
