# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels on int64 corner arrays; same semantics as _kernels_py.

Callers must keep every coordinate below 2**30 in absolute value so that
sums and orientation products fit in 64 bits.
"""
from libc.stdlib cimport malloc, free, qsort
from libc.stdint cimport int64_t


cdef struct pt:
    int64_t a
    int64_t b


cdef int _cmp(const void* x, const void* y) noexcept nogil:
    cdef const pt* p = <const pt*>x
    cdef const pt* q = <const pt*>y
    if p.a != q.a:
        return -1 if p.a < q.a else 1
    if p.b != q.b:
        return -1 if p.b < q.b else 1
    return 0


cdef Py_ssize_t _canon_inplace(pt* buf, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i, k = 0
    cdef int64_t best = 0
    qsort(buf, n, sizeof(pt), _cmp)
    for i in range(n):
        if k == 0 or buf[i].b < best:
            buf[k] = buf[i]
            best = buf[i].b
            k += 1
    return k


cdef pt* _load(object points, Py_ssize_t* n):
    cdef Py_ssize_t m = len(points), i = 0
    cdef pt* buf = <pt*>malloc((m if m > 0 else 1) * sizeof(pt))
    if buf == NULL:
        raise MemoryError()
    for p in points:
        buf[i].a = p[0]
        buf[i].b = p[1]
        i += 1
    n[0] = m
    return buf


cdef list _dump(pt* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    return [(buf[i].a, buf[i].b) for i in range(n)]


def canonicalize(points):
    cdef Py_ssize_t n
    cdef pt* buf = _load(points, &n)
    try:
        return _dump(buf, _canon_inplace(buf, n))
    finally:
        free(buf)


def staircase_mul(xs, ys):
    cdef Py_ssize_t nx, ny, i, j, k = 0
    cdef pt* bx = _load(xs, &nx)
    cdef pt* by = NULL
    cdef pt* buf = NULL
    try:
        by = _load(ys, &ny)
        buf = <pt*>malloc((nx * ny if nx * ny > 0 else 1) * sizeof(pt))
        if buf == NULL:
            raise MemoryError()
        with nogil:
            for i in range(nx):
                for j in range(ny):
                    buf[k].a = bx[i].a + by[j].a
                    buf[k].b = bx[i].b + by[j].b
                    k += 1
            k = _canon_inplace(buf, k)
        return _dump(buf, k)
    finally:
        free(bx)
        free(by)
        free(buf)


cdef inline int64_t _cross(pt o, pt p, pt r) noexcept nogil:
    return (p.a - o.a) * (r.b - o.b) - (p.b - o.b) * (r.a - o.a)


def lower_hull(corners):
    cdef Py_ssize_t n, i, k = 0
    cdef pt* buf = _load(corners, &n)
    try:
        with nogil:
            for i in range(n):
                while k >= 2 and _cross(buf[k - 2], buf[k - 1], buf[i]) <= 0:
                    k -= 1
                buf[k] = buf[i]
                k += 1
        return _dump(buf, k)
    finally:
        free(buf)


def polygon_mul(xs, ys):
    cdef Py_ssize_t nx, ny, i = 0, j = 0, k = 1
    cdef pt* bx = _load(xs, &nx)
    cdef pt* by = NULL
    cdef pt* out = NULL
    cdef int64_t ex, ey, fx, fy, cross, dx, dy
    try:
        by = _load(ys, &ny)
        out = <pt*>malloc((nx + ny) * sizeof(pt))
        if out == NULL:
            raise MemoryError()
        with nogil:
            out[0].a = bx[0].a + by[0].a
            out[0].b = bx[0].b + by[0].b
            while i < nx - 1 or j < ny - 1:
                if j == ny - 1:
                    dx = bx[i + 1].a - bx[i].a
                    dy = bx[i + 1].b - bx[i].b
                    i += 1
                elif i == nx - 1:
                    dx = by[j + 1].a - by[j].a
                    dy = by[j + 1].b - by[j].b
                    j += 1
                else:
                    ex = bx[i + 1].a - bx[i].a
                    ey = bx[i + 1].b - bx[i].b
                    fx = by[j + 1].a - by[j].a
                    fy = by[j + 1].b - by[j].b
                    cross = ex * fy - ey * fx
                    if cross > 0:
                        dx, dy = ex, ey
                        i += 1
                    elif cross < 0:
                        dx, dy = fx, fy
                        j += 1
                    else:
                        dx, dy = ex + fx, ey + fy
                        i += 1
                        j += 1
                out[k].a = out[k - 1].a + dx
                out[k].b = out[k - 1].b + dy
                k += 1
        return _dump(out, k)
    finally:
        free(bx)
        free(by)
        free(out)
