# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled modular kernels: the fast backend.

Mirrors ``_kernels_py`` exactly.  All arithmetic runs on C int64, which
restricts the modulus to ``MOD_LIMIT`` (products of two reduced residues
must fit in 63 bits); callers route larger moduli elsewhere.
"""

from libc.stdlib cimport calloc, free

BACKEND_NAME = "compiled"

MOD_LIMIT = 2147483647  # 2**31 - 1


cdef long long *_alloc(Py_ssize_t count) except NULL:
    cdef long long *buf = <long long *> calloc(count if count > 0 else 1, sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _fill(long long *buf, values, long long m):
    cdef Py_ssize_t i
    cdef long long v
    for i in range(len(values)):
        v = values[i]
        v %= m
        if v < 0:
            v += m
        buf[i] = v


def lin_terms_mod(hs, init, Py_ssize_t count, long long m):
    """First ``count`` terms of a_n = sum_i h[i] * a_{n-1-i} (mod m)."""
    cdef Py_ssize_t order = len(hs)
    cdef Py_ssize_t i, n
    cdef long long acc
    if count <= order:
        return [v % m for v in init[:count]]
    cdef long long *a = _alloc(count)
    cdef long long *h = _alloc(order)
    try:
        _fill(a, init, m)
        _fill(h, hs, m)
        for n in range(order, count):
            acc = 0
            for i in range(order):
                acc = (acc + h[i] * a[n - 1 - i]) % m
            a[n] = acc
        return [a[i] for i in range(count)]
    finally:
        free(a)
        free(h)


def berkowitz_mod(entries, Py_ssize_t n, long long m):
    """Characteristic polynomial det(tI - A) of an n x n matrix mod m.

    ``entries`` is the flat row-major matrix; the result is the coefficient
    list low-to-high (length n + 1, leading coefficient 1).
    """
    cdef Py_ssize_t k, top, width, i, j, l, lo, hi, plen
    cdef long long acc
    cdef long long *A = _alloc(n * n)
    cdef long long *poly = _alloc(n + 1)
    cdef long long *newp = _alloc(n + 1)
    cdef long long *col = _alloc(n + 1)
    cdef long long *v = _alloc(n)
    cdef long long *w = _alloc(n)
    cdef long long *tmp
    try:
        _fill(A, entries, m)
        poly[0] = 1 % m
        plen = 1
        for k in range(1, n + 1):
            top = n - k
            col[0] = 1 % m
            col[1] = (m - A[top * n + top]) % m
            width = k - 1
            if width > 0:
                for i in range(width):
                    v[i] = A[(top + 1 + i) * n + top]
                for j in range(width):
                    if j > 0:
                        for i in range(width):
                            acc = 0
                            for l in range(width):
                                acc = (acc + A[(top + 1 + i) * n + top + 1 + l] * v[l]) % m
                            w[i] = acc
                        tmp = v
                        v = w
                        w = tmp
                    acc = 0
                    for i in range(width):
                        acc = (acc + A[top * n + top + 1 + i] * v[i]) % m
                    col[2 + j] = (m - acc) % m
            for i in range(k + 1):
                acc = 0
                lo = i - k if i - k > 0 else 0
                hi = plen - 1 if plen - 1 < i else i
                for j in range(lo, hi + 1):
                    acc = (acc + col[i - j] * poly[j]) % m
                newp[i] = acc
            tmp = poly
            poly = newp
            newp = tmp
            plen = k + 1
        return [poly[n - i] for i in range(n + 1)]
    finally:
        free(A)
        free(poly)
        free(newp)
        free(col)
        free(v)
        free(w)


def conv_sum_mod(xs, ys, long long m):
    """Termwise sum mod m."""
    return [(x + y) % m for x, y in zip(xs, ys)]


def conv_hadamard_mod(xs, ys, long long m):
    """Termwise product mod m."""
    cdef Py_ssize_t n, length = len(xs)
    cdef long long *x = _alloc(length)
    cdef long long *y = _alloc(length)
    try:
        _fill(x, xs, m)
        _fill(y, ys, m)
        return [(x[n] * y[n]) % m for n in range(length)]
    finally:
        free(x)
        free(y)


def conv_cauchy_mod(xs, ys, long long m):
    """Truncated convolution c_n = sum_i x_i y_{n-i} (mod m)."""
    cdef Py_ssize_t n, i, length = len(xs)
    cdef long long acc
    cdef long long *x = _alloc(length)
    cdef long long *y = _alloc(length)
    try:
        _fill(x, xs, m)
        _fill(y, ys, m)
        out = []
        for n in range(length):
            acc = 0
            for i in range(n + 1):
                acc = (acc + x[i] * y[n - i]) % m
            out.append(acc)
        return out
    finally:
        free(x)
        free(y)


def conv_hurwitz_mod(xs, ys, long long m):
    """Binomial convolution c_n = sum_i C(n,i) x_i y_{n-i} (mod m)."""
    cdef Py_ssize_t n, i, j, length = len(xs)
    cdef long long acc
    cdef long long *x = _alloc(length)
    cdef long long *y = _alloc(length)
    cdef long long *row = _alloc(length)
    try:
        _fill(x, xs, m)
        _fill(y, ys, m)
        if length:
            row[0] = 1 % m
        out = []
        for n in range(length):
            if n > 0:
                for j in range(n, 0, -1):
                    row[j] = (row[j] + row[j - 1]) % m
            acc = 0
            for i in range(n + 1):
                acc = (acc + ((row[i] * x[i]) % m) * y[n - i]) % m
            out.append(acc)
        return out
    finally:
        free(x)
        free(y)
        free(row)


def conv_newton_mod(xs, ys, long long m):
    """Multinomial convolution c_n = sum_{i,j<=i} C(n,i) C(i,j) x_i y_{n-j} (mod m)."""
    cdef Py_ssize_t n, i, j, length = len(xs)
    cdef long long acc, inner
    cdef long long *x = _alloc(length)
    cdef long long *y = _alloc(length)
    # flat Pascal triangle: row n starts at n*(n+1)/2
    cdef long long *tri = _alloc(length * (length + 1) // 2)
    cdef Py_ssize_t off_n, off_i, off_prev
    try:
        _fill(x, xs, m)
        _fill(y, ys, m)
        if length:
            tri[0] = 1 % m
        for n in range(1, length):
            off_n = n * (n + 1) // 2
            off_prev = off_n - n
            tri[off_n] = 1 % m
            for j in range(1, n):
                tri[off_n + j] = (tri[off_prev + j - 1] + tri[off_prev + j]) % m
            tri[off_n + n] = 1 % m
        out = []
        for n in range(length):
            off_n = n * (n + 1) // 2
            acc = 0
            for i in range(n + 1):
                off_i = i * (i + 1) // 2
                inner = 0
                for j in range(i + 1):
                    inner = (inner + tri[off_i + j] * y[n - j]) % m
                acc = (acc + ((tri[off_n + i] * x[i]) % m) * inner) % m
            out.append(acc)
        return out
    finally:
        free(x)
        free(y)
        free(tri)
