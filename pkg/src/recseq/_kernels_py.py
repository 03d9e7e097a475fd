"""Pure-Python modular kernels: the fallback backend.

Same calling conventions as the compiled ``_kernels_cy`` extension.  All
functions take and return plain Python ints reduced into ``[0, m)``; they
are deliberately free of the RingElem/Poly wrappers so the two backends
stay drop-in interchangeable.
"""

from __future__ import annotations

BACKEND_NAME = "python"

# Python ints never overflow, so any modulus works here.
MOD_LIMIT = None


def lin_terms_mod(hs: list[int], init: list[int], count: int, m: int) -> list[int]:
    """First ``count`` terms of a_n = sum_i h[i] * a_{n-1-i} (mod m)."""
    order = len(hs)
    if count <= order:
        return [v % m for v in init[:count]]
    out = [v % m for v in init]
    hs = [h % m for h in hs]
    for n in range(order, count):
        acc = 0
        for i in range(order):
            acc += hs[i] * out[n - 1 - i]
        out.append(acc % m)
    return out


def berkowitz_mod(entries: list[int], n: int, m: int) -> list[int]:
    """Characteristic polynomial det(tI - A) of an n x n matrix mod m.

    ``entries`` is the flat row-major matrix; the result is the coefficient
    list low-to-high (length n + 1, leading coefficient 1).  Division-free,
    so composite moduli are fine.
    """
    poly = [1 % m]
    for k in range(1, n + 1):
        top = n - k
        col = [1 % m, (-entries[top * n + top]) % m]
        if k >= 2:
            width = k - 1
            row_base = top * n + top + 1
            v = [entries[(top + 1 + i) * n + top] for i in range(width)]
            for j in range(k - 1):
                if j > 0:
                    w = []
                    for i in range(width):
                        base = (top + 1 + i) * n + top + 1
                        acc = 0
                        for l in range(width):
                            acc += entries[base + l] * v[l]
                        w.append(acc % m)
                    v = w
                acc = 0
                for i in range(width):
                    acc += entries[row_base + i] * v[i]
                col.append((-acc) % m)
        new = []
        plen = len(poly)
        for i in range(k + 1):
            acc = 0
            lo = i - k if i - k > 0 else 0
            hi = plen - 1 if plen - 1 < i else i
            for j in range(lo, hi + 1):
                acc += col[i - j] * poly[j]
            new.append(acc % m)
        poly = new
    poly.reverse()
    return poly


def conv_sum_mod(xs: list[int], ys: list[int], m: int) -> list[int]:
    """Termwise sum mod m."""
    return [(x + y) % m for x, y in zip(xs, ys)]


def conv_hadamard_mod(xs: list[int], ys: list[int], m: int) -> list[int]:
    """Termwise product mod m."""
    return [(x * y) % m for x, y in zip(xs, ys)]


def conv_cauchy_mod(xs: list[int], ys: list[int], m: int) -> list[int]:
    """Truncated convolution c_n = sum_i x_i y_{n-i} (mod m)."""
    out = []
    for n in range(len(xs)):
        acc = 0
        for i in range(n + 1):
            acc += xs[i] * ys[n - i]
        out.append(acc % m)
    return out


def conv_hurwitz_mod(xs: list[int], ys: list[int], m: int) -> list[int]:
    """Binomial convolution c_n = sum_i C(n,i) x_i y_{n-i} (mod m)."""
    length = len(xs)
    out = []
    row = [0] * length  # row[j] = C(n, j) mod m, updated in place
    if length:
        row[0] = 1 % m
    for n in range(length):
        if n > 0:
            for j in range(n, 0, -1):
                row[j] = (row[j] + row[j - 1]) % m
        acc = 0
        for i in range(n + 1):
            acc += row[i] * xs[i] % m * ys[n - i]
        out.append(acc % m)
    return out


def conv_newton_mod(xs: list[int], ys: list[int], m: int) -> list[int]:
    """Multinomial convolution c_n = sum_{i,j<=i} C(n,i) C(i,j) x_i y_{n-j} (mod m)."""
    length = len(xs)
    tri = [[1 % m]]
    for n in range(1, length):
        prev = tri[-1]
        row = [1 % m]
        row.extend((prev[i - 1] + prev[i]) % m for i in range(1, n))
        row.append(1 % m)
        tri.append(row)
    out = []
    for n in range(length):
        acc = 0
        trow = tri[n]
        for i in range(n + 1):
            irow = tri[i]
            inner = 0
            for j in range(i + 1):
                inner += irow[j] * ys[n - j]
            acc += trow[i] * xs[i] % m * (inner % m)
        out.append(acc % m)
    return out
