"""Howell normal form of submodules of (Z/n)^d.

Two generating sets span the same submodule exactly when their Howell
forms coincide, so the form doubles as a hashable key.
"""
from math import gcd


def _egcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def unit_normalizer(a, n):
    """Return a unit u of Z/n with u*a = gcd(a, n) (mod n)."""
    g = gcd(a, n)
    n1 = n // g
    inv = pow(a // g, -1, n1) if n1 > 1 else 0
    for k in range(g):
        u = inv + k * n1
        if gcd(u, n) == 1:
            return u
    raise ArithmeticError(f"no unit normalizer for {a} mod {n}")


def howell_form(rows, n, d):
    """Canonical generating matrix of the span of ``rows`` in (Z/n)^d.

    Rows are returned as a tuple of tuples in echelon order with pivots
    dividing n, entries above each pivot reduced modulo it, and the Howell
    saturation property, which makes the form unique.
    """
    work = []
    for r in rows:
        r = [x % n for x in r]
        if any(r):
            work.append(r)
    out = []
    for col in range(d):
        pivot = None
        rest = []
        for r in work:
            a = r[col]
            if a == 0:
                rest.append(r)
            elif pivot is None:
                pivot = r
            else:
                p = pivot[col]
                g, s, t = _egcd(p, a)
                ap, pp = a // g, p // g
                pivot, other = (
                    [(s * x + t * y) % n for x, y in zip(pivot, r)],
                    [(ap * x - pp * y) % n for x, y in zip(pivot, r)],
                )
                if any(other):
                    rest.append(other)
        if pivot is not None:
            u = unit_normalizer(pivot[col], n)
            if u != 1:
                pivot = [(u * x) % n for x in pivot]
            ann = [((n // pivot[col]) * x) % n for x in pivot]
            if any(ann):
                rest.append(ann)
            out.append((col, pivot))
        work = rest
    for i, (ci, ri) in enumerate(out):
        g = ri[ci]
        for k in range(i):
            rk = out[k][1]
            q = rk[ci] // g
            if q:
                out[k] = (out[k][0], [(x - q * y) % n for x, y in zip(rk, ri)])
    return tuple(tuple(r) for _, r in out)


def pivots(form):
    """Pivot (column, entry) of each row of a Howell form."""
    res = []
    for row in form:
        for c, x in enumerate(row):
            if x:
                res.append((c, x))
                break
    return res


def form_size(form, n):
    """Number of elements of the submodule with Howell form ``form``."""
    size = 1
    for _, g in pivots(form):
        size *= n // g
    return size


def in_span(form, vecs, n):
    """Boolean array: which rows of the integer array ``vecs`` lie in the span of ``form``."""
    import numpy as np

    V = np.array(vecs, dtype=np.int64, copy=True) % n
    ok = np.ones(len(V), dtype=bool)
    for row, (c, g) in zip(form, pivots(form)):
        col = V[:, c]
        ok &= col % g == 0
        V = (V - (col // g)[:, None] * np.array(row, dtype=np.int64)) % n
    return ok & ~V.any(axis=1)
