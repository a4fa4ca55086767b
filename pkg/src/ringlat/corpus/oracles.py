"""Brute-force and symbolic oracles, independent of the enumeration code.

They share no code with the Howell-form / closure machinery: subrings are
plain frozensets of coordinate tuples and products come straight from the
structure constants.
"""
from functools import lru_cache
from itertools import product as cartesian


def set_partitions(n):
    """All partitions of range(n), each a tuple of sorted blocks."""
    if n == 0:
        return [()]
    out = []
    for part in set_partitions(n - 1):
        for k in range(len(part)):
            blocks = list(part)
            blocks[k] = blocks[k] + (n - 1,)
            out.append(tuple(blocks))
        out.append(part + ((n - 1,),))
    return out


def bell(n):
    return len(set_partitions(n))


def divisors(k):
    return [d for d in range(1, k + 1) if k % d == 0]


def divisor_lattice(k):
    """(node count, chained, modular) of the divisor lattice of k."""
    ds = divisors(k)
    chained = all(a % b == 0 or b % a == 0 for a in ds for b in ds)
    # divisor lattices are distributive, hence modular; checked directly anyway
    from math import gcd

    def lcm(a, b):
        return a * b // gcd(a, b)

    modular = all(
        gcd(a, lcm(b, c)) == lcm(b, gcd(a, c))
        for a in ds for b in ds for c in ds if a % b == 0
    )
    return len(ds), chained, modular


@lru_cache(maxsize=None)
def quartic_order_constants():
    """Structure constants of the order with Z-basis 1, sqrt7, (sqrt7+i)/2, (1+i sqrt7)/2.

    Products are expanded symbolically and rewritten in the basis; returns
    the integer table c[i][j] (a list of coordinate lists).
    """
    import sympy as sp

    r7, i = sp.sqrt(7), sp.I
    basis = [sp.Integer(1), r7, (r7 + i) / 2, (1 + i * r7) / 2]
    monomials = [sp.Integer(1), r7, i, i * r7]

    def rational_coords(expr):
        expr = sp.expand(expr)
        parts = expr.as_coefficients_dict()
        return [sp.Rational(parts.get(m, 0)) for m in monomials]

    change = sp.Matrix([rational_coords(b) for b in basis]).T  # columns = basis
    table = []
    for a in basis:
        row = []
        for b in basis:
            coords = change.solve(sp.Matrix(rational_coords(a * b)))
            if any(not c.is_integer for c in coords):
                raise ArithmeticError("basis does not span a ring")
            row.append([int(c) for c in coords])
        table.append(row)
    return table


def _mul(S, a, b):
    n, d = S.n, S.d
    out = [0] * d
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if not y:
                continue
            c = S.mul_table[i][j]
            for k in range(d):
                out[k] += x * y * c[k]
    return tuple(v % n for v in out)


def _add(n, a, b):
    return tuple((x + y) % n for x, y in zip(a, b))


def _span_with(n, W, x):
    out = set(W)
    frontier = list(W)
    step = x
    while True:
        shifted = {_add(n, w, step) for w in frontier}
        if shifted <= out:
            return frozenset(out)
        out |= shifted
        step = _add(n, step, x)


def intermediate_rings(S, R_elements):
    """Every subring of S containing R, by enumerating additive subgroups.

    Exhaustive and slow; meant for |S| up to a few hundred.
    """
    n = S.n
    everything = [tuple(v) for v in cartesian(range(n), repeat=S.d)]
    start = frozenset(tuple(v) for v in R_elements)
    seen = {start}
    stack = [start]
    while stack:
        W = stack.pop()
        for x in everything:
            if x in W:
                continue
            V = _span_with(n, W, x)
            if V not in seen:
                seen.add(V)
                stack.append(V)
    unit = tuple(S.unit)
    return [
        W for W in seen
        if unit in W and all(_mul(S, a, b) in W for a in W for b in W)
    ]


def lattice_summary(S, R_elements):
    """(node count, length, T + U always a ring) for the interval, by brute force."""
    nodes = sorted(intermediate_rings(S, R_elements), key=len)
    below = {W: [V for V in nodes if V < W] for W in nodes}
    longest = {}
    for W in nodes:
        longest[W] = max((longest[V] + 1 for V in below[W]), default=0)
    node_set = set(nodes)
    n = S.n
    delta = all(
        frozenset(_add(n, a, b) for a in A for b in B) in node_set
        for A in nodes for B in nodes
    )
    return len(nodes), longest[nodes[-1]], delta
