"""Constructors for the small rings used by the corpus and the fuzzer."""
from ..finring import product, span_closure, validate


def monogenic(n, coeffs, name=None):
    """Z/n[t]/(f) with f = t^d + coeffs[d-1] t^(d-1) + ... + coeffs[0], power basis."""
    d = len(coeffs)
    reduce_by = [(-c) % n for c in coeffs]  # t^d = sum reduce_by[k] t^k

    def times_t(v):
        top = v[-1]
        shifted = [0] + v[:-1]
        return [(s + top * r) % n for s, r in zip(shifted, reduce_by)]

    powers = [[1 if k == i else 0 for k in range(d)] for i in range(d)]
    for _ in range(d, 2 * d - 1):
        powers.append(times_t(powers[-1]))
    mul = [[powers[i + j] for j in range(d)] for i in range(d)]
    unit = [1] + [0] * (d - 1)
    return validate(n, mul, unit, name=name)


def residue_ring(n, name=None):
    return validate(n, [[[1]]], [1], name=name or f"Z/{n}")


def galois_field(p, k, name=None):
    """F_{p^k} as Z/p[t]/(f) for the first monic irreducible f of degree k."""
    if k == 1:
        return residue_ring(p, name=name or f"F{p}")
    f = _first_irreducible(p, k)
    return monogenic(p, f, name=name or f"F{p ** k}")


def _first_irreducible(p, k):
    from itertools import product as cartesian

    for tail in cartesian(range(p), repeat=k):
        coeffs = list(tail)  # low to high, monic of degree k
        if coeffs[0] == 0:
            continue
        if not any(_has_factor(p, coeffs, deg) for deg in range(1, k // 2 + 1)):
            return coeffs
    raise ValueError("no irreducible polynomial found")


def _polymod(p, a, m):
    a = a[:]
    while len(a) >= len(m):
        c = a[-1]
        if c:
            shift = len(a) - len(m)
            for i, x in enumerate(m):
                a[shift + i] = (a[shift + i] - c * x) % p
        a.pop()
    return a


def _has_factor(p, coeffs, deg):
    from itertools import product as cartesian

    f = coeffs + [1]
    for tail in cartesian(range(p), repeat=deg):
        g = list(tail) + [1]
        if not any(_polymod(p, f, g)):
            return True
    return False


def truncated(n, k, name=None):
    """Z/n[t]/(t^k)."""
    return monogenic(n, [0] * k, name=name)


def square_zero(n, k, name=None):
    """Z/n + (Z/n)^k with all products of the last k basis vectors zero."""
    d = k + 1
    mul = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        mul[0][i][i] = 1
        mul[i][0][i] = 1
    return validate(n, mul, [1] + [0] * k, name=name)


def tensor(A, B, name=None):
    """A tensor B over a common Z/n, basis a_i (x) b_j in row-major order."""
    if A.n != B.n:
        raise ValueError("tensor factors need the same base modulus")
    n, da, db = A.n, A.d, B.d
    d = da * db
    mul = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i1 in range(da):
        for j1 in range(db):
            for i2 in range(da):
                for j2 in range(db):
                    ca = A.mul_table[i1][i2]
                    cb = B.mul_table[j1][j2]
                    mul[i1 * db + j1][i2 * db + j2] = [
                        (ca[k] * cb[l]) % n for k in range(da) for l in range(db)
                    ]
    unit = [(A.unit[k] * B.unit[l]) % n for k in range(da) for l in range(db)]
    return validate(n, mul, unit, name=name)


def power(A, k, name=None):
    P = A
    for _ in range(k - 1):
        P = product(P, A)
    return validate(P.n, P.mul_table, P.unit, name=name)


def diagonal_field(p, k, name=None):
    """F_p^k with orthogonal idempotent basis."""
    return power(residue_ring(p), k, name=name or f"F{p}^{k}")


def prime_extension(S, name=None):
    """The extension (prime subring of S) inside S."""
    from ..finring import Extension

    return Extension(S, span_closure(S, []), name=name or S.name)
