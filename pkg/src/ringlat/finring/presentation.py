"""Re-presenting factor rings and quotients as RingTables, plus products."""
from dataclasses import dataclass
from math import gcd

import numpy as np

from ..errors import NotFree, NotSharedIdeal
from .structure import is_ideal_of, local_idempotent, maximal_ideals
from .submodule import Submodule, Subring, from_codes, span_closure
from .table import RingTable, validate


class Projection:
    """A ring map from ``source`` onto a presented ring ``target``.

    ``factor`` (an element code of the source) is multiplied in first; this
    is how x maps to e x when passing to the factor ring eS.
    """

    def __init__(self, source, target, tcode, lifts, factor=None):
        self.source = source
        self.target = target
        self._tcode = tcode
        self._lifts = lifts
        self.factor = factor

    def _codes(self, codes):
        codes = np.asarray(codes, dtype=np.int64)
        if self.factor is not None:
            codes = self.source.mtab[self.factor, codes].astype(np.int64)
        out = self._tcode[codes]
        if (out < 0).any():
            raise ValueError("element outside the domain of the projection")
        return out

    def __call__(self, v):
        code = int(self._codes([self.source.encode(v)])[0])
        return self.target.decode(code)

    def image(self, M):
        """Image of a submodule; a Subring maps to a Subring of the target."""
        codes = np.unique(self._codes(M.codes))
        cls = Subring if isinstance(M, Subring) else Submodule
        return from_codes(self.target, codes, cls=cls)

    def lift(self, coords):
        """A preimage of target coordinates (the canonical one from the chosen basis)."""
        v = np.zeros(self.source.d, dtype=np.int64)
        for c, b in zip(coords, self._lifts):
            v = v + int(c) * b
        return tuple(int(x) for x in v % self.source.n)


def _order_mod(S, code, kernel_members):
    v = S.elements[code]
    k = 1
    while not kernel_members[S.encode(k * v)]:
        k += 1
    return k


def present(S, group_codes, unit_code, kernel_codes=None, name=None):
    """Present the ring G/K (G a set of codes closed under + and *) over Z/m.

    m is the additive order of the unit modulo K. Raises NotFree when G/K is
    not a free Z/m-module.
    """
    E = S.elements
    group_codes = np.unique(np.asarray(group_codes, dtype=np.int64))
    kernel_codes = np.array([0] if kernel_codes is None else kernel_codes, dtype=np.int64)
    kernel_members = np.zeros(S.size, dtype=bool)
    kernel_members[kernel_codes] = True
    m = _order_mod(S, unit_code, kernel_members)
    target_size = len(group_codes) // len(kernel_codes)

    span_vecs = E[kernel_codes]
    in_span = kernel_members.copy()
    basis = []
    while len(span_vecs) < len(group_codes):
        # trying the unit first keeps it as the first basis vector when possible
        for c in np.concatenate(([unit_code], group_codes)):
            if in_span[c]:
                continue
            steps = np.arange(m)[:, None, None] * E[c][None, None, :]
            new = ((span_vecs[None, :, :] + steps) % S.n).reshape(-1, S.d)
            new_codes = new @ S.radix
            if len(np.unique(new_codes)) == len(span_vecs) * m:
                basis.append(E[c].copy())
                span_vecs = new
                in_span[new_codes] = True
                break
        else:
            raise NotFree("quotient is not a free module over its characteristic")
    r = len(basis)
    if m ** r != target_size:
        raise NotFree("quotient is not a free module over its characteristic")

    B = np.array(basis, dtype=np.int64).reshape(r, S.d)
    combo_codes = np.arange(m ** r, dtype=np.int64)
    tradix = np.array([m ** (r - 1 - i) for i in range(r)], dtype=np.int64)
    combos = (combo_codes[:, None] // tradix[None, :]) % m
    vecs = (combos @ B) % S.n
    coset = ((vecs[:, None, :] + E[kernel_codes][None, :, :]) % S.n) @ S.radix
    tcode = np.full(S.size, -1, dtype=np.int64)
    tcode[coset] = combo_codes[:, None]

    def coords(code):
        t = int(tcode[code])
        return [int(x) for x in (t // tradix) % m]

    mul = [[coords(S.encode(S.mul(B[i], B[j]))) for j in range(r)] for i in range(r)]
    target = validate(m, mul, coords(unit_code), name=name, caps=S.caps)
    return target, Projection(S, target, tcode, list(B))


def quotient(S, I):
    """S/I as a RingTable together with the projection S -> S/I."""
    if not is_ideal_of(I, S):
        raise NotSharedIdeal("not an ideal of the ambient ring")
    name = f"{S.name}/I" if S.name else None
    return present(S, np.arange(S.size), S.unit_code, I.codes, name=name)


def quotient_extension(E, I):
    """(R/I contained in S/I) for an ideal I of S lying inside R."""
    from .extension import Extension

    if not is_ideal_of(I, E.S) or not I.issubset(E.R):
        raise NotSharedIdeal("ideal must be an ideal of S contained in R")
    Q, proj = quotient(E.S, I)
    return Extension(Q, proj.image(E.R), name=f"{E.name}/I" if E.name else None)


@dataclass(frozen=True)
class Factor:
    idempotent: tuple
    ring: RingTable
    projection: Projection


def primitive_idempotent_decomposition(S):
    """One local factor eS per primitive idempotent e of S."""
    out = []
    for e in S.whole.structure.primitive_idempotents:
        e = int(e)
        ring, proj = present(S, np.unique(S.mtab[e]), e)
        out.append(Factor(S.decode(e), ring, Projection(S, ring, proj._tcode, proj._lifts, factor=e)))
    return out


def localize_extension(E, M):
    """(eR contained in eS), e the primitive idempotent of R outside M.

    For finite rings this is the localization at M.
    """
    from .extension import Extension

    S = E.S
    e = local_idempotent(E.R, M)
    if e == S.unit_code:
        return E
    ring, proj = present(S, np.unique(S.mtab[e]), e)
    proj = Projection(S, ring, proj._tcode, proj._lifts, factor=e)
    name = f"{E.name}@M" if E.name else None
    return Extension(ring, proj.image(E.R), name=name)


def split_extension(E):
    """Factor extensions R_i in S_i, one per maximal ideal of R."""
    return [localize_extension(E, M) for M in maximal_ideals(E.R)]


def _crt(a, n1, b, n2):
    # x = a mod n1, x = b mod n2, n1 and n2 coprime
    return (a + n1 * ((b - a) * pow(n1, -1, n2) % n2)) % (n1 * n2)


def product(S1, S2, name=None):
    """S1 x S2. Same modulus: block diagonal; coprime moduli and equal rank: CRT."""
    n1, n2, d1, d2 = S1.n, S2.n, S1.d, S2.d
    if n1 == n2:
        d = d1 + d2
        mul = [[[0] * d for _ in range(d)] for _ in range(d)]
        for i in range(d1):
            for j in range(d1):
                mul[i][j][:d1] = S1.mul_table[i][j]
        for i in range(d2):
            for j in range(d2):
                mul[d1 + i][d1 + j][d1:] = S2.mul_table[i][j]
        unit = list(S1.unit) + list(S2.unit)
        return validate(n1, mul, unit, name=name, caps=S1.caps)
    if gcd(n1, n2) == 1 and d1 == d2:
        d = d1
        mul = [
            [[_crt(S1.mul_table[i][j][k], n1, S2.mul_table[i][j][k], n2) for k in range(d)]
             for j in range(d)]
            for i in range(d)
        ]
        unit = [_crt(a, n1, b, n2) for a, b in zip(S1.unit, S2.unit)]
        return validate(n1 * n2, mul, unit, name=name, caps=S1.caps)
    raise NotFree(f"Z/{n1} rank {d1} times Z/{n2} rank {d2} is not free over one Z/n")


def embed_pair(P, S1, S2, a, b):
    """The element (a, b) of P = product(S1, S2)."""
    if S1.n == S2.n:
        return tuple(a) + tuple(b)
    return tuple(_crt(x, S1.n, y, S2.n) for x, y in zip(a, b))


def product_subring(P, S1, S2, T1, T2):
    """T1 x T2 as a subring of P = product(S1, S2)."""
    z1 = (0,) * S1.d
    z2 = (0,) * S2.d
    rows = [embed_pair(P, S1, S2, r, z2) for r in T1.basis]
    rows += [embed_pair(P, S1, S2, z1, r) for r in T2.basis]
    return span_closure(P, rows)


def product_extension(E1, E2, name=None):
    from .extension import Extension

    P = product(E1.S, E2.S, name=name)
    return Extension(P, product_subring(P, E1.S, E2.S, E1.R, E2.R), name=name)
