"""Element-level ideal theory: units, idempotents, maximal ideals, conductors."""
from functools import cached_property

import numpy as np

from ..errors import NotMaximal
from .submodule import Ideal, Subring, from_codes


def _ring(x):
    """Accept a RingTable or a Subring and return the Subring."""
    return x if isinstance(x, Subring) else x.whole


class RingData:
    """Cached element-level facts about a subring given by its element codes."""

    def __init__(self, ambient, codes):
        self.S = ambient
        self.codes = np.asarray(codes, dtype=np.int64)

    @cached_property
    def nilpotent(self):
        """Global boolean array: code c is a nilpotent element of the ring."""
        nil = np.zeros(self.S.size, dtype=bool)
        nil[self.codes] = self.S.nilpotent[self.codes]
        return nil

    @cached_property
    def idempotents(self):
        c = self.codes
        return c[self.S.mtab[c, c] == c]

    @cached_property
    def primitive_idempotents(self):
        """Nonzero idempotents with no idempotent strictly below them, in code order."""
        ids = self.idempotents
        ids = ids[ids != 0]
        prods = self.S.mtab[np.ix_(ids, ids)]  # prods[a, b] = e_a e_b
        below = (prods == ids[None, :]) & (ids[None, :] != ids[:, None])
        return ids[~below.any(axis=1)]

    @cached_property
    def maximal_ideal_codes(self):
        """One code array per primitive idempotent e: {x : e x nilpotent}."""
        out = []
        for e in self.primitive_idempotents:
            ex = self.S.mtab[e, self.codes]
            out.append(self.codes[self.nilpotent[ex]])
        return out

    @cached_property
    def maximal_ideals(self):
        return [from_codes(self.S, m, cls=Ideal) for m in self.maximal_ideal_codes]


def units(S):
    """All units of a RingTable or Subring, as coordinate tuples."""
    T = _ring(S)
    amb = T.ambient
    c = T.codes
    hit = (amb.mtab[np.ix_(c, c)] == amb.unit_code).any(axis=1)
    return [amb.decode(int(x)) for x in c[hit]]


def is_unit(S, a):
    T = _ring(S)
    amb = T.ambient
    row = amb.mtab[amb.encode(a), T.codes]
    return bool((row == amb.unit_code).any())


def idempotents(S):
    T = _ring(S)
    return [T.ambient.decode(int(c)) for c in T.structure.idempotents]


def primitive_idempotents(S):
    T = _ring(S)
    return [T.ambient.decode(int(c)) for c in T.structure.primitive_idempotents]


def maximal_ideals(S):
    """Maximal ideals, ordered like the primitive idempotents that carry them."""
    T = _ring(S)
    return [Ideal(T.ambient, M.basis, over=T) for M in T.structure.maximal_ideals]


def nilradical(S):
    T = _ring(S)
    nil = T.structure.nilpotent
    return from_codes(T.ambient, np.flatnonzero(nil), cls=Ideal, over=T)


def jacobson_radical(S):
    """{x : 1 - x r is a unit for every r}, by direct search."""
    T = _ring(S)
    amb = T.ambient
    c = T.codes
    unit_mask = np.zeros(amb.size, dtype=bool)
    unit_mask[[amb.encode(u) for u in units(T)]] = True
    prods = amb.mtab[np.ix_(c, c)]
    one = np.full_like(prods, amb.unit_code)
    diffs = amb.sub_codes(one, prods)
    keep = unit_mask[diffs].all(axis=1)
    return from_codes(amb, c[keep], cls=Ideal, over=T)


def local_idempotent(T, M):
    """The primitive idempotent of T that lies outside the maximal ideal M."""
    T = _ring(T)
    for e, m in zip(T.structure.primitive_idempotents, T.structure.maximal_ideal_codes):
        if len(m) == M.size and M.members[m].all():
            return int(e)
    raise NotMaximal("ideal is not a maximal ideal of the ring")


def is_maximal_ideal(T, I):
    T = _ring(T)
    return any(
        len(m) == I.size and I.members[m].all() for m in T.structure.maximal_ideal_codes
    )


def conductor(T, U=None):
    """(T : U) = {x in U : x U is contained in T}, an ideal of U lying in T."""
    T = _ring(T)
    U = T.ambient.whole if U is None else _ring(U)
    amb = T.ambient
    c = U.codes
    prods = amb.mtab[np.ix_(c, c)]
    keep = T.members[prods].all(axis=1)
    return from_codes(amb, c[keep], cls=Ideal, over=U)


def ideal_product_in(P, Q, M):
    """Whether every product p q (p in P, q in Q) lies in M, i.e. PQ is inside M."""
    amb = P.ambient
    return bool(M.members[amb.mtab[np.ix_(P.codes, Q.codes)]].all())


def is_ideal_of(I, T):
    """Whether the submodule I is an ideal of the ring T."""
    T = _ring(T)
    amb = T.ambient
    if not I.codes.size:
        return False
    P = amb.mul_rows(I.basis, T.basis).reshape(-1, amb.d) if I.basis else np.zeros((0, amb.d))
    return bool(I.members[amb.codes_of(P)].all()) if len(P) else True
