"""Seminormalization, t-closure and the type of an extension."""
from dataclasses import dataclass

import numpy as np

from .finring import Submodule, Subring, maximal_ideals, span_closure


def _grow(T, U, new_codes):
    S = T.ambient
    gens = Submodule.span(S, [S.decode(int(c)) for c in new_codes])
    return span_closure(S, gens.basis, base=T)


def relative_seminormalization(T, U):
    """Smallest subring of U containing T that is seminormal in U."""
    S = T.ambient
    c = U.codes
    sq = S.mtab[c, c]
    cube = S.mtab[sq, c]
    while True:
        hit = T.members[sq] & T.members[cube] & ~T.members[c]
        if not hit.any():
            return T
        T = _grow(T, U, c[hit])


def relative_t_closure(T, U):
    """Smallest subring of U containing T that is t-closed in U."""
    S = T.ambient
    c = U.codes
    sq = S.mtab[c, c]
    cube = S.mtab[sq, c]
    while True:
        hit = np.zeros(len(c), dtype=bool)
        outside = ~T.members[c]
        step = max(1, 200_000 // max(1, len(c)))
        for lo in range(0, T.size, step):
            r = T.codes[lo:lo + step]
            rb = S.mtab[np.ix_(r, c)]
            rb2 = S.mtab[np.ix_(r, sq)]
            d1 = S.sub_codes(np.broadcast_to(sq, rb.shape), rb)
            d2 = S.sub_codes(np.broadcast_to(cube, rb2.shape), rb2)
            hit |= (T.members[d1] & T.members[d2]).any(axis=0)
        hit &= outside
        if not hit.any():
            return T
        T = _grow(T, U, c[hit])


def seminormalization(E):
    """The seminormalization of R in S."""
    return relative_seminormalization(E.R, E.top)


def t_closure(E):
    """The t-closure of R in S."""
    return relative_t_closure(E.R, E.top)


@dataclass(frozen=True)
class TypeFlags:
    subintegral: bool
    infra_integral: bool
    seminormal: bool
    t_closed: bool

    def as_dict(self):
        return {
            "subintegral": self.subintegral,
            "infra_integral": self.infra_integral,
            "seminormal": self.seminormal,
            "t_closed": self.t_closed,
        }


def residue_sizes(T, U):
    """Pairs (|T/M|, |U/N|) for every maximal ideal N of U, with M = N cap T."""
    out = []
    for N in maximal_ideals(U):
        m = int((N.members & T.members).sum())
        out.append((T.size // m, U.size // N.size))
    return out


def is_infra_integral(T, U):
    return all(a == b for a, b in residue_sizes(T, U))


def classify_type(T, U):
    """Type flags of the extension T in U (both subrings of one ring)."""
    if isinstance(U, Subring) is False:
        U = U.whole
    from .extlattice import is_spectrally_bijective

    infra = is_infra_integral(T, U)
    return TypeFlags(
        subintegral=infra and is_spectrally_bijective(T, U),
        infra_integral=infra,
        seminormal=relative_seminormalization(T, U) == T,
        t_closed=relative_t_closure(T, U) == T,
    )


@dataclass(frozen=True)
class CanonicalDecomposition:
    seminormalization: Subring
    t_closure: Subring
    integral_closure: Subring


def canonical_decomposition(E):
    """R in +R in tR in S; every element of a finite ring is integral, so the
    integral closure is S."""
    return CanonicalDecomposition(seminormalization(E), t_closure(E), E.top)
