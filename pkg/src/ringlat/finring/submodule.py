"""Canonically represented submodules, subrings and ideals."""
from functools import cached_property

import numpy as np

from ..errors import AmbientMismatch
from ..howell import form_size, howell_form, in_span, pivots


class Submodule:
    """An additive subgroup of a RingTable, stored as its Howell form.

    Equality and hashing use the Howell form, so two submodules built from
    different generators compare equal exactly when they have the same
    elements.
    """

    def __init__(self, ambient, basis):
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in basis)

    @classmethod
    def span(cls, ambient, rows, **kw):
        return cls(ambient, howell_form(list(rows), ambient.n, ambient.d), **kw)

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and self.basis == other.basis
            and self.ambient == other.ambient
        )

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"<{type(self).__name__} |{self.size}| basis={list(self.basis)}>"

    @cached_property
    def size(self):
        return form_size(self.basis, self.ambient.n)

    @cached_property
    def vectors(self):
        """All elements as an (size, d) array sorted by code."""
        n, d = self.ambient.n, self.ambient.d
        cur = np.zeros((1, d), dtype=np.int64)
        for row, (_, g) in zip(self.basis, pivots(self.basis)):
            k = n // g
            r = np.array(row, dtype=np.int64)
            cur = ((cur[:, None, :] + np.arange(k)[None, :, None] * r) % n).reshape(-1, d)
        order = np.argsort(cur @ self.ambient.radix, kind="stable")
        return cur[order]

    @cached_property
    def codes(self):
        return self.vectors @ self.ambient.radix

    @cached_property
    def members(self):
        """Boolean membership array indexed by element code."""
        m = np.zeros(self.ambient.size, dtype=bool)
        m[self.codes] = True
        return m

    @cached_property
    def mask(self):
        """Membership as a Python int bitmask (bit c set iff code c is in)."""
        packed = np.packbits(self.members, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    def __contains__(self, v):
        return bool(self.members[self.ambient.encode(v)])

    def __len__(self):
        return self.size

    def __le__(self, other):
        return self.issubset(other)

    def __lt__(self, other):
        return self.size < other.size and self.issubset(other)

    def issubset(self, other):
        _same_ambient(self, other)
        return self.mask & ~other.mask == 0

    def elements(self):
        return [tuple(int(x) for x in v) for v in self.vectors]

    @cached_property
    def additive_length(self):
        """Composition length of the additive group (sum of prime exponents of |M|)."""
        size, length, p = self.size, 0, 2
        while size > 1:
            while size % p == 0:
                size //= p
                length += 1
            p += 1
        return length


class Subring(Submodule):
    """A submodule containing the unit and closed under multiplication."""

    @cached_property
    def structure(self):
        from .structure import RingData

        return RingData(self.ambient, self.codes)


class Ideal(Submodule):
    """An ideal of ``over`` (a Subring), with elements living in ``ambient``."""

    def __init__(self, ambient, basis, over=None):
        super().__init__(ambient, basis)
        self.over = over if over is not None else ambient.whole


def _same_ambient(a, b):
    if a.ambient is not b.ambient and a.ambient != b.ambient:
        raise AmbientMismatch("submodules live in different rings")


def from_codes(ambient, codes, cls=Submodule, **kw):
    """Submodule whose element set is ``codes`` (assumed to be a subgroup)."""
    codes = np.unique(np.asarray(codes, dtype=np.int64))
    if len(codes) <= 256:
        vecs = [tuple(int(x) for x in ambient.elements[c]) for c in codes]
        basis = howell_form(vecs, ambient.n, ambient.d)
        if form_size(basis, ambient.n) != len(codes):
            raise ValueError("code set is not an additive subgroup")
        return cls(ambient, basis, **kw)
    target = np.zeros(ambient.size, dtype=bool)
    target[codes] = True
    rows = []
    basis = ()
    have = np.zeros(ambient.size, dtype=bool)
    have[0] = True
    count = 1
    for c in codes:
        if count == len(codes):
            break
        if have[c]:
            continue
        rows.append(tuple(int(x) for x in ambient.elements[c]))
        basis = howell_form(rows, ambient.n, ambient.d)
        mod = Submodule(ambient, basis)
        have = mod.members
        count = mod.size
    if count != len(codes) or not target[have].all():
        raise ValueError("code set is not an additive subgroup")
    return cls(ambient, basis, **kw)


_UPPER = {}


def _upper(k):
    if k not in _UPPER:
        _UPPER[k] = np.triu_indices(k)
    return _UPPER[k]


def _close(ambient, rows):
    n, d = ambient.n, ambient.d
    B = howell_form(rows, n, d)
    while True:
        if not B:
            return B
        P = ambient.mul_rows(B, B)
        prods = P[_upper(len(B))]
        if in_span(B, prods, n).all():
            return B
        B = howell_form(list(B) + [tuple(int(x) for x in p) for p in prods], n, d)


def span_closure(ambient, seed, base=None):
    """Smallest subring of ``ambient`` containing ``seed`` (and ``base``, a subring)."""
    rows = [ambient.unit]
    if base is not None:
        rows.extend(base.basis)
    rows.extend(tuple(int(x) for x in s) for s in seed)
    return Subring(ambient, _close(ambient, rows))


def adjoin(T, xs):
    """T[x1, ..., xk] for a subring T."""
    return span_closure(T.ambient, xs, base=T)


def additive_sum(T, U):
    _same_ambient(T, U)
    return Submodule.span(T.ambient, list(T.basis) + list(U.basis))


def is_ring(M):
    """True iff the submodule contains the unit and is closed under products."""
    S = M.ambient
    if not M.members[S.unit_code]:
        return False
    if not M.basis:
        return False
    P = S.mul_rows(M.basis, M.basis).reshape(-1, S.d)
    return bool(M.members[S.codes_of(P)].all())


def as_subring(M):
    """Reinterpret a submodule known to be a ring as a Subring."""
    if not is_ring(M):
        raise ValueError("submodule is not a subring")
    return Subring(M.ambient, M.basis)


def meet(T, U):
    """Intersection of two subrings."""
    _same_ambient(T, U)
    both = np.flatnonzero(T.members & U.members)
    return from_codes(T.ambient, both, cls=Subring)


def join(T, U):
    """Compositum TU: the subring generated by T and U."""
    _same_ambient(T, U)
    return span_closure(T.ambient, U.basis, base=T)
