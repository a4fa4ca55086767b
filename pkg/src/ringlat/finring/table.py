"""Rings presented by structure constants over Z/n."""
import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..errors import (
    BadDimensions,
    BadUnit,
    CapExceeded,
    NonAssociative,
    NonCommutative,
)


@dataclass(frozen=True)
class Caps:
    max_elements: int = 4096
    max_rank: int = 12
    node_budget: int = 2000

    def with_env(self):
        """Apply the RINGLAT_NODE_BUDGET override, if set."""
        raw = os.environ.get("RINGLAT_NODE_BUDGET")
        if not raw:
            return self
        return Caps(self.max_elements, self.max_rank, int(raw))


DEFAULT_CAPS = Caps()


def _normalize_rows(mul, n, d):
    """Accept a full d x d table or its lower triangle; return a full nested list."""
    if not isinstance(mul, (list, tuple)) or len(mul) != d:
        raise BadDimensions(f"mul must have {d} rows")
    lower = all(len(mul[i]) == i + 1 for i in range(d))
    full = all(len(mul[i]) == d for i in range(d))
    if not (lower or full):
        raise BadDimensions("mul rows must all have length d, or form a lower triangle")
    table = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(len(mul[i])):
            v = mul[i][j]
            if not isinstance(v, (list, tuple)) or len(v) != d:
                raise BadDimensions(f"mul[{i}][{j}] must be a vector of length {d}")
            table[i][j] = tuple(int(x) % n for x in v)
    if lower and not full:
        for i in range(d):
            for j in range(i + 1, d):
                table[i][j] = table[j][i]
    return table


def validate(base_modulus, mul, unit, name=None, caps=DEFAULT_CAPS):
    """Check the ring axioms on basis vectors and return a RingTable.

    ``mul`` may be the full table of structure constants or just its lower
    triangle (row i holding c_i0 .. c_ii), in which case it is symmetrized.
    Raises the first violated axiom: dimensions, commutativity, associativity,
    then the unit law.
    """
    n = int(base_modulus)
    if n < 2:
        raise BadDimensions("base modulus must be at least 2")
    if not isinstance(unit, (list, tuple)) or len(unit) < 1:
        raise BadDimensions("unit must be a nonempty vector")
    d = len(unit)
    if d > caps.max_rank:
        raise CapExceeded(f"rank {d} exceeds cap {caps.max_rank}")
    table = _normalize_rows(mul, n, d)
    for i in range(d):
        for j in range(i + 1, d):
            if table[i][j] != table[j][i]:
                raise NonCommutative(i + 1, j + 1)
    S = RingTable(n, table, tuple(int(x) % n for x in unit), name=name, caps=caps)
    C = S.C
    # (e_i e_j) e_k = sum_m c_ij^m c_mk ; e_i (e_j e_k) = sum_m c_jk^m c_im
    left = np.einsum("ijm,mkl->ijkl", C, C) % n
    right = np.einsum("jkm,iml->ijkl", C, C) % n
    bad = np.argwhere((left != right).any(axis=3))
    if len(bad):
        i, j, k = (int(x) + 1 for x in bad[0])
        raise NonAssociative(i, j, k)
    L = np.einsum("i,ijk->jk", np.array(S.unit, dtype=np.int64), C) % n
    for i in range(d):
        if not (L[i] == np.eye(d, dtype=np.int64)[i]).all():
            raise BadUnit(i + 1)
    return S


class RingTable:
    """A commutative ring structure on (Z/n)^d.

    Elements are tuples of residues. Each element also has an integer code,
    its base-n reading with the first coordinate most significant, so code
    order is lexicographic order on coordinate vectors.
    Use ``validate`` to build one from untrusted data.
    """

    def __init__(self, base_modulus, mul, unit, name=None, caps=DEFAULT_CAPS):
        self.n = int(base_modulus)
        self.mul_table = tuple(tuple(tuple(v) for v in row) for row in mul)
        self.unit = tuple(unit)
        self.d = len(self.unit)
        self.name = name
        self.caps = caps
        self.C = np.array(self.mul_table, dtype=np.int64).reshape(self.d, self.d, self.d)
        self.radix = np.array([self.n ** (self.d - 1 - i) for i in range(self.d)], dtype=np.int64)

    @property
    def base_modulus(self):
        return self.n

    @property
    def rank(self):
        return self.d

    @property
    def size(self):
        return self.n ** self.d

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<RingTable{label} Z/{self.n} rank {self.d}>"

    def __eq__(self, other):
        return (
            isinstance(other, RingTable)
            and self.n == other.n
            and self.mul_table == other.mul_table
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.n, self.mul_table, self.unit))

    def check_cap(self):
        if self.size > self.caps.max_elements:
            raise CapExceeded(f"|S| = {self.size} exceeds cap {self.caps.max_elements}")

    def element(self, coords):
        if len(coords) != self.d:
            raise BadDimensions(f"element needs {self.d} coordinates")
        return tuple(int(x) % self.n for x in coords)

    def encode(self, v):
        c = 0
        for x in v:
            c = c * self.n + (int(x) % self.n)
        return c

    def decode(self, code):
        return tuple(int(x) for x in self.elements[code])

    def codes_of(self, vecs):
        """Codes of a (k, d) integer array of vectors."""
        return (np.asarray(vecs, dtype=np.int64) % self.n) @ self.radix

    def basis_vector(self, i):
        return tuple(1 if j == i else 0 for j in range(self.d))

    @cached_property
    def unit_code(self):
        return self.encode(self.unit)

    @cached_property
    def elements(self):
        """All elements as an (N, d) array, row index = code."""
        self.check_cap()
        codes = np.arange(self.size, dtype=np.int64)
        return (codes[:, None] // self.radix[None, :]) % self.n

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return tuple(int(x) for x in np.einsum("i,j,ijk->k", a, b, self.C) % self.n)

    def mul_rows(self, A, B):
        """All products A[i] * B[j] as an (len(A), len(B), d) array."""
        A = np.asarray(A, dtype=np.int64).reshape(-1, self.d)
        B = np.asarray(B, dtype=np.int64).reshape(-1, self.d)
        return np.einsum("ai,bj,ijk->abk", A, B, self.C) % self.n

    @cached_property
    def mtab(self):
        """Multiplication table on codes, shape (N, N)."""
        E = self.elements
        N, d = E.shape
        L = np.einsum("bj,ijk->bik", E, self.C)  # L[b] is multiplication by b
        out = np.empty((N, N), dtype=np.int32)
        step = max(1, 2_000_000 // max(1, N * d * d))
        for lo in range(0, N, step):
            P = np.einsum("ai,bik->abk", E[lo:lo + step], L) % self.n
            out[lo:lo + step] = P @ self.radix
        return out

    @cached_property
    def nilpotent(self):
        """Boolean array over codes marking the nilpotent elements."""
        p = np.arange(self.size)
        for _ in range(self.size.bit_length()):
            p = self.mtab[p, p]
        return p == 0

    def add_codes(self, a, b):
        """Elementwise sum of two code arrays (broadcasting)."""
        E = self.elements
        return ((E[a] + E[b]) % self.n) @ self.radix

    def sub_codes(self, a, b):
        E = self.elements
        return ((E[a] - E[b]) % self.n) @ self.radix

    def scale_codes(self, k, a):
        return ((k * self.elements[a]) % self.n) @ self.radix

    @cached_property
    def whole(self):
        from .submodule import Subring

        rows = tuple(self.basis_vector(i) for i in range(self.d))
        return Subring(self, rows)

    @cached_property
    def prime_subring(self):
        from .submodule import span_closure

        return span_closure(self, [])
