from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..errors import AmbientMismatch
from .structure import conductor, maximal_ideals
from .submodule import Subring, adjoin


@dataclass(frozen=True, eq=False)
class Extension:
    """A ring extension R contained in S, with S given as a RingTable."""

    S: object
    R: Subring
    name: str | None = None

    def __post_init__(self):
        if self.R.ambient != self.S:
            raise AmbientMismatch("R must be a subring of S")

    def __repr__(self):
        return f"<Extension {self.name or ''} |R|={self.R.size} |S|={self.S.size}>"

    @property
    def top(self):
        return self.S.whole

    @property
    def is_trivial(self):
        return self.R.size == self.S.size

    @cached_property
    def conductor(self):
        return conductor(self.R)

    @cached_property
    def support(self):
        """Maximal ideals M of R at which R_M differs from S_M."""
        S = self.S
        out = []
        data = self.R.structure
        for e, M in zip(data.primitive_idempotents, maximal_ideals(self.R)):
            eR = np.unique(S.mtab[int(e), self.R.codes])
            eS = np.unique(S.mtab[int(e)])
            if len(eR) != len(eS):
                out.append(M)
        return out

    @cached_property
    def simple_extensions(self):
        """Pair (rings, index) with rings[index[c]] = R[x] for x of code c.

        rings[0] is R itself. R[x] only depends on the coset x + R, so one
        closure is computed per coset.
        """
        S, R = self.S, self.R
        index = np.full(S.size, -1, dtype=np.int64)
        index[R.codes] = 0
        rings = [R]
        keys = {R.basis: 0}
        for c in range(S.size):
            if index[c] >= 0:
                continue
            A = adjoin(R, [S.decode(c)])
            k = keys.setdefault(A.basis, len(rings))
            if k == len(rings):
                rings.append(A)
            index[S.add_codes(R.codes, c)] = k
        return rings, index
