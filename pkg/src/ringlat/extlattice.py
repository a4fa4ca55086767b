"""The interval [R, S] of intermediate rings and its minimal covers."""
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    ClassificationContradiction,
    NodeBudgetExceeded,
    NotComparable,
    NotMinimal,
)
from .finring import (
    DEFAULT_CAPS,
    Ideal,
    adjoin,
    conductor,
    ideal_product_in,
    is_maximal_ideal,
    join,
    maximal_ideals,
)

KIND_LETTER = {"ramified": "r", "decomposed": "d", "inert": "i"}


@dataclass(frozen=True)
class MinimalType:
    kind: str
    crucial_ideal: Ideal
    residue_degree: int

    @property
    def letter(self):
        return KIND_LETTER[self.kind]


def is_minimal(T, U):
    """Whether T is strictly inside U with nothing in between.

    Uses the adjunction test: T[x] = U for every x in U outside T.
    """
    if not T.issubset(U):
        raise NotComparable("T is not contained in U")
    if T.size == U.size:
        return False
    S = T.ambient
    seen = T.members.copy()
    for c in U.codes:
        if seen[c]:
            continue
        seen[S.add_codes(T.codes, c)] = True
        if adjoin(T, [S.decode(int(c))]) != U:
            return False
    return True


def _log(base, value):
    k = 0
    while value > 1:
        if value % base:
            return None
        value //= base
        k += 1
    return k


def classify_minimal(T, U, check=True):
    """Type of a minimal extension T in U, with its crucial ideal."""
    if check and not is_minimal(T, U):
        raise NotMinimal("extension is not minimal")
    M = conductor(T, U)
    if not is_maximal_ideal(T, M):
        raise ClassificationContradiction("conductor of a minimal extension is not maximal")
    q = T.size // M.size
    above = [N for N in maximal_ideals(U) if M.issubset(N)]
    found = []
    if any(N.size == M.size for N in above):
        found.append(("inert", _log(q, U.size // M.size)))
    if len(above) == 2 and all(U.size // N.size == q for N in above):
        N1, N2 = above
        if int((N1.members & N2.members).sum()) == M.size:
            found.append(("decomposed", 1))
    if len(above) == 1:
        N = above[0]
        if U.size // N.size == q and U.size // M.size == q * q and ideal_product_in(N, N, M):
            found.append(("ramified", 1))
    if len(found) != 1:
        raise ClassificationContradiction(f"minimal extension matched {len(found)} cases")
    kind, degree = found[0]
    return MinimalType(kind, Ideal(T.ambient, M.basis, over=T), degree)


def support_of(T, U):
    """Maximal ideals M of T with T_M != U_M, ordered like T's primitive idempotents."""
    S = T.ambient
    out = []
    for e, M in zip(T.structure.primitive_idempotents, maximal_ideals(T)):
        eT = np.unique(S.mtab[int(e), T.codes])
        eU = np.unique(S.mtab[int(e), U.codes])
        if len(eT) != len(eU):
            out.append(M)
    return out


def support(E):
    return list(E.support)


def crucial_ideal(T, U):
    supp = support_of(T, U)
    if len(supp) != 1:
        raise NotMinimal("support of a minimal extension is a single maximal ideal")
    return supp[0]


def is_spectrally_bijective(T, U):
    if not T.issubset(U):
        raise NotComparable("T is not contained in U")
    ups = maximal_ideals(U)
    return all(sum(M.issubset(N) for N in ups) == 1 for M in maximal_ideals(T))


class IntervalLattice:
    """The poset [R, S] with its Hasse diagram.

    Nodes are sorted by (element count, Howell basis), so index 0 is R and
    the last index is S. ``covers`` lists Hasse edges (i, j), i below j.
    Derived tables (order matrix, meets, joins, path lengths) are computed
    lazily and cached.
    """

    def __init__(self, extension, nodes, covers, edge_labels, node_flags):
        self.extension = extension
        self.nodes = list(nodes)
        self.covers = list(covers)
        self.edge_labels = dict(edge_labels)
        self.node_flags = {i: frozenset(f) for i, f in node_flags.items()}
        self.index = {T.basis: i for i, T in enumerate(self.nodes)}

    def __len__(self):
        return len(self.nodes)

    def __repr__(self):
        return f"<IntervalLattice {len(self.nodes)} nodes, length {self.length}>"

    def node_index(self, T):
        return self.index[T.basis]

    def flags(self, i):
        return self.node_flags.get(i, frozenset())

    @cached_property
    def sizes(self):
        return np.array([T.size for T in self.nodes], dtype=np.int64)

    @cached_property
    def leq(self):
        """leq[i, j] is True iff node i is contained in node j."""
        return _containment(self.nodes)

    @cached_property
    def cover_matrix(self):
        C = np.zeros((len(self), len(self)), dtype=bool)
        for i, j in self.covers:
            C[i, j] = True
        return C

    @cached_property
    def successors(self):
        out = [[] for _ in self.nodes]
        for i, j in self.covers:
            out[i].append(j)
        return out

    @cached_property
    def predecessors(self):
        out = [[] for _ in self.nodes]
        for i, j in self.covers:
            out[j].append(i)
        return out

    @cached_property
    def meet_table(self):
        masks = [T.mask for T in self.nodes]
        by_mask = {m: i for i, m in enumerate(masks)}
        N = len(masks)
        out = np.empty((N, N), dtype=np.int64)
        for i in range(N):
            mi = masks[i]
            for j in range(i, N):
                out[i, j] = out[j, i] = by_mask[mi & masks[j]]
        return out

    @cached_property
    def join_table(self):
        """Smallest node above both; in a lattice it is the unique minimum-size upper bound."""
        leq = self.leq
        big = np.int64(1) << 62
        N = len(self)
        out = np.empty((N, N), dtype=np.int64)
        for i in range(N):
            upper = leq[i][None, :] & leq  # upper[j, k]: k above i and j
            out[i] = np.where(upper, self.sizes[None, :], big).argmin(axis=1)
        return out

    def _paths(self, best):
        N = len(self)
        table = np.full((N, N), -1, dtype=np.int64)
        for i in range(N - 1, -1, -1):
            row = table[i]
            row[i] = 0
            for k in self.successors[i]:
                cand = table[k]
                ok = cand >= 0
                upd = ok & ((row < 0) | best(cand + 1, row))
                row[upd] = cand[upd] + 1
        return table

    @cached_property
    def longest(self):
        """longest[i, j] = length of the longest chain from i up to j, or -1."""
        return self._paths(lambda a, b: a > b)

    @cached_property
    def shortest(self):
        return self._paths(lambda a, b: a < b)

    @property
    def length(self):
        return int(self.longest[0, -1])

    def interval(self, i, j):
        """Indices of the nodes of [node_i, node_j]."""
        return [k for k in range(len(self)) if self.leq[i, k] and self.leq[k, j]]

    def interval_length(self, i, j):
        return int(self.longest[i, j])

    @property
    def atoms(self):
        return list(self.successors[0])

    def label(self, i, j):
        return self.edge_labels[(i, j)]


def _containment(nodes):
    A = np.array([T.members for T in nodes], dtype=np.float32)
    common = A @ A.T
    sizes = np.array([T.size for T in nodes], dtype=np.float32)
    return common == sizes[:, None]


def _hasse(leq):
    N = len(leq)
    strict = leq & ~np.eye(N, dtype=bool)
    s = strict.astype(np.float32)
    between = (s @ s) > 0
    return [tuple(int(x) for x in e) for e in np.argwhere(strict & ~between)]


def enumerate_interval(E, budget=None, order_seed=None, classify=True):
    """All intermediate rings of E, as an IntervalLattice.

    Breadth-first: every node T is extended by T[x] for x outside T. Since
    T[x] = T R[x] and T[x] only depends on the coset x + T, one join with a
    simple extension R[x] per coset suffices. ``order_seed`` shuffles the iteration order (the
    resulting lattice is the same). Raises NodeBudgetExceeded when more than
    ``budget`` nodes turn up.
    """
    if budget is None:
        budget = (E.S.caps or DEFAULT_CAPS).with_env().node_budget
    R, S = E.R, E.S
    simple, index = E.simple_extensions
    _, first = np.unique(index, return_index=True)
    order = np.arange(1, len(simple))
    if order_seed is not None:
        random.Random(order_seed).shuffle(order)
    gens = first[order]
    found = {R.basis: R}
    queue = deque([R])
    while queue:
        T = queue.popleft()
        # T[x] only depends on x + T: keep one generator per coset
        outside = np.flatnonzero(~T.members[gens])
        cosets = S.add_codes(T.codes[:, None], gens[outside][None, :]).min(axis=0)
        _, keep = np.unique(cosets, return_index=True)
        for k in np.sort(keep):
            U = join(T, simple[order[outside[k]]])
            if U.basis not in found:
                found[U.basis] = U
                if len(found) > budget:
                    raise NodeBudgetExceeded(budget, len(found))
                queue.append(U)
    nodes = sorted(found.values(), key=lambda T: (T.size, T.basis))
    leq = _containment(nodes)
    covers = _hasse(leq)
    labels = {}
    if classify:
        for i, j in covers:
            labels[(i, j)] = classify_minimal(nodes[i], nodes[j], check=False)
    flags = {}
    for i, j in covers:
        if i == 0:
            flags.setdefault(j, set()).add("atom")
    L = IntervalLattice(E, nodes, covers, labels, flags)
    L.__dict__["leq"] = leq  # reuse the matrix computed above
    if classify:
        from .closures import seminormalization, t_closure

        for tag, node in (("+R", seminormalization(E)), ("tR", t_closure(E))):
            L.node_flags[L.node_index(node)] = L.flags(L.node_index(node)) | {tag}
    return L

