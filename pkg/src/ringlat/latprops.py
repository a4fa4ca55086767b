"""Lattice-theoretic properties of an interval [R, S].

Deciders work on node indices of an IntervalLattice and quantify
exhaustively over nodes; the ``*_violation`` variants return the first
offending tuple (in index order) or None.
"""
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .finring import join as ring_join
from .finring import localize_extension, meet as ring_meet


def meet(T, U):
    """Intersection of two intermediate rings."""
    return ring_meet(T, U)


def join(T, U):
    """Compositum of two intermediate rings."""
    return ring_join(T, U)


def length_and_chains(L):
    """(length, Counter mapping chain length -> number of maximal chains)."""
    counts = [Counter() for _ in L.nodes]
    counts[-1][0] = 1
    for i in range(len(L) - 1, -1, -1):
        for k in L.successors[i]:
            for length, c in counts[k].items():
                counts[i][length + 1] += c
    return L.length, counts[0]


def catenarian_violation(L):
    """A comparable pair (i, j) whose maximal chains have different lengths."""
    bad = (L.longest != L.shortest) & L.leq
    hits = np.argwhere(bad)
    return tuple(int(x) for x in hits[0]) if len(hits) else None


def is_catenarian(L):
    return catenarian_violation(L) is None


def _nodes_in(L, lo, hi):
    if lo is None:
        return np.arange(len(L))
    return np.array(L.interval(lo, hi), dtype=np.int64)


def modular_violation(L, lo=None, hi=None):
    """A triple (i, j, k) with j below i and i meet (j join k) != j join (i meet k)."""
    idx = _nodes_in(L, lo, hi)
    J, M = L.join_table, L.meet_table
    for i in idx:
        js = idx[L.leq[idx, i]]
        if not len(js):
            continue
        lhs = M[i, J[np.ix_(js, idx)]]
        rhs = J[js[:, None], M[i, idx][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            a, b = bad[0]
            return int(i), int(js[a]), int(idx[b])
    return None


def is_modular(L, lo=None, hi=None):
    return modular_violation(L, lo, hi) is None


def distributive_violation(L, lo=None, hi=None):
    """A triple (i, j, k) with i meet (j join k) != (i meet j) join (i meet k)."""
    idx = _nodes_in(L, lo, hi)
    J, M = L.join_table, L.meet_table
    for i in idx:
        lhs = M[i, J[np.ix_(idx, idx)]]
        mi = M[i, idx]
        rhs = J[mi[:, None], mi[None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            a, b = bad[0]
            return int(i), int(idx[a]), int(idx[b])
    return None


def is_distributive(L, lo=None, hi=None):
    return distributive_violation(L, lo, hi) is None


def semimodular_violation(L):
    """A pair (i, j) both covering i meet j but not both covered by i join j."""
    C = L.cover_matrix
    J, M = L.join_table, L.meet_table
    N = len(L)
    for i in range(N):
        m = M[i]
        j_all = np.arange(N)
        below = C[m, i] & C[m, j_all]
        top = J[i]
        bad = below & ~(C[i, top] & C[j_all, top])
        hits = np.flatnonzero(bad)
        if len(hits):
            return i, int(hits[0])
    return None


def is_semimodular(L):
    return semimodular_violation(L) is None


def complements(L, i):
    """All nodes k with node_i meet node_k = R and node_i join node_k = S."""
    last = len(L) - 1
    return {
        int(k)
        for k in np.flatnonzero((L.meet_table[i] == 0) & (L.join_table[i] == last))
    }


def is_boolean(L):
    if not is_distributive(L):
        return False
    return all(complements(L, i) for i in range(len(L)))


def is_b2(L):
    return L.length == 2 and len(L) == 4


def is_chained(L, lo=None, hi=None):
    idx = _nodes_in(L, lo, hi)
    sub = L.leq[np.ix_(idx, idx)]
    return bool((sub | sub.T).all())


def is_pinched(L, chain):
    """Whether every node is comparable with every node of ``chain``."""
    comparable = L.leq | L.leq.T
    return bool(all(comparable[c].all() for c in chain))


def is_arithmetic(E, L=None):
    """Localize at each maximal ideal of R in the support and test for a chain.

    ``L``, the lattice of E, is reused when a localization is E itself.
    """
    from .extlattice import enumerate_interval

    for M in E.support:
        local = localize_extension(E, M)
        if local is E and L is not None:
            sub = L
        else:
            sub = enumerate_interval(local, classify=False)
        if not is_chained(sub):
            return False
    return True


def is_arithmetic_by_filter(L, lo=0):
    """Same test read off the lattice, for the extension [node lo, S].

    The localization at the maximal ideal of T outside a primitive
    idempotent e is {eU : U in [T, S]}.
    """
    S = L.extension.S
    base = L.nodes[lo]
    above = L.interval(lo, len(L) - 1)
    for e in base.structure.primitive_idempotents:
        images = {}
        for k in above:
            codes = np.unique(S.mtab[int(e), L.nodes[k].codes])
            mask = np.zeros(S.size, dtype=bool)
            mask[codes] = True
            images[codes.tobytes()] = mask
        masks = list(images.values())
        for a in range(len(masks)):
            for b in range(a + 1, len(masks)):
                x, y = masks[a], masks[b]
                if (x & ~y).any() and (y & ~x).any():
                    return False
    return True


def atoms(L):
    return set(L.atoms)


def loewy_series(L):
    """R = S_0 < S_1 < ... ending at S, S_{i+1} the join of the covers of S_i."""
    series = [0]
    last = len(L) - 1
    while series[-1] != last:
        cur = series[-1]
        top = cur
        for a in L.successors[cur]:
            top = int(L.join_table[top, a])
        series.append(top)
    return series


def candidate_chains(L, decomposition=None):
    """Chains inside ]R, S[ worth testing for pinching: closure nodes and Loewy nodes."""
    last = len(L) - 1
    chains = []
    inner = []
    if decomposition is not None:
        for T in (decomposition.seminormalization, decomposition.t_closure):
            k = L.node_index(T)
            if 0 < k < last and k not in inner:
                inner.append(k)
                chains.append([k])
        if len(inner) == 2:
            chains.append(sorted(inner, key=lambda k: L.sizes[k]))
    loewy = [k for k in loewy_series(L) if 0 < k < last]
    for k in loewy:
        if [k] not in chains:
            chains.append([k])
    if len(loewy) > 1:
        chains.append(loewy)
    return chains


def pinched_at(L, decomposition=None, extra=()):
    for chain in list(candidate_chains(L, decomposition)) + [list(c) for c in extra]:
        if chain and is_pinched(L, chain):
            return chain
    return None


IMPLICATIONS = [
    ("chained", "distributive"),
    ("distributive", "modular"),
    ("modular", "semimodular"),
    ("semimodular", "catenarian"),
    ("boolean", "distributive"),
]


@dataclass
class LatticeReport:
    length: int
    node_count: int
    chain_length_spectrum: dict
    atoms: list
    flags: dict
    loewy_series: list
    complements: dict
    pinched_at: list | None
    witnesses: dict = field(default_factory=dict)

    def implication_failures(self):
        return [
            (a, b) for a, b in IMPLICATIONS if self.flags[a] and not self.flags[b]
        ]


def lattice_report(L, decomposition=None, arithmetic=None):
    """Every lattice property of L in one record.

    ``arithmetic`` may be passed in when already known, otherwise it is
    computed by localizing the extension.
    """
    length, spectrum = length_and_chains(L)
    witnesses = {
        "catenarian": catenarian_violation(L),
        "modular": modular_violation(L),
        "distributive": distributive_violation(L),
        "semimodular": semimodular_violation(L),
    }
    comps = {i: sorted(complements(L, i)) for i in range(len(L))}
    flags = {
        "catenarian": witnesses["catenarian"] is None,
        "chained": is_chained(L),
        "modular": witnesses["modular"] is None,
        "distributive": witnesses["distributive"] is None,
        "semimodular": witnesses["semimodular"] is None,
        "boolean": witnesses["distributive"] is None and all(comps.values()),
        "b2": is_b2(L),
        "arithmetic": is_arithmetic(L.extension) if arithmetic is None else arithmetic,
    }
    report = LatticeReport(
        length=length,
        node_count=len(L),
        chain_length_spectrum=dict(sorted(spectrum.items())),
        atoms=sorted(L.atoms),
        flags=flags,
        loewy_series=loewy_series(L),
        complements=comps,
        pinched_at=pinched_at(L, decomposition),
        witnesses={k: v for k, v in witnesses.items() if v is not None},
    )
    broken = report.implication_failures()
    if broken:
        raise AssertionError(f"lattice implication chain broken: {broken}")
    return report
