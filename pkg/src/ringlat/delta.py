"""Deciding whether T + U is a ring for all intermediate rings T, U.

Three independent routes: a scan over lattice node pairs, a scan over pairs
of simple extensions R[s], R[t], and a structural criterion that reads the
answer off the canonical decomposition, cover types and lattice shape.
"""
from dataclasses import dataclass, field

import numpy as np

from .closures import canonical_decomposition, classify_type
from .errors import NotLocal
from .extlattice import enumerate_interval
from .finring import Extension, maximal_ideals
from .howell import howell_form, in_span
from .latprops import is_arithmetic, modular_violation

BRUTEFORCE = "bruteforce"
T_CLOSED_ARITHMETIC = "t_closed_arithmetic"
INFRA_INTEGRAL_MODULAR = "infra_integral_modular"
SEMINORMAL_COUNT = "seminormal_count"
DECOMPOSITION_CRITERION = "decomposition_criterion"
LENGTH2 = "length2"


@dataclass
class DeltaVerdict:
    is_delta: bool
    route: str
    witness: tuple | None = None
    condition_trace: dict = field(default_factory=dict)


def pair_witness(T, U):
    """An element of TU outside T + U, or None when T + U is a ring.

    T + U is a ring exactly when every product t u of basis rows lies in
    it, so the first such product that does not is returned.
    """
    S = T.ambient
    form = howell_form(list(T.basis) + list(U.basis), S.n, S.d)
    prods = S.mul_rows(T.basis, U.basis).reshape(-1, S.d)
    ok = in_span(form, prods, S.n)
    if ok.all():
        return None
    return tuple(int(x) for x in prods[np.argmin(ok)])


def _interval_nodes(L, lo, hi):
    if lo is None:
        return np.arange(len(L))
    return np.array(L.interval(lo, hi), dtype=np.int64)


def bruteforce_failure(L, lo=None, hi=None):
    """First node pair (i, j), i < j, inside [lo, hi] with T + U != TU.

    Since T + U lies in TU, equality is a cardinality check:
    |T + U| = |T| |U| / |T meet U|.
    """
    idx = _interval_nodes(L, lo, hi)
    sizes = L.sizes
    J = L.join_table[np.ix_(idx, idx)]
    M = L.meet_table[np.ix_(idx, idx)]
    bad = sizes[J] * sizes[M] != sizes[idx][:, None] * sizes[idx][None, :]
    bad = np.triu(bad, 1)
    hits = np.argwhere(bad)
    if not len(hits):
        return None
    a, b = hits[0]
    return int(idx[a]), int(idx[b])


def is_delta_bruteforce(L, lo=None, hi=None):
    """Scan all node pairs of the lattice (or of the sub-interval [lo, hi])."""
    idx = _interval_nodes(L, lo, hi)
    trace = {"pairs": len(idx) * (len(idx) - 1) // 2}
    fail = bruteforce_failure(L, lo, hi)
    if fail is None:
        return DeltaVerdict(True, BRUTEFORCE, None, trace)
    i, j = fail
    T, U = L.nodes[i], L.nodes[j]
    trace["failing_pair"] = [i, j]
    return DeltaVerdict(False, BRUTEFORCE, (T, U, pair_witness(T, U)), trace)


def generators_failure(E):
    """First pair of elements (s, t) with R[s] + R[t] != R[s, t], as (s, t, witness)."""
    S = E.S
    rings, index = E.simple_extensions
    first_code = {}
    for c in range(S.size):
        first_code.setdefault(int(index[c]), c)
    for a in range(1, len(rings)):
        A = rings[a]
        for b in range(a + 1, len(rings)):
            B = rings[b]
            if A.mask & ~B.mask == 0 or B.mask & ~A.mask == 0:
                continue
            w = pair_witness(A, B)
            if w is not None:
                return S.decode(first_code[a]), S.decode(first_code[b]), w
    return None


def is_delta_generators(E):
    """R[s, t] = R[s] + R[t] for all elements s, t of S."""
    return generators_failure(E) is None


def _context(E, L, decomposition):
    L = L if L is not None else enumerate_interval(E)
    dec = decomposition if decomposition is not None else canonical_decomposition(E)
    return L, dec


def is_delta_characterized(E, L=None, decomposition=None, route=None):
    """Decide the property structurally, without scanning node pairs of [R, S].

    Dispatch: length at most 1 is trivially fine; a t-closed extension
    needs to be arithmetic; an infra-integral one needs a modular lattice
    (and, when also seminormal, at most three maximal ideals of S over each
    supporting maximal ideal of R); anything else goes through the
    canonical-decomposition criterion. ``route`` forces that last criterion
    when set to "decomposition_criterion".
    """
    L, dec = _context(E, L, decomposition)
    if route == DECOMPOSITION_CRITERION:
        return decomposition_criterion(E, L, dec)
    if route not in (None,):
        raise ValueError(f"unknown route {route!r}")
    if E.is_trivial or L.length <= 1:
        return DeltaVerdict(True, LENGTH2, None, {"length": L.length})
    R = E.R
    t_closed = dec.t_closure == R
    infra = dec.t_closure.size == E.S.size
    seminormal = dec.seminormalization == R
    if t_closed:
        arith = is_arithmetic(E, L)
        return DeltaVerdict(arith, T_CLOSED_ARITHMETIC, None, {"arithmetic": arith})
    if infra:
        violation = modular_violation(L)
        trace = {"modular": violation is None}
        if violation is not None:
            trace["modular_witness"] = list(violation)
        if not seminormal:
            return DeltaVerdict(violation is None, INFRA_INTEGRAL_MODULAR, None, trace)
        counts = maximal_ideals_over_support(E)
        trace["maximal_ideals_over_support"] = counts
        trace["count_test"] = all(c <= 3 for c in counts)
        trace["agree"] = trace["count_test"] == (violation is None)
        return DeltaVerdict(violation is None, SEMINORMAL_COUNT, None, trace)
    return decomposition_criterion(E, L, dec)


def maximal_ideals_over_support(E):
    """For each M in the support, the number of maximal ideals of S containing M."""
    top = maximal_ideals(E.S)
    return [sum(M.issubset(N) for N in top) for M in E.support]


def different_type_sites(L):
    """Every (T, U, V) with T covered by U and V, of different types, U < V by index."""
    sites = []
    for t in range(len(L)):
        succ = L.successors[t]
        for a in range(len(succ)):
            for b in range(a + 1, len(succ)):
                u, v = succ[a], succ[b]
                ku, kv = L.label(t, u).kind, L.label(t, v).kind
                if ku != kv:
                    sites.append((t, u, v, ku, kv))
    return sites


def decomposition_criterion(E, L=None, decomposition=None):
    """R in +R and +R in tR must pass the pair scan, tR in S must be arithmetic,
    and whenever T has covers U, V of different types, [T, UV] must be the
    four-element diamond."""
    L, dec = _context(E, L, decomposition)
    p = L.node_index(dec.seminormalization)
    t = L.node_index(dec.t_closure)
    lower = is_delta_bruteforce(L, 0, p).is_delta
    middle = is_delta_bruteforce(L, p, t).is_delta
    upper = is_arithmetic(Extension(E.S, dec.t_closure, name=E.name))
    sites = []
    consistent = True
    witness = None
    for tt, u, v, ku, kv in different_type_sites(L):
        w = int(L.join_table[u, v])
        length = L.interval_length(tt, w)
        count = len(L.interval(tt, w))
        b2 = length == 2 and count == 4
        site = {
            "T": tt, "U": u, "V": v, "kinds": [ku, kv], "join": w,
            "length": length, "nodes": count, "b2": b2,
        }
        if {ku, kv} == {"ramified", "decomposed"}:
            # diamond, pair scan on [T, UV] and length 2 must all agree here
            sub_delta = is_delta_bruteforce(L, tt, w).is_delta
            site["sub_delta"] = sub_delta
            site["equivalent_forms_agree"] = b2 == sub_delta == (length == 2)
            consistent &= site["equivalent_forms_agree"]
        if not b2 and witness is None:
            U, V = L.nodes[u], L.nodes[v]
            element = pair_witness(U, V)
            if element is not None:
                witness = (U, V, element)
        sites.append(site)
    cond2 = all(s["b2"] for s in sites)
    trace = {
        "lower_delta": lower,
        "middle_delta": middle,
        "upper_arithmetic": upper,
        "condition_1": lower and middle and upper,
        "condition_2": cond2,
        "sites": sites,
        "equivalent_forms_agree": consistent,
    }
    ok = lower and middle and upper and cond2
    return DeltaVerdict(ok, DECOMPOSITION_CRITERION, None if ok else witness, trace)


def _add_table_rows(S, xs):
    E = S.elements
    return ((E[xs][:, None, :] + E[None, :, :]) % S.n) @ S.radix


def small_delta_failure(E):
    """First (x, y) with R[x] != R[y] and R[x] + R[y] != R[x + y]."""
    S = E.S
    rings, index = E.simple_extensions
    members = np.array([A.members for A in rings])
    sizes = np.array([A.size for A in rings], dtype=np.int64)
    checked = {}
    step = max(1, 500_000 // S.size)
    for lo in range(0, S.size, step):
        xs = np.arange(lo, min(S.size, lo + step))
        sums = _add_table_rows(S, xs)
        a = index[xs][:, None]
        b = index[None, :]
        c = index[sums]
        a, b = np.broadcast_arrays(a, b)
        sel = a != b
        triples = np.stack([a[sel], b[sel], c[sel]], axis=1)
        for tri in np.unique(triples, axis=0):
            key = tuple(int(v) for v in tri)
            if key not in checked:
                ia, ib, ic = key
                both = int((members[ia] & members[ib]).sum())
                checked[key] = (
                    bool(members[ic][members[ia]].all())
                    and bool(members[ic][members[ib]].all())
                    and sizes[ia] * sizes[ib] == sizes[ic] * both
                )
        bad = [k for k, ok in checked.items() if not ok]
        if bad:
            ia, ib, ic = min(bad)
            hit = np.argwhere((index[xs][:, None] == ia) & (index[None, :] == ib) & (index[sums] == ic))
            r, y = hit[0]
            return S.decode(int(xs[r])), S.decode(int(y))
    return None


def is_small_delta(E):
    """R[x] + R[y] = R[x + y] whenever R[x] != R[y]."""
    return small_delta_failure(E) is None


def is_simple(E):
    """The first x (in lexicographic order) with R[x] = S, or None."""
    S = E.S
    rings, index = E.simple_extensions
    for k, A in enumerate(rings):
        if A.size == S.size:
            return S.decode(int(np.flatnonzero(index == k)[0]))
    return None


PWM_KINDS = ("not_pwm", "minimal", "alpha", "beta", "gamma", "delta_case")


@dataclass
class PointwiseMinimal:
    kind: str
    predicted_delta: bool | None
    details: dict = field(default_factory=dict)


def _smallest_prime(q):
    p = 2
    while q % p:
        p += 1
    return p


def _powers_in(S, codes, k, target):
    p = codes.copy()
    for _ in range(k - 1):
        p = S.mtab[p, codes]
    return bool(target.members[p].all())


def pointwise_minimal(E):
    """Classify a pointwise minimal extension over a local base ring.

    Pointwise minimal means R in R[t] is minimal for every t outside R.
    Returns the matching case and the predicted answer to the T + U
    question for it.
    """
    R, S = E.R, E.S
    maxR = maximal_ideals(R)
    if len(maxR) != 1:
        raise NotLocal("base ring is not local; localize first")
    if E.is_trivial:
        return PointwiseMinimal("not_pwm", None, {"trivial": True})
    rings, index = E.simple_extensions
    outside = ~R.members
    for k in range(1, len(rings)):
        A = rings[k]
        new = A.members & outside
        if not (index[new] == k).all():
            return PointwiseMinimal("not_pwm", None, {"non_minimal_simple": k})
    if len(rings) == 2:
        return PointwiseMinimal("minimal", True)
    M = maxR[0]
    flags = classify_type(R, S.whole)
    maxS = maximal_ideals(S)
    q = R.size // M.size
    p = _smallest_prime(q)
    all_codes = np.arange(S.size)
    cond = E.conductor
    details = {
        "conductor_is_maximal_ideal": cond.size == M.size and bool(cond.members[M.codes].all()),
        "maximal_ideals_of_S": len(maxS),
        "residue_field": q,
    }
    kinds = []
    over = [N for N in maxS if M.issubset(N)]
    inter = np.logical_and.reduce([N.members for N in maxS]) if maxS else None
    if (
        q == 2
        and len(maxS) >= 3
        and len(over) == len(maxS)
        and all(S.size // N.size == q for N in maxS)
        and int(inter.sum()) == M.size
    ):
        kinds.append("alpha")
    p_powers = _powers_in(S, all_codes, p, R)
    if any(N.size == M.size for N in maxS) and p_powers:
        kinds.append("beta")
    local_S = len(maxS) == 1
    squares_in_M = local_S and _powers_in(S, maxS[0].codes, 2, M)
    if flags.subintegral and local_S and squares_in_M:
        kinds.append("gamma")
    if local_S and squares_in_M and p_powers:
        N = maxS[0]
        RN = howell_form(list(R.basis) + list(N.basis), S.n, S.d)
        RN_size = len(np.flatnonzero(in_span(RN, S.elements, S.n)))
        if R.size < RN_size < S.size:
            kinds.append("delta_case")
    details["matches"] = list(kinds)
    if len(kinds) != 1:
        return PointwiseMinimal("contradiction", None, details)
    kind = kinds[0]
    predicted = (
        (flags.seminormal and flags.infra_integral and len(maxS) == 3)
        or (flags.subintegral and local_S and _products_in(S, maxS[0], M))
    )
    return PointwiseMinimal(kind, bool(predicted), details)


def _products_in(S, N, M):
    return bool(M.members[S.mtab[np.ix_(N.codes, N.codes)]].all())
