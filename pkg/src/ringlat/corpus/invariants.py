"""Structural laws every extension must obey, checked on one analysed instance.

Each check returns None when its hypothesis does not apply, otherwise a
pair (holds, witness). ``negate`` turns one named law into its opposite so
the harness can prove that a broken law is reported.
"""
import random
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..analysis import Analysis
from ..closures import classify_type
from ..delta import is_delta_bruteforce
from ..errors import NodeBudgetExceeded, NotFree
from ..extlattice import enumerate_interval, support_of
from ..finring import (
    conductor,
    localize_extension,
    maximal_ideals,
    quotient_extension,
    split_extension,
)
from ..latprops import is_arithmetic_by_filter, is_b2, semimodular_violation


@dataclass
class Violation:
    law: str
    witness: dict = field(default_factory=dict)


class Context:
    """An analysed instance plus lazily analysed related extensions."""

    def __init__(self, analysis, seed=0, budget=None):
        self.a = analysis
        self.rng = random.Random(seed)
        self.budget = budget

    @property
    def L(self):
        return self.a.lattice

    @property
    def E(self):
        return self.a.extension

    @cached_property
    def factors(self):
        return [Analysis(F, budget=self.budget) for F in split_extension(self.E)]

    @cached_property
    def conductor_quotient(self):
        if self.E.is_trivial:
            return None  # the conductor is the unit ideal
        try:
            return Analysis(quotient_extension(self.E, self.E.conductor), budget=self.budget)
        except NotFree:
            return None


def routes_agree(c):
    a = c.a
    verdicts = {
        "bruteforce": a.bruteforce.is_delta,
        "generators": a.generators,
        "characterized": a.characterized.is_delta,
        "criterion": a.criterion.is_delta,
    }
    return len(set(verdicts.values())) == 1, {
        "verdicts": verdicts,
        "characterized_route": a.characterized.route,
        "characterized_trace": a.characterized.condition_trace,
    }


def criterion_forms_agree(c):
    trace = c.a.criterion.condition_trace
    return trace["equivalent_forms_agree"], {"sites": trace["sites"]}


def seminormal_count_agrees(c):
    trace = c.a.characterized.condition_trace
    if "agree" not in trace:
        return None
    return trace["agree"], trace


def delta_implies_modular(c):
    if not c.a.delta:
        return None
    return c.a.report.flags["modular"], {"modular_witness": c.a.report.witnesses.get("modular")}


def infra_integral_length_two(c):
    if not (c.a.type_flags.infra_integral and c.L.length == 2):
        return None
    return c.a.delta, {}


def _additive_lengths_hold(L):
    M, J, longest = L.meet_table, L.join_table, L.longest
    N = len(L)
    i, j = np.triu_indices(N, 1)
    m, w = M[i, j], J[i, j]
    ok = longest[m, i] + longest[m, j] == longest[m, w]
    return bool(ok.all())


def _diamonds_hold(L):
    for t in range(len(L)):
        succ = L.successors[t]
        for x in range(len(succ)):
            for y in range(x + 1, len(succ)):
                w = L.join_table[succ[x], succ[y]]
                if L.longest[t, w] != 2:
                    return False
    return True


def infra_integral_equivalences(c):
    if not c.a.type_flags.infra_integral:
        return None
    L = c.L
    values = {
        "delta": c.a.delta,
        "modular": c.a.report.flags["modular"],
        "semimodular": semimodular_violation(L) is None,
        "additive_lengths": _additive_lengths_hold(L),
        "cover_pairs_span_length_two": _diamonds_hold(L),
    }
    return len(set(values.values())) == 1, values


def sub_intervals_inherit(c, samples=6):
    if not c.a.delta:
        return None
    L = c.L
    pairs = np.argwhere(L.leq)
    picks = [tuple(pairs[c.rng.randrange(len(pairs))]) for _ in range(samples)]
    bad = [(int(i), int(j)) for i, j in picks if not is_delta_bruteforce(L, i, j).is_delta]
    return not bad, {"failing_sub_intervals": bad}


def localization_transfer(c):
    E = c.E
    local = {}
    for M in E.support:
        F = localize_extension(E, M)
        local[str(M.basis)] = c.L if F is E else enumerate_interval(F, budget=c.budget, classify=False)
    local_delta = {k: is_delta_bruteforce(L).is_delta for k, L in local.items()}
    values = {"global": c.a.delta, "every_localization": all(local_delta.values())}
    Q = c.conductor_quotient
    if Q is not None:
        values["conductor_quotient"] = Q.bruteforce.is_delta
        values["quotient_nodes_match"] = len(Q.lattice) == len(c.L)
    agree = {values["global"], values["every_localization"]}
    agree.add(values.get("conductor_quotient", values["global"]))
    holds = len(agree) == 1 and values.get("quotient_nodes_match", True)
    return holds, values


def product_law(c):
    factors = c.factors
    counts = [len(F.lattice) for F in factors]
    deltas = [F.delta for F in factors]
    holds = c.a.delta == all(deltas) and int(np.prod(counts)) == len(c.L)
    return holds, {"factor_nodes": counts, "factor_delta": deltas}


def crosswise_exchange(c):
    """Two stacked covers whose crucial ideals are incomparable span a diamond
    with the types exchanged."""
    L = c.L
    found = []
    for i in range(len(L)):
        for j in L.successors[i]:
            M = L.label(i, j).crucial_ideal
            for k in L.successors[j]:
                N = L.label(j, k).crucial_ideal
                P = N.members & L.nodes[i].members
                if not (P & ~M.members).any():
                    continue
                nodes = L.interval(i, k)
                other = [x for x in nodes if x not in (i, j, k)]
                ok = len(nodes) == 4
                if ok:
                    s = other[0]
                    ok = (
                        L.label(i, s).kind == L.label(j, k).kind
                        and L.label(s, k).kind == L.label(i, j).kind
                    )
                found.append(((i, j, k), ok))
    if not found:
        return None
    bad = [path for path, ok in found if not ok]
    return not bad, {"paths": len(found), "failing": bad}


def cover_pair_cases(c):
    """Two covers T, U of one node: the shape of [node, TU] is fixed by their crucial ideals."""
    L = c.L
    S = c.E.S
    checked = 0
    bad = []
    for r in range(len(L)):
        succ = L.successors[r]
        for x in range(len(succ)):
            for y in range(x + 1, len(succ)):
                t, u = succ[x], succ[y]
                lt, lu = L.label(r, t), L.label(r, u)
                w = int(L.join_table[t, u])
                nodes = L.interval(r, w)
                length = L.interval_length(r, w)
                if lt.crucial_ideal.basis != lu.crucial_ideal.basis:
                    ok = len(nodes) == 4
                    case = "distinct"
                elif (lt.kind == "inert") != (lu.kind == "inert"):
                    box = np.ix_(nodes, nodes)
                    ok = bool((L.longest != L.shortest)[box][L.leq[box]].any())
                    case = "inert_and_not"
                elif lt.kind != "inert" and lu.kind != "inert":
                    M = lt.crucial_ideal
                    Ps = [P for P in maximal_ideals(L.nodes[t]) if M.issubset(P)]
                    Qs = [Q for Q in maximal_ideals(L.nodes[u]) if M.issubset(Q)]
                    inside = any(
                        M.members[S.mtab[np.ix_(P.codes, Q.codes)]].all() for P in Ps for Q in Qs
                    )
                    ok = length == (2 if inside else 3)
                    case = "both_non_inert"
                else:
                    continue
                checked += 1
                if not ok:
                    bad.append({"node": r, "covers": [t, u], "case": case, "length": length})
    if not checked:
        return None
    return not bad, {"pairs": checked, "failing": bad[:3]}


def chain_labels(c):
    """The label set along each maximal chain decides the type of R in S."""
    L = c.L
    letters = {"ramified": 1, "decomposed": 2, "inert": 4}
    reach = [set() for _ in range(len(L))]
    reach[-1].add(0)
    for i in range(len(L) - 1, -1, -1):
        for j in L.successors[i]:
            bit = letters[L.label(i, j).kind]
            reach[i] |= {m | bit for m in reach[j]}
    flags = c.a.type_flags
    if c.E.is_trivial:
        return None
    bad = []
    for m in reach[0]:
        claims = {
            "subintegral": m == 1,
            "infra_integral": m & 4 == 0,
            "seminormal_infra_integral": m == 2,
            "t_closed": m == 4,
        }
        truth = {
            "subintegral": flags.subintegral,
            "infra_integral": flags.infra_integral,
            "seminormal_infra_integral": flags.seminormal and flags.infra_integral,
            "t_closed": flags.t_closed,
        }
        if claims != truth:
            bad.append({"label_mask": m, "claims": claims, "flags": truth})
    return not bad, {"label_sets": sorted(reach[0]), "failing": bad}


def small_delta_consequences(c):
    if not c.a.small_delta:
        return None
    simple = c.a.simple_generator is not None or c.E.is_trivial
    return c.a.delta and simple, {"delta": c.a.delta, "simple": simple}


def diamond_not_t_closed(c):
    if not is_b2(c.L) or c.a.type_flags.t_closed:
        return None
    return c.a.delta, {}


def length_two_exceptions(c):
    L = c.L
    if L.length != 2:
        return None
    exceptional = len(c.E.support) == 1 and c.a.type_flags.t_closed and len(L) > 3
    return c.a.delta == (not exceptional), {"exceptional": exceptional, "nodes": len(L)}


def modular_arithmetic(c):
    if not c.a.report.flags["modular"]:
        return None
    L = c.L
    t = L.node_index(c.a.decomposition.t_closure)
    upper = is_arithmetic_by_filter(L, t)
    return c.a.delta == upper, {"t_closure_node": t, "upper_arithmetic": upper}


def arithmetic_routes_agree(c):
    return c.a.arithmetic == is_arithmetic_by_filter(c.L), {}


def covers_have_maximal_conductor(c):
    L = c.L
    bad = []
    for i, j in L.covers:
        T, U = L.nodes[i], L.nodes[j]
        supp = support_of(T, U)
        cond = conductor(T, U)
        if len(supp) != 1 or supp[0].basis != cond.basis:
            bad.append((i, j))
    return not bad, {"failing": bad}


def enumeration_order_free(c):
    L2 = enumerate_interval(c.E, budget=c.budget, order_seed=c.rng.randrange(1 << 30), classify=False)
    return [T.basis for T in L2.nodes] == [T.basis for T in c.L.nodes], {}


def type_flags_consistent(c):
    a = c.a
    dec = a.decomposition
    flags = classify_type(c.E.R, c.E.top)
    values = {
        "seminormal": flags.seminormal == (dec.seminormalization == c.E.R),
        "t_closed": flags.t_closed == (dec.t_closure == c.E.R),
        "infra_integral": flags.infra_integral == (dec.t_closure.size == c.E.S.size),
        "subintegral": flags.subintegral == (dec.seminormalization.size == c.E.S.size),
    }
    return all(values.values()), values


LAWS = {
    "routes_agree": routes_agree,
    "criterion_forms_agree": criterion_forms_agree,
    "seminormal_count_agrees": seminormal_count_agrees,
    "delta_implies_modular": delta_implies_modular,
    "infra_integral_length_two": infra_integral_length_two,
    "infra_integral_equivalences": infra_integral_equivalences,
    "sub_intervals_inherit": sub_intervals_inherit,
    "localization_transfer": localization_transfer,
    "product_law": product_law,
    "crosswise_exchange": crosswise_exchange,
    "cover_pair_cases": cover_pair_cases,
    "chain_labels": chain_labels,
    "small_delta_consequences": small_delta_consequences,
    "diamond_not_t_closed": diamond_not_t_closed,
    "length_two_exceptions": length_two_exceptions,
    "modular_arithmetic": modular_arithmetic,
    "arithmetic_routes_agree": arithmetic_routes_agree,
    "covers_have_maximal_conductor": covers_have_maximal_conductor,
    "enumeration_order_free": enumeration_order_free,
    "type_flags_consistent": type_flags_consistent,
}


def check_laws(analysis, seed=0, budget=None, negate=None, only=None):
    """Violations of every applicable law on one analysed instance."""
    if negate is not None and negate not in LAWS:
        raise KeyError(f"unknown law {negate!r}")
    c = Context(analysis, seed=seed, budget=budget)
    out = []
    for name, law in LAWS.items():
        if only is not None and name not in only:
            continue
        try:
            result = law(c)
        except NodeBudgetExceeded:
            continue
        if result is None:
            continue
        holds, witness = result
        if name == negate:
            holds = not holds
        if not holds:
            out.append(Violation(name, witness))
    return out
