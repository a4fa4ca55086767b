"""Named example extensions with the values they are expected to produce.

Every expectation records where its value comes from: ``"stated"`` values
are fixed facts about the example, ``"oracle"`` values are recomputed at
build time by the brute-force oracles in :mod:`ringlat.corpus.oracles`.
"""
from dataclasses import dataclass, field
from typing import Any, Callable

from ..analysis import Analysis
from ..errors import UnknownName
from ..extlattice import classify_minimal
from ..finring import Extension, additive_sum, adjoin, join, product, span_closure, validate
from . import oracles
from .blocks import (
    diagonal_field,
    galois_field,
    monogenic,
    power,
    prime_extension,
    residue_ring,
    square_zero,
    tensor,
    truncated,
)

STATED = "stated"
ORACLE = "oracle"


@dataclass
class Expectation:
    key: str
    expected: Any
    source: str
    observe: Callable[[Analysis], Any]

    def check(self, analysis):
        got = self.observe(analysis)
        return got == self.expected, got


@dataclass
class CorpusItem:
    name: str
    params: dict
    extension: Extension
    expected: list = field(default_factory=list)
    named: dict = field(default_factory=dict)

    def expect(self, key, expected, source, observe=None):
        self.expected.append(Expectation(key, expected, source, observe or STANDARD[key]))


def _flag(name):
    return lambda a: a.report.flags[name]


STANDARD = {
    "node_count": lambda a: len(a.lattice),
    "length": lambda a: a.lattice.length,
    "delta": lambda a: a.bruteforce.is_delta,
    "delta_generators": lambda a: a.generators,
    "delta_characterized": lambda a: a.characterized.is_delta,
    "small_delta": lambda a: a.small_delta,
    "simple": lambda a: a.simple_generator is not None,
    "catenarian": _flag("catenarian"),
    "chained": _flag("chained"),
    "modular": _flag("modular"),
    "distributive": _flag("distributive"),
    "boolean": _flag("boolean"),
    "arithmetic": _flag("arithmetic"),
    "subintegral": lambda a: a.type_flags.subintegral,
    "infra_integral": lambda a: a.type_flags.infra_integral,
    "seminormal": lambda a: a.type_flags.seminormal,
    "t_closed": lambda a: a.type_flags.t_closed,
    "pointwise_kind": lambda a: a.pointwise.kind,
    "pointwise_prediction": lambda a: a.pointwise.predicted_delta,
}


def _expect_delta(item, value, source):
    for key in ("delta", "delta_generators", "delta_characterized"):
        item.expect(key, value, source)


def _expect_oracle_summary(item, keys=("node_count", "length", "delta")):
    """Add the brute-force subring enumeration's answers as expectations."""
    E = item.extension
    count, length, delta = oracles.lattice_summary(E.S, E.R.vectors.tolist())
    values = {"node_count": count, "length": length, "delta": delta}
    for key in keys:
        if key == "delta":
            _expect_delta(item, delta, ORACLE)
        else:
            item.expect(key, values[key], ORACLE)


def _labels_between(item, edges):
    """Observer: the r/d/i letters on the given (lower, upper) named pairs."""

    def observe(a):
        L = a.lattice
        out = []
        for lo, hi in edges:
            i, j = L.node_index(item.named[lo]), L.node_index(item.named[hi])
            out.append(L.label(i, j).letter if (i, j) in L.edge_labels else None)
        return out

    return observe


def _all_edges(item):
    """Observer: every Hasse edge as a sorted list of (lower name, upper name, letter)."""
    name_of = {T.basis: k for k, T in item.named.items()}

    def observe(a):
        L = a.lattice
        return sorted(
            (name_of.get(L.nodes[i].basis, "?"), name_of.get(L.nodes[j].basis, "?"), lab.letter)
            for (i, j), lab in L.edge_labels.items()
        )

    return observe


def _diagonal(n):
    S = diagonal_field(2, n)
    item = CorpusItem(f"diag-F2-{n}", {"p": 2, "copies": n}, prime_extension(S, f"diag-F2-{n}"))
    item.expect("node_count", oracles.bell(n), ORACLE)
    _expect_delta(item, n <= 3, STATED)
    if n == 3:
        item.expect("node_count", 5, STATED)
        item.expect("length", 2, STATED)
        item.expect("small_delta", False, STATED)
        item.expect("simple", False, STATED)
    if n in (3, 4):
        item.expect("pointwise_kind", "alpha", STATED)
        item.expect("pointwise_prediction", n == 3, STATED)
    if n == 4:
        S = item.extension.S
        e = [tuple(int(i == k) for i in range(4)) for k in range(4)]
        x = tuple((a + b) % 2 for a, b in zip(e[0], e[1]))
        y = tuple((a + b) % 2 for a, b in zip(e[0], e[2]))
        R = item.extension.R
        item.named.update(x=adjoin(R, [x]), y=adjoin(R, [y]))
        item.expect(
            "pair_witness_of_x_y", e[0], STATED,
            lambda a, it=item: _witness(it.named["x"], it.named["y"]),
        )
    return item


def _witness(T, U):
    from ..delta import pair_witness

    return pair_witness(T, U)


def _field_and_two_points():
    F4, F2 = galois_field(2, 2), residue_ring(2)
    P = product(product(F4, F2), F2)
    S = validate(2, P.mul_table, P.unit, name="f4-f2-f2")
    E = prime_extension(S, "f4-f2-f2")
    item = CorpusItem("f4-f2-f2", {"fields": [4, 2, 2]}, E)
    k = E.R
    e1, a1, e2, e3 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    item.named.update(
        k=k,
        R1=adjoin(k, [e1]),
        R2=adjoin(k, [e2]),
        R3=adjoin(k, [e3]),
        k3=span_closure(S, [e1, e2, e3]),
        R=span_closure(S, [e1, a1]),
        S=S.whole,
    )
    item.expect("node_count", 7, STATED)
    _expect_delta(item, True, STATED)
    item.expect("seminormalization_is_base", True, STATED,
                lambda a: a.decomposition.seminormalization == k)
    item.expect("t_closure_is_k3", True, STATED,
                lambda a, it=item: a.decomposition.t_closure == it.named["k3"])
    edges = [("k", "R1"), ("R1", "R"), ("R1", "k3"), ("R", "S"), ("k3", "S")]
    item.expect("diagram_labels", ["d", "i", "d", "d", "i"], STATED, _labels_between(item, edges))
    _expect_oracle_summary(item, keys=("node_count",))
    return item


def _dual_numbers_cubed():
    D = truncated(2, 2)
    S = power(D, 3, name="dual-cubed")
    t = [(0, 1, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1)]
    e = [(1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0)]
    R = span_closure(S, [(0, 1, 0, 1, 0, 1)])
    E = Extension(S, R, name="dual-cubed")
    item = CorpusItem("dual-cubed", {"block": "F2[t]/(t^2)", "copies": 3}, E)
    plus = span_closure(S, [t[0], t[1]], base=R)
    item.named.update(R=R, plus=plus, top=S.whole)
    for i in range(3):
        item.named[f"Rx{i + 1}"] = adjoin(R, [t[i]])
        item.named[f"R{i + 1}"] = adjoin(R, [e[i]])
        item.named[f"SR{i + 1}"] = join(plus, item.named[f"R{i + 1}"])
    item.expect("length", 4, STATED)
    _expect_delta(item, True, STATED)
    item.expect("criterion_delta", True, STATED, lambda a: a.criterion.is_delta)
    item.expect("seminormalization_is_R_plus_N", True, STATED,
                lambda a, it=item: a.decomposition.seminormalization == it.named["plus"])

    def lower_and_upper(a, it=item):
        L = a.lattice
        p = L.node_index(it.named["plus"])
        return len(L.interval(0, p)), len(L.interval(p, len(L) - 1))

    item.expect("nodes_below_and_above_plus", (5, 5), STATED, lower_and_upper)
    edges = []
    for i in range(1, 4):
        edges += [
            ("R", f"Rx{i}", "r"), (f"Rx{i}", f"R{i}", "d"), (f"Rx{i}", "plus", "r"),
            (f"R{i}", f"SR{i}", "r"), ("plus", f"SR{i}", "d"), (f"SR{i}", "top", "d"),
        ]
    item.expect("all_cover_labels", sorted(edges), STATED, _all_edges(item))

    def sites(a, it=item):
        L = a.lattice
        name_of = {T.basis: k for k, T in it.named.items()}
        out = []
        for s in a.criterion.condition_trace["sites"]:
            if set(s["kinds"]) == {"ramified", "decomposed"}:
                names = sorted(name_of[L.nodes[s[k]].basis] for k in ("U", "V"))
                out.append((name_of[L.nodes[s["T"]].basis], *names, s["length"]))
        return sorted(out)

    item.expect(
        "ramified_decomposed_sites",
        sorted((f"Rx{i}", f"R{i}", "plus", 2) for i in range(1, 4)),
        STATED,
        sites,
    )
    _expect_oracle_summary(item, keys=("node_count",))
    return item


def sqrt7_i_mod2_ring():
    """The order with basis 1, sqrt7, (sqrt7+i)/2, (1+i sqrt7)/2, reduced mod 2."""
    table = oracles.quartic_order_constants()
    mul = [[[c % 2 for c in v] for v in row] for row in table]
    return validate(2, mul, (1, 0, 0, 0), name="sqrt7-i-mod2")


def _sqrt7_i_mod2():
    S = sqrt7_i_mod2_ring()
    E = prime_extension(S, "sqrt7-i-mod2")
    item = CorpusItem("sqrt7-i-mod2", {"modulus": 2}, E)
    x, u = (1, 1, 0, 0), (0, 0, 0, 1)
    R = E.R
    item.named.update(R=R, T=adjoin(R, [x]), T2=adjoin(R, [u]), S=S.whole)
    _expect_delta(item, False, STATED)
    item.expect("criterion_delta", False, STATED, lambda a: a.criterion.is_delta)
    item.expect("length", 3, STATED)

    def plus_length(a):
        L = a.lattice
        return L.interval_length(0, L.node_index(a.decomposition.seminormalization))

    item.expect("length_to_seminormalization", 2, STATED, plus_length)
    item.expect(
        "seminormalization_to_top", "decomposed", STATED,
        lambda a: classify_minimal(a.decomposition.seminormalization, a.extension.top).kind,
    )
    item.expect(
        "base_covers", ["ramified", "decomposed"], STATED,
        lambda a, it=item: [classify_minimal(R, it.named[k]).kind for k in ("T", "T2")],
    )
    item.expect("join_of_T_T2_is_S", True, STATED,
                lambda a, it=item: join(it.named["T"], it.named["T2"]) == S.whole)
    sqrt7_u = (0, 1, 1, 0)
    item.expect(
        "sqrt7_u_outside_T_plus_T2", True, STATED,
        lambda a, it=item: sqrt7_u not in additive_sum(it.named["T"], it.named["T2"]),
    )

    def failing_site(a, it=item):
        for s in a.criterion.condition_trace["sites"]:
            nodes = {a.lattice.nodes[s["U"]].basis, a.lattice.nodes[s["V"]].basis}
            if s["T"] == 0 and nodes == {it.named["T"].basis, it.named["T2"].basis}:
                return s["b2"], s["length"]
        return None

    item.expect("failing_site_at_base", (False, 3), STATED, failing_site)
    return item


def _spir(kind):
    if kind == "ram":
        S = monogenic(4, [0, 0], name="spir-ram")  # t^2 = 0
    else:
        S = monogenic(4, [0, 3], name="spir-dec")  # t^2 = t
    E = prime_extension(S, S.name)
    item = CorpusItem(S.name, {"modulus": 4, "relation": kind}, E)
    _expect_delta(item, True, STATED)
    if kind == "ram":
        item.expect("chained", True, STATED)
        item.expect("small_delta", True, STATED)
    else:
        item.expect(
            "seminormalization_to_top", "decomposed", STATED,
            lambda a: classify_minimal(a.decomposition.seminormalization, a.extension.top).kind,
        )
    _expect_oracle_summary(item, keys=("node_count",))
    return item


def _field_tower(k):
    S = galois_field(2, k)
    E = prime_extension(S, f"field-tower-{2 ** k}")
    item = CorpusItem(E.name, {"p": 2, "degree": k}, E)
    count, chained, modular = oracles.divisor_lattice(k)
    _expect_delta(item, k == 4, STATED)
    item.expect("chained", k == 4, STATED)
    item.expect("node_count", count, ORACLE)
    item.expect("chained", chained, ORACLE)
    item.expect("modular", modular, ORACLE)
    return item


def _noncatenarian():
    S = tensor(galois_field(2, 2), truncated(2, 2), name="f4-dual")
    item = CorpusItem("f4-dual", {"field": 4, "nilpotent": "y^2"}, prime_extension(S, "f4-dual"))
    item.expect("catenarian", False, STATED)
    _expect_oracle_summary(item)
    return item


def _square_zero_plane():
    S = square_zero(2, 2, name="square-zero-plane")
    item = CorpusItem("square-zero-plane", {"generators": 2}, prime_extension(S, S.name))
    item.expect("length", 2, STATED)
    item.expect("pointwise_kind", "gamma", ORACLE, lambda a: a.pointwise.kind)
    item.expect("pointwise_prediction", True, ORACLE)
    _expect_oracle_summary(item)
    return item


def _dual_tensor_square():
    D = truncated(2, 2)
    S = tensor(D, D, name="dual-tensor-square")
    item = CorpusItem("dual-tensor-square", {"relations": "x^2, y^2"}, prime_extension(S, S.name))
    item.expect("length", 3, STATED)
    _expect_oracle_summary(item)
    return item


BUILDERS = {
    "diag-F2-2": lambda: _diagonal(2),
    "diag-F2-3": lambda: _diagonal(3),
    "diag-F2-4": lambda: _diagonal(4),
    "diag-F2-5": lambda: _diagonal(5),
    "f4-f2-f2": _field_and_two_points,
    "dual-cubed": _dual_numbers_cubed,
    "sqrt7-i-mod2": _sqrt7_i_mod2,
    "spir-ram": lambda: _spir("ram"),
    "spir-dec": lambda: _spir("dec"),
    "field-tower-16": lambda: _field_tower(4),
    "field-tower-64": lambda: _field_tower(6),
    "f4-dual": _noncatenarian,
    "square-zero-plane": _square_zero_plane,
    "dual-tensor-square": _dual_tensor_square,
}

NAMES = tuple(BUILDERS)


def build(name):
    try:
        builder = BUILDERS[name]
    except KeyError:
        raise UnknownName(f"no corpus item named {name!r}") from None
    return builder()


@dataclass
class ItemResult:
    name: str
    rows: list  # (key, source, expected, got, ok)
    routes_agree: bool
    traces: dict

    @property
    def ok(self):
        return self.routes_agree and all(r[-1] for r in self.rows)


def check_item(item, analysis=None):
    a = analysis or Analysis(item.extension)
    rows = []
    for exp in item.expected:
        ok, got = exp.check(a)
        rows.append((exp.key, exp.source, exp.expected, got, ok))
    traces = {}
    if not a.routes_agree:
        traces = {
            "bruteforce": a.bruteforce.condition_trace,
            "generators": a.generators_witness,
            "characterized": a.characterized.condition_trace,
        }
    return ItemResult(item.name, rows, a.routes_agree, traces)


def run_corpus(names=None):
    """Build and check every item (or the given names), in catalogue order."""
    return [check_item(build(n)) for n in (names or NAMES)]
