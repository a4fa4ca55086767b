import pytest
from brute import Brute, as_set, covers, longest_chain
from hypothesis import given
from strategies import small_extensions

from ringlat.corpus import build
from ringlat.corpus.blocks import diagonal_field, galois_field, prime_extension, square_zero, truncated
from ringlat.errors import NodeBudgetExceeded, NotComparable, NotMinimal
from ringlat.extlattice import classify_minimal, enumerate_interval, is_minimal, is_spectrally_bijective
from ringlat.finring import Extension, adjoin


def node_sets(L):
    return [as_set(T) for T in L.nodes]


@given(small_extensions(max_rank=3))
def test_nodes_are_exactly_the_intermediate_rings(E):
    L = enumerate_interval(E)
    want = Brute(E.S).intermediate_rings(as_set(E.R))
    got = node_sets(L)
    assert len(got) == len(set(got))
    assert set(got) == want


@given(small_extensions(max_rank=3))
def test_hasse_edges_and_length_match_brute_force(E):
    L = enumerate_interval(E)
    sets = node_sets(L)
    assert {(sets[i], sets[j]) for i, j in L.covers} == covers(sets)
    assert L.length == longest_chain(sets, sets[0], sets[-1])


@given(small_extensions(max_rank=3))
def test_is_minimal_agrees_with_covers(E):
    L = enumerate_interval(E, classify=False)
    cov = set(L.covers)
    for i in range(len(L)):
        for j in range(len(L)):
            if L.leq[i, j]:
                assert is_minimal(L.nodes[i], L.nodes[j]) == ((i, j) in cov)


@given(small_extensions(max_rank=3))
def test_enumeration_order_does_not_matter(E):
    base = node_sets(enumerate_interval(E, classify=False))
    for seed in (1, 2):
        assert node_sets(enumerate_interval(E, order_seed=seed, classify=False)) == base


def test_nodes_sorted_from_R_to_S():
    L = enumerate_interval(prime_extension(diagonal_field(2, 3)))
    assert L.nodes[0] == L.extension.R
    assert L.nodes[-1].size == L.extension.S.size
    assert list(L.sizes) == sorted(L.sizes)


def test_node_budget_is_enforced():
    with pytest.raises(NodeBudgetExceeded) as err:
        enumerate_interval(prime_extension(diagonal_field(2, 4)), budget=5)
    assert err.value.budget == 5


def test_incomparable_pair_is_rejected():
    E = prime_extension(diagonal_field(2, 3))
    R = E.R
    a = adjoin(R, [(1, 0, 0)])
    b = adjoin(R, [(0, 1, 0)])
    with pytest.raises(NotComparable):
        is_minimal(a, b)


def test_classifying_a_non_minimal_pair_raises():
    E = prime_extension(diagonal_field(2, 3))
    with pytest.raises(NotMinimal):
        classify_minimal(E.R, E.top)


def test_three_kinds_of_minimal_extension():
    dec = prime_extension(diagonal_field(2, 2))
    assert classify_minimal(dec.R, dec.top).kind == "decomposed"
    inert = prime_extension(galois_field(2, 2))
    t = classify_minimal(inert.R, inert.top)
    assert t.kind == "inert" and t.residue_degree == 2
    ram = prime_extension(truncated(2, 2))
    t = classify_minimal(ram.R, ram.top)
    assert (t.kind, t.letter) == ("ramified", "r")
    assert t.crucial_ideal.size == 1


def test_field_tower_is_a_chain_of_inert_steps():
    L = enumerate_interval(prime_extension(galois_field(2, 4)))
    assert len(L) == 3 and L.length == 2
    assert {lab.kind for lab in L.edge_labels.values()} == {"inert"}


def test_spectral_bijectivity():
    ram = prime_extension(square_zero(2, 2))
    assert is_spectrally_bijective(ram.R, ram.top)
    dec = prime_extension(diagonal_field(2, 2))
    assert not is_spectrally_bijective(dec.R, dec.top)


def test_diagram_labels_for_the_f4_product():
    item = build("f4-f2-f2")
    L = enumerate_interval(item.extension)
    assert len(L) == 7
    # reduced rings have no ramified covers
    assert {lab.letter for lab in L.edge_labels.values()} == {"d", "i"}


def test_closure_tags_on_nodes():
    L = enumerate_interval(prime_extension(truncated(2, 2)))
    assert {"+R", "tR", "atom"} <= L.flags(1)
    L = enumerate_interval(prime_extension(diagonal_field(2, 2)))
    assert "+R" in L.flags(0)
    assert "tR" in L.flags(1)


def test_trivial_extension_has_one_node():
    S = diagonal_field(2, 2)
    L = enumerate_interval(Extension(S, S.whole))
    assert len(L) == 1 and L.length == 0 and L.covers == []
