import brute
from brute import as_set
from hypothesis import given
from strategies import small_extensions

from ringlat.corpus import build
from ringlat.corpus.blocks import diagonal_field, galois_field, prime_extension, truncated
from ringlat.extlattice import enumerate_interval
from ringlat.latprops import (
    complements,
    is_arithmetic,
    is_arithmetic_by_filter,
    is_b2,
    is_boolean,
    is_catenarian,
    is_chained,
    is_distributive,
    is_modular,
    lattice_report,
    loewy_series,
)


@given(small_extensions(max_rank=3))
def test_modular_and_distributive_match_brute_force(E):
    L = enumerate_interval(E, classify=False)
    sets = [as_set(T) for T in L.nodes]
    assert is_modular(L) == brute.is_modular(sets)
    assert is_distributive(L) == brute.is_distributive(sets)


@given(small_extensions(max_rank=3))
def test_meet_is_intersection_and_join_is_least_upper_bound(E):
    L = enumerate_interval(E, classify=False)
    sets = [as_set(T) for T in L.nodes]
    meet, join = brute.lattice_ops(sets)
    for i in range(len(L)):
        for j in range(len(L)):
            assert sets[L.meet_table[i, j]] == meet(sets[i], sets[j])
            assert sets[L.join_table[i, j]] == join(sets[i], sets[j])


@given(small_extensions(max_rank=3))
def test_arithmetic_by_localization_agrees_with_filter_images(E):
    L = enumerate_interval(E, classify=False)
    assert is_arithmetic(E, L) == is_arithmetic_by_filter(L)


@given(small_extensions(max_rank=3))
def test_report_flags_respect_implications(E):
    rep = lattice_report(enumerate_interval(E))
    assert rep.implication_failures() == []
    assert rep.node_count == len(rep.complements)


def test_diagonal_lattices_are_partition_lattices():
    L = enumerate_interval(prime_extension(diagonal_field(2, 3)))
    assert len(L) == 5 and L.length == 2 and is_b2(L) is False
    assert is_modular(L) and not is_distributive(L)
    L4 = enumerate_interval(prime_extension(diagonal_field(2, 4)))
    assert not is_modular(L4) and is_catenarian(L4)


def test_boolean_square():
    L = enumerate_interval(prime_extension(diagonal_field(2, 2)))
    assert len(L) == 2 and is_chained(L)
    item = build("f4-f2-f2")
    L = enumerate_interval(item.extension)
    assert not is_chained(L)


def test_b2_and_complements():
    # subfields of F64: F4 and F8 are incomparable
    L = enumerate_interval(prime_extension(galois_field(2, 6)))
    assert is_b2(L) and is_boolean(L)
    a, b = L.atoms
    assert complements(L, a) == {b}
    assert complements(L, 0) == {len(L) - 1}
    assert loewy_series(L) == [0, 3]
    assert not is_chained(L)


def test_field_tower_is_a_chain():
    L = enumerate_interval(prime_extension(galois_field(2, 4)))
    assert len(L) == 3 and is_chained(L) and is_distributive(L)
    assert loewy_series(L) == [0, 1, 2]
    assert is_arithmetic(L.extension, L)


def test_loewy_series_of_diagonal():
    L = enumerate_interval(prime_extension(diagonal_field(2, 3)))
    assert loewy_series(L) == [0, len(L) - 1]


def test_noncatenarian_example():
    L = enumerate_interval(build("f4-dual").extension)
    assert not is_catenarian(L)
    assert lattice_report(L).chain_length_spectrum.keys() >= {2, 3}


def test_truncated_chain():
    L = enumerate_interval(prime_extension(truncated(2, 3)))
    rep = lattice_report(L)
    assert rep.flags["catenarian"]
