from brute import Brute, as_set
from hypothesis import given
from strategies import small_extensions

from ringlat.closures import (
    canonical_decomposition,
    classify_type,
    is_infra_integral,
    seminormalization,
    t_closure,
)
from ringlat.corpus.blocks import diagonal_field, galois_field, prime_extension, square_zero, truncated


def _seminormal(br, T, U):
    return all(x in T for x in U if br.power(x, 2) in T and br.power(x, 3) in T)


def _t_closed(br, T, U):
    for b in U:
        if b in T:
            continue
        b2, b3 = br.power(b, 2), br.power(b, 3)
        for r in T:
            if br.add(b2, br.neg(br.mul(r, b))) in T and br.add(b3, br.neg(br.mul(r, b2))) in T:
                return False
    return True


def _smallest(br, E, closed):
    U = as_set(E.top)
    good = [T for T in br.intermediate_rings(as_set(E.R)) if closed(br, T, U)]
    least = frozenset.intersection(*good)
    assert least in good
    return least


@given(small_extensions(max_rank=3))
def test_seminormalization_is_least_seminormal_intermediate_ring(E):
    br = Brute(E.S)
    assert as_set(seminormalization(E)) == _smallest(br, E, _seminormal)


@given(small_extensions(max_rank=3))
def test_t_closure_is_least_t_closed_intermediate_ring(E):
    br = Brute(E.S)
    assert as_set(t_closure(E)) == _smallest(br, E, _t_closed)


@given(small_extensions(max_rank=3))
def test_decomposition_is_a_chain(E):
    dec = canonical_decomposition(E)
    assert E.R.issubset(dec.seminormalization)
    assert dec.seminormalization.issubset(dec.t_closure)
    assert dec.t_closure.issubset(dec.integral_closure)
    flags = classify_type(E.R, E.top)
    assert flags.seminormal == (dec.seminormalization == E.R)
    assert flags.t_closed == (dec.t_closure == E.R)
    assert flags.infra_integral == (dec.t_closure.size == E.S.size)


@given(small_extensions(max_rank=3))
def test_subintegral_means_closures_stay_at_R(E):
    flags = classify_type(E.R, E.top)
    if flags.subintegral:
        assert seminormalization(E).size == E.S.size
    assert not flags.subintegral or flags.infra_integral


def test_square_zero_is_subintegral():
    E = prime_extension(square_zero(2, 2))
    flags = classify_type(E.R, E.top)
    assert flags.subintegral and flags.infra_integral
    assert not flags.seminormal and not flags.t_closed


def test_diagonal_is_seminormal_infra_integral():
    E = prime_extension(diagonal_field(2, 3))
    flags = classify_type(E.R, E.top)
    assert flags.seminormal and flags.infra_integral and not flags.subintegral
    assert not flags.t_closed


def test_field_extension_is_t_closed():
    E = prime_extension(galois_field(2, 3))
    flags = classify_type(E.R, E.top)
    assert flags.t_closed and flags.seminormal and not flags.infra_integral
    assert not is_infra_integral(E.R, E.top)


def test_truncated_cube_needs_both_closures_equal_to_S():
    E = prime_extension(truncated(2, 3))
    dec = canonical_decomposition(E)
    assert dec.seminormalization.size == 8
