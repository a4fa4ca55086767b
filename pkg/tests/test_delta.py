import pytest
from brute import Brute, as_set, is_delta
from hypothesis import given
from strategies import small_extensions

from ringlat.analysis import Analysis
from ringlat.corpus import build
from ringlat.corpus.blocks import diagonal_field, galois_field, prime_extension, truncated
from ringlat.delta import (
    DECOMPOSITION_CRITERION,
    is_delta_bruteforce,
    is_delta_characterized,
    is_delta_generators,
    is_simple,
    is_small_delta,
    pair_witness,
    pointwise_minimal,
)
from ringlat.errors import NotLocal
from ringlat.extlattice import enumerate_interval
from ringlat.finring import adjoin


@given(small_extensions(max_rank=3))
def test_all_routes_match_brute_force(E):
    L = enumerate_interval(E)
    br = Brute(E.S)
    want = is_delta(br, [as_set(T) for T in L.nodes])
    assert is_delta_bruteforce(L).is_delta == want
    assert is_delta_generators(E) == want
    assert is_delta_characterized(E, L).is_delta == want
    assert is_delta_characterized(E, L, route=DECOMPOSITION_CRITERION).is_delta == want


@given(small_extensions(max_rank=3))
def test_failing_pair_carries_a_true_witness(E):
    L = enumerate_interval(E, classify=False)
    verdict = is_delta_bruteforce(L)
    if verdict.is_delta:
        return
    T, U, w = verdict.witness
    br = Brute(E.S)
    assert w not in br.sum_set(as_set(T), as_set(U))
    assert w in br.ring_closure(list(as_set(U)), base=as_set(T))


@given(small_extensions(max_rank=3))
def test_small_delta_and_simple_match_brute_force(E):
    br = Brute(E.S)
    R = as_set(E.R)
    simple = {x: br.ring_closure([x], base=R) for x in br.all}
    want = all(
        br.sum_set(simple[x], simple[y]) == simple[br.add(x, y)]
        for x in br.all for y in br.all if simple[x] != simple[y]
    )
    assert is_small_delta(E) == want
    S_all = frozenset(br.all)
    gen = is_simple(E)
    assert (gen is not None) == any(A == S_all for A in simple.values())
    if gen is not None:
        assert simple[gen] == S_all


def test_pair_witness_on_the_four_point_diagonal():
    E = prime_extension(diagonal_field(2, 4))
    x = adjoin(E.R, [(1, 1, 0, 0)])
    y = adjoin(E.R, [(1, 0, 1, 0)])
    assert pair_witness(x, y) == (1, 0, 0, 0)
    assert pair_witness(x, x) is None


def test_diagonals_up_to_three_points_pass_and_four_fails():
    for k, want in ((2, True), (3, True), (4, False), (5, False)):
        a = Analysis(prime_extension(diagonal_field(2, k)))
        assert a.delta == want and a.routes_agree


def test_small_delta_examples():
    assert is_small_delta(build("spir-ram").extension)
    assert not is_small_delta(prime_extension(diagonal_field(2, 3)))


def test_simple_generator():
    assert is_simple(prime_extension(galois_field(2, 3))) is not None
    assert is_simple(prime_extension(diagonal_field(2, 3))) is None
    assert is_simple(prime_extension(truncated(2, 3))) == (0, 1, 0)


def test_pointwise_minimal_cases():
    alpha = pointwise_minimal(prime_extension(diagonal_field(2, 3)))
    assert alpha.kind == "alpha" and alpha.predicted_delta is True
    alpha4 = pointwise_minimal(prime_extension(diagonal_field(2, 4)))
    assert alpha4.kind == "alpha" and alpha4.predicted_delta is False
    assert pointwise_minimal(prime_extension(galois_field(2, 2))).kind == "minimal"
    assert pointwise_minimal(prime_extension(galois_field(2, 4))).kind == "not_pwm"


def test_pointwise_prediction_matches_actual_answer():
    for k in (3, 4, 5):
        a = Analysis(prime_extension(diagonal_field(2, k)))
        assert a.pointwise.predicted_delta == a.delta
    a = Analysis(build("square-zero-plane").extension)
    assert a.pointwise.kind == "gamma"
    assert a.pointwise.predicted_delta == a.delta


def test_pointwise_needs_local_base():
    from ringlat.finring import Extension

    S = diagonal_field(2, 2)
    with pytest.raises(NotLocal):
        pointwise_minimal(Extension(S, S.whole))
