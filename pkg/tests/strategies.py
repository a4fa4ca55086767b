"""Hypothesis strategies for small rings and extensions."""
from functools import reduce

from hypothesis import strategies as st

from ringlat.corpus.blocks import galois_field, residue_ring, square_zero, truncated
from ringlat.finring import Extension, product, span_closure

# small blocks over one base modulus, so products stay free modules
SMALL_BLOCKS = {
    2: [
        lambda: residue_ring(2),
        lambda: galois_field(2, 2),
        lambda: truncated(2, 2),
        lambda: truncated(2, 3),
        lambda: square_zero(2, 2),
    ],
    3: [lambda: residue_ring(3), lambda: truncated(3, 2)],
    4: [lambda: residue_ring(4)],
}


@st.composite
def small_rings(draw, max_rank=4):
    n = draw(st.sampled_from([2, 2, 2, 3, 4]))
    blocks = SMALL_BLOCKS[n]
    parts = []
    rank = 0
    for _ in range(draw(st.integers(1, 3))):
        B = blocks[draw(st.integers(0, len(blocks) - 1))]()
        if rank + B.d > max_rank:
            break
        parts.append(B)
        rank += B.d
    if not parts:
        parts = [blocks[0]()]
    return reduce(product, parts)


@st.composite
def small_extensions(draw, max_rank=4):
    S = draw(small_rings(max_rank=max_rank))
    codes = draw(st.lists(st.integers(0, S.size - 1), max_size=2))
    R = span_closure(S, [S.decode(c) for c in codes])
    return Extension(S, R)
