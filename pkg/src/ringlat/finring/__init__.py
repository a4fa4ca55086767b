"""Finite commutative rings presented by structure constants over Z/n."""
from .extension import Extension
from .presentation import (
    Factor,
    Projection,
    embed_pair,
    localize_extension,
    present,
    primitive_idempotent_decomposition,
    product,
    product_extension,
    product_subring,
    quotient,
    quotient_extension,
    split_extension,
)
from .structure import (
    conductor,
    ideal_product_in,
    idempotents,
    is_ideal_of,
    is_maximal_ideal,
    is_unit,
    jacobson_radical,
    local_idempotent,
    maximal_ideals,
    nilradical,
    primitive_idempotents,
    units,
)
from .submodule import (
    Ideal,
    Submodule,
    Subring,
    additive_sum,
    adjoin,
    as_subring,
    from_codes,
    is_ring,
    join,
    meet,
    span_closure,
)
from .table import DEFAULT_CAPS, Caps, RingTable, validate

__all__ = [name for name in dir() if not name.startswith("_")]
