"""Seeded random extensions: products of small blocks with a random base ring."""
import random
from dataclasses import dataclass
from functools import reduce

from ..analysis import Analysis
from ..errors import NodeBudgetExceeded, NotFree
from ..finring import DEFAULT_CAPS, Extension, product, span_closure
from .blocks import galois_field, residue_ring, square_zero, truncated

BLOCKS = {
    "F2": lambda: residue_ring(2),
    "F3": lambda: residue_ring(3),
    "F4": lambda: galois_field(2, 2),
    "F2[t]/(t^2)": lambda: truncated(2, 2),
    "F2[t]/(t^3)": lambda: truncated(2, 3),
    "F3[t]/(t^2)": lambda: truncated(3, 2),
    "Z/4": lambda: residue_ring(4),
    "Z/8": lambda: residue_ring(8),
    "F2[x,y]/(x^2,xy,y^2)": lambda: square_zero(2, 2),
}

DEFAULT_MAX_NODES = DEFAULT_CAPS.node_budget
MAX_ATTEMPTS = 1000


@dataclass
class FuzzInstance:
    seed: int
    attempt: int
    blocks: tuple
    extra: tuple
    extension: Extension
    analysis: Analysis


def draw(rng, max_blocks=3, max_extra=2):
    """One random (blocks, extension) pair; raises NotFree for unpresentable products."""
    names = tuple(rng.choice(sorted(BLOCKS)) for _ in range(rng.randint(1, max_blocks)))
    S = reduce(product, [BLOCKS[n]() for n in names])
    extra = tuple(S.decode(rng.randrange(S.size)) for _ in range(rng.randint(0, max_extra)))
    R = span_closure(S, list(extra))
    return names, extra, Extension(S, R, name="+".join(names))


def fuzz_instance(seed, max_blocks=3, max_extra=2, max_nodes=DEFAULT_MAX_NODES):
    """The first valid draw for ``seed``.

    Draws that cannot be presented as a free module or whose lattice has
    more than ``max_nodes`` nodes are discarded and the next attempt
    (a fresh generator keyed on seed and attempt number) is used.
    """
    for attempt in range(MAX_ATTEMPTS):
        rng = random.Random(f"{seed}/{attempt}")
        try:
            names, extra, E = draw(rng, max_blocks, max_extra)
        except NotFree:
            continue
        a = Analysis(E, budget=max_nodes)
        try:
            a.lattice
        except NodeBudgetExceeded:
            continue
        return FuzzInstance(seed, attempt, names, extra, E, a)
    raise RuntimeError(f"no admissible instance for seed {seed}")
