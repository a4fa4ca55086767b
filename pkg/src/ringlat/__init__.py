"""Lattices of intermediate rings of finite commutative ring extensions.

Rings are free (Z/n)^d modules given by structure constants; subrings are
held in Howell normal form. The package enumerates [R, S], classifies its
covers, tests lattice properties and decides whether T + U is a ring for
all intermediate T, U by three independent routes.
"""
from .analysis import Analysis
from .closures import canonical_decomposition, classify_type, seminormalization, t_closure
from .delta import (
    DeltaVerdict,
    is_delta_bruteforce,
    is_delta_characterized,
    is_delta_generators,
    is_simple,
    is_small_delta,
    pointwise_minimal,
)
from .extlattice import IntervalLattice, classify_minimal, enumerate_interval, is_minimal
from .finring import Extension, RingTable, span_closure, validate
from .latprops import lattice_report

__version__ = "0.1.0"
