"""Everything computed about one extension, evaluated lazily and cached."""
from functools import cached_property

from .closures import canonical_decomposition, classify_type
from .delta import (
    DECOMPOSITION_CRITERION,
    generators_failure,
    is_delta_bruteforce,
    is_delta_characterized,
    is_simple,
    pointwise_minimal,
    small_delta_failure,
)
from .errors import NotLocal
from .extlattice import enumerate_interval
from .latprops import is_arithmetic, lattice_report


class Analysis:
    def __init__(self, extension, budget=None):
        self.extension = extension
        self.budget = budget

    @cached_property
    def lattice(self):
        return enumerate_interval(self.extension, budget=self.budget)

    @cached_property
    def decomposition(self):
        return canonical_decomposition(self.extension)

    @cached_property
    def type_flags(self):
        E = self.extension
        return classify_type(E.R, E.top)

    @cached_property
    def arithmetic(self):
        return is_arithmetic(self.extension, self.lattice)

    @cached_property
    def report(self):
        return lattice_report(self.lattice, self.decomposition, self.arithmetic)

    @cached_property
    def bruteforce(self):
        return is_delta_bruteforce(self.lattice)

    @cached_property
    def generators_witness(self):
        return generators_failure(self.extension)

    @property
    def generators(self):
        return self.generators_witness is None

    @cached_property
    def characterized(self):
        return is_delta_characterized(self.extension, self.lattice, self.decomposition)

    @cached_property
    def criterion(self):
        """The canonical-decomposition criterion, applied whatever the dispatch says."""
        return is_delta_characterized(
            self.extension, self.lattice, self.decomposition, route=DECOMPOSITION_CRITERION
        )

    @property
    def delta(self):
        return self.bruteforce.is_delta

    @property
    def routes_agree(self):
        verdicts = {self.bruteforce.is_delta, self.generators, self.characterized.is_delta}
        return len(verdicts) == 1

    @cached_property
    def small_delta_witness(self):
        return small_delta_failure(self.extension)

    @property
    def small_delta(self):
        return self.small_delta_witness is None

    @cached_property
    def simple_generator(self):
        return is_simple(self.extension)

    @cached_property
    def pointwise(self):
        """Pointwise-minimal classification, or None when R is not local."""
        try:
            return pointwise_minimal(self.extension)
        except NotLocal:
            return None

    def node_of(self, T):
        return self.lattice.node_index(T)
