"""Exception types raised across the package."""


class RingLatError(Exception):
    """Base class for every error raised by ringlat."""


class ValidationError(RingLatError):
    """A ring table violates one of the ring axioms."""


class BadDimensions(ValidationError):
    def __init__(self, detail):
        super().__init__(f"bad dimensions: {detail}")
        self.detail = detail


class NonCommutative(ValidationError):
    """Witness indices are 1-based, matching the c_ij notation."""

    def __init__(self, i, j):
        super().__init__(f"non-commutative: c_{i}{j} != c_{j}{i}")
        self.indices = (i, j)


class NonAssociative(ValidationError):
    def __init__(self, i, j, k):
        super().__init__(f"non-associative: (e_{i} e_{j}) e_{k} != e_{i} (e_{j} e_{k})")
        self.indices = (i, j, k)


class BadUnit(ValidationError):
    def __init__(self, i):
        super().__init__(f"unit does not fix basis vector e_{i}")
        self.index = i


class CapExceeded(RingLatError):
    pass


class NodeBudgetExceeded(RingLatError):
    def __init__(self, budget, partial):
        super().__init__(f"node budget {budget} exceeded ({partial} nodes found so far)")
        self.budget = budget
        self.partial = partial


class AmbientMismatch(RingLatError):
    pass


class NotSharedIdeal(RingLatError):
    pass


class NotMaximal(RingLatError):
    pass


class NotMinimal(RingLatError):
    pass


class NotComparable(RingLatError):
    pass


class ClassificationContradiction(RingLatError):
    pass


class NotLocal(RingLatError):
    pass


class NotFree(RingLatError):
    """The additive group is not a free module over any Z/m."""


class UnknownName(RingLatError):
    pass
