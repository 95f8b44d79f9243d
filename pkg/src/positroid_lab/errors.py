"""Exception hierarchy shared by every module."""


class PositroidLabError(Exception):
    """Base class for all library errors."""


class DimensionError(PositroidLabError, ValueError):
    """Matrix shape does not fit the operation."""


class ContractError(PositroidLabError, ValueError):
    """An argument violates an operation's precondition."""


class AxiomError(PositroidLabError, ValueError):
    """A basis collection fails (B1) or (B2)."""


class LabelingError(PositroidLabError, ValueError):
    """Interval data is not a proper labeling of a unit interval order."""


class OrderError(PositroidLabError, ValueError):
    """A relation is not a partial order (cyclic or not antisymmetric)."""
