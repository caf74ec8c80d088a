"""Exception types raised by schema, matrix and pipeline validation."""


class McpiError(ValueError):
    """Base class for all validation and computation errors."""


# --- schema ---------------------------------------------------------------

class DuplicateIndicatorId(McpiError):
    pass


class EmptyDimension(McpiError):
    pass


class NonPositiveWeight(McpiError):
    pass


class MixedWeightPresence(McpiError):
    """Some indicators carry a weight while others do not."""


# --- decision matrix ------------------------------------------------------

class ColumnCountMismatch(McpiError):
    pass


class NonFiniteValue(McpiError):
    """A cell is NaN, infinite, or could not be parsed as a number."""

    def __init__(self, message, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class ZeroNormColumn(McpiError):
    """Column of all zeros; vector normalization would divide by zero."""


class ConstantColumn(McpiError):
    """All alternatives share one value; ideal and anti-ideal coincide."""


class DuplicateAlternative(McpiError):
    pass


class InsufficientObservations(McpiError):
    """Too few rows for the requested statistic."""


# --- distances and closeness ----------------------------------------------

class LengthMismatch(McpiError):
    pass


class InvalidOrder(McpiError):
    """Finite Minkowski order below 1."""


class DegenerateCriterion(McpiError):
    """Ideal equals anti-ideal for a criterion."""


class DegenerateDimension(McpiError):
    """Zero separation denominator within a dimension."""


class EmptyDimensionList(McpiError):
    pass


# --- ranking / exclusion --------------------------------------------------

class UnknownDimension(McpiError):
    pass


class LastDimension(McpiError):
    """Cannot exclude the only remaining dimension."""


# --- cli ------------------------------------------------------------------

class UnwritableOutput(McpiError):
    pass
