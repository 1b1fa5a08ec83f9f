"""Exception types shared across the counting modules."""


class SytError(ValueError):
    """Base class for every error raised by this package."""


class NotAPartition(SytError):
    pass


class HeightExceedsR(SytError):
    pass


class HeightExceedsThree(HeightExceedsR):
    pass


class DimensionMismatch(SytError):
    pass


class BoxOverflow(SytError):
    pass


class InternalNonInteger(ArithmeticError):
    """Exact division failed. Always a bug, never a user error."""


class ToleranceExceeded(SytError):
    pass


class PrecisionBudgetExceeded(SytError):
    pass


class ShapeTooLarge(SytError):
    pass
