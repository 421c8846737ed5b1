"""Exception hierarchy for conecut."""


class ConeCutError(Exception):
    """Base class for all errors raised by conecut."""


class DimensionMismatch(ConeCutError, ValueError):
    pass


class NonFinite(ConeCutError, ValueError):
    pass


class NegativeTarget(ConeCutError, ValueError):
    """Raised when a component of the dual target vector ``b`` is negative."""

    def __init__(self, index, value):
        self.index = index
        self.value = value
        super().__init__(f"b[{index}] = {value!r} is negative; b >= 0 is required")


class IndexOutOfRange(ConeCutError, IndexError):
    pass


class ZeroPivot(ConeCutError, ArithmeticError):
    pass


class LidBelowVertex(ConeCutError, ValueError):
    pass


class InvalidCut(ConeCutError, ValueError):
    pass


class NotACutter(ConeCutError, ValueError):
    pass


class EmptyFeasibleRegion(ConeCutError):
    """A cutter rejects the whole cone, so the dual feasible region is empty."""

    def __init__(self, column):
        self.column = column
        super().__init__(f"column {column} cuts off every point of the cone")


class NoFishingEdge(ConeCutError):
    pass


class ZeroDirection(ConeCutError, ValueError):
    pass


class NotFeasible(ConeCutError, ValueError):
    pass


class NotStrictlyNormal(ConeCutError):
    pass


class DualUnboundedBelow(ConeCutError):
    pass


class DegenerateWeights(ConeCutError):
    pass


class NotOptimalTableau(ConeCutError):
    pass


class TooLarge(ConeCutError, ValueError):
    pass


class OutOfRange(ConeCutError, ValueError):
    pass


class ParseError(ConeCutError, ValueError):
    """Malformed LPT input; ``line`` is 1-based."""

    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
