"""Exception hierarchy shared by all latred modules."""


class LatredError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(LatredError):
    pass


class DependentRows(LatredError):
    pass


class Singular(LatredError):
    pass


class NotInSpan(LatredError):
    pass


class NotInLattice(LatredError):
    pass


class DependentTuple(LatredError):
    pass


class NotFullRank(LatredError):
    pass


class NotPrimitive(LatredError):
    pass


class WrongRank(LatredError):
    pass


class PreconditionViolated(LatredError):
    pass


class BudgetExceeded(LatredError):
    """Enumeration node budget exhausted; the instance is out of desk scale."""


class DegenerateHeights(LatredError):
    pass


class UnsupportedFieldOrder(LatredError):
    pass


class ConstructionMismatch(LatredError):
    pass


class UnknownConstruction(LatredError):
    pass


class BadParams(LatredError):
    pass


class ParseError(LatredError):
    pass
