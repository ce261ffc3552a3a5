"""Domain error types.

Everything raised on bad mathematical input derives from AlgebraError, so
callers (and the command line driver) can catch one class.
"""


class AlgebraError(ValueError):
    """Base class for all domain errors raised by this package."""


# partition construction and combinatorics

class NotWeaklyDecreasing(AlgebraError):
    pass


class NegativePart(AlgebraError):
    pass


class WeightMismatch(AlgebraError):
    pass


class LengthTooSmall(AlgebraError):
    pass


class TooManyParts(AlgebraError):
    pass


# coefficient field

class DivisionByZero(AlgebraError):
    pass


class PoleAtValue(AlgebraError):
    pass


class NonIntegerBeta(AlgebraError):
    pass


# polynomial ring

class ContextMismatch(AlgebraError):
    pass


class IndexOutOfRange(AlgebraError):
    pass


class NonzeroRemainder(AlgebraError):
    pass


class LaurentInput(AlgebraError):
    pass


class NotSymmetric(AlgebraError):
    pass


class NotHomogeneous(AlgebraError):
    pass


class DegreeExceedsVariables(AlgebraError):
    pass


class BasisMismatch(AlgebraError):
    pass


class DegreeMismatch(AlgebraError):
    pass


# operator index sets

class EmptyIndexSet(AlgebraError):
    pass


class BadCardinality(AlgebraError):
    pass


# linear solvers

class DegenerateDiagonal(AlgebraError):
    pass


class DegenerateLeadingTerm(AlgebraError):
    pass


class InconsistentSystem(AlgebraError):
    pass
