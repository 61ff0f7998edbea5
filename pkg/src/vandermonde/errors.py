"""Exception hierarchy.

Every error raised by the library derives from :class:`VandermondeError`,
so callers (the CLI in particular) can catch library failures in one place.
"""


class VandermondeError(Exception):
    """Base class for all library errors."""


# -- series engine ---------------------------------------------------------

class NonzeroConstantTerm(VandermondeError, ValueError):
    pass


class ConstantTermNotOne(VandermondeError, ValueError):
    pass


class NonInvertibleConstant(VandermondeError, ZeroDivisionError):
    pass


class IndexBeyondTruncation(VandermondeError, IndexError):
    pass


class RingMismatch(VandermondeError, TypeError):
    pass


# -- convolution families --------------------------------------------------

class NonzeroPsi0(VandermondeError, ValueError):
    pass


class NotIdempotentConstant(VandermondeError, ValueError):
    pass


class NotConvolutionFamily(VandermondeError, ValueError):
    pass


class UnknownCatalogKey(VandermondeError, LookupError):
    pass


# -- Sheffer triples -------------------------------------------------------

class InvalidSpec(VandermondeError, ValueError):
    pass


class NotGeneralizedFamily(VandermondeError, ValueError):
    pass


# -- Pascal-like matrices --------------------------------------------------

class RowOutOfRange(VandermondeError, IndexError):
    pass


class InsufficientOrder(VandermondeError, ValueError):
    pass


class NonInvertibleCorner(VandermondeError, ValueError):
    pass


class NotPascalLike(VandermondeError, ValueError):
    pass


class CornerNotOne(NotPascalLike):
    """The (0, 0) entry of a single-matrix solution is invertible but not 1.

    The identity at i = l = n = 0 reads ``l00 * l00 == l00``, so this is also
    a violation of the Pascal-like identity; it is reported separately because
    it is the first thing the classifier inspects.
    """


class FormViolation(VandermondeError, ArithmeticError):
    pass


class HypothesesNotMet(VandermondeError, ValueError):
    pass


class HNotUnitConstant(VandermondeError, ValueError):
    pass
