"""Exception types raised across the package.

The CLI reports errors by class name, so names here are part of the
user-facing contract.
"""


class XorCliqueError(ValueError):
    """Base class for all domain errors."""


class NotPrimePower(XorCliqueError):
    pass


class DivisionByZero(XorCliqueError, ZeroDivisionError):
    pass


class FieldTooLarge(XorCliqueError):
    pass


class MixedFields(XorCliqueError):
    pass


class OrderMismatch(XorCliqueError):
    pass


class NotLatin(XorCliqueError):
    pass


class TooManySquares(XorCliqueError):
    pass


class NotOrthogonal(XorCliqueError):
    pass


class NotLatinFamily(XorCliqueError):
    pass


class TooFewBlocks(XorCliqueError):
    pass


class InvalidParams(XorCliqueError):
    pass


class UnbalancedWeights(XorCliqueError):
    pass


class ShrinkNotAllowed(XorCliqueError):
    pass


class TooManyCopies(XorCliqueError):
    pass


class NTooSmall(XorCliqueError):
    pass


class PTooLarge(XorCliqueError):
    pass


class TooLarge(XorCliqueError):
    pass


class ParamMismatch(XorCliqueError):
    pass


class NotAClique(XorCliqueError):
    pass


class MalformedFamily(XorCliqueError):
    pass
