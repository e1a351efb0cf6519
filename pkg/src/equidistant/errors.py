"""Exception hierarchy shared by all modules.

Every error a caller can trigger with bad input derives from
``EquidistantError`` (itself a ``ValueError``) so the CLI can map them to
exit code 2 in one place.
"""


class EquidistantError(ValueError):
    pass


class InvalidParameters(EquidistantError):
    pass


class NotPrimePower(InvalidParameters):
    pass


class FieldMismatch(EquidistantError):
    pass


class DivisionByZero(EquidistantError, ZeroDivisionError):
    pass


class ShapeMismatch(EquidistantError):
    pass


class WeightMismatch(EquidistantError):
    pass


class InvalidPermutation(EquidistantError):
    pass


class WordNotInCode(EquidistantError):
    pass


class DuplicateWord(EquidistantError):
    pass


class NotEquidistant(EquidistantError):
    pass


class NonSquare(EquidistantError):
    pass


class InvalidSize(InvalidParameters):
    pass


class SizeMismatch(EquidistantError):
    pass


class NotConstantWeight(EquidistantError):
    pass


class NotSingleIntersection(EquidistantError):
    pass


class OddDistance(InvalidParameters):
    pass


class CapExceeded(EquidistantError):
    pass
