"""Exception hierarchy shared by every module in the package."""


class WeighcodesError(Exception):
    """Base class for all library errors."""


class NotPrimePower(WeighcodesError, ValueError):
    pass


class NotOddPrimePower(NotPrimePower):
    pass


class EvenCharacteristic(WeighcodesError, ValueError):
    pass


class FieldMismatch(WeighcodesError, ValueError):
    pass


class FieldTooLarge(WeighcodesError, ValueError):
    pass


class ShapeMismatch(WeighcodesError, ValueError):
    pass


class NonSquare(ShapeMismatch):
    pass


class NotTernary(WeighcodesError, ValueError):
    pass


class NotWeighing(WeighcodesError, ValueError):
    pass


class NotBalanced(WeighcodesError, ValueError):
    pass


class NoPivotColumn(WeighcodesError, ValueError):
    pass


class LengthMismatch(WeighcodesError, ValueError):
    pass


class DuplicateRow(WeighcodesError, ValueError):
    pass


class ZeroRow(WeighcodesError, ValueError):
    pass


class NonIntegerLambda(WeighcodesError, ValueError):
    pass


class NonIntegerDistance(WeighcodesError, ValueError):
    pass


class ConditionViolated(WeighcodesError, ValueError):
    pass


class BoundMismatch(WeighcodesError, AssertionError):
    """A closed-form bound identity evaluated to the wrong value."""


class SizeCapExceeded(WeighcodesError):
    pass


class PropertyCheckFailed(WeighcodesError):
    """A constructed object failed the self-check its construction promises."""


class ParseError(WeighcodesError, ValueError):
    pass
