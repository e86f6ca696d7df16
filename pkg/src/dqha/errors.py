"""Exception hierarchy shared by every module of the package."""


class DQHAError(Exception):
    """Base class for all package errors."""


class ArityMismatch(DQHAError):
    pass


class DimensionMismatch(DQHAError):
    pass


class ShapeMismatch(DimensionMismatch):
    pass


class NoSolution(DQHAError):
    pass


class NonInvertible(DQHAError):
    pass


class ArityCapExceeded(DQHAError):
    pass


class NotNormalized(DQHAError):
    pass


class AntipodeNotInvertible(DQHAError):
    pass


class ValidationFailed(DQHAError):
    """A derived structure did not satisfy the identities it must satisfy.

    ``report`` carries the failing checks when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ActionFormsDisagree(ValidationFailed):
    pass


class FlavorMismatch(DQHAError):
    pass


class NotYDMorphism(ValidationFailed):
    pass


class SnakeFailed(ValidationFailed):
    pass


class InvalidGroupTable(DQHAError):
    pass


class NotACocycle(DQHAError):
    pass


class ConstraintViolated(DQHAError):
    """A one-dimensional module candidate failed an axiom.

    ``axiom`` names the failed check, ``constraint`` is a human readable
    equation that the parameter would have to satisfy.
    """

    def __init__(self, message, axiom=None, constraint=None):
        super().__init__(message)
        self.axiom = axiom
        self.constraint = constraint


class ParseError(DQHAError):
    pass


class ShapeError(DQHAError):
    pass
