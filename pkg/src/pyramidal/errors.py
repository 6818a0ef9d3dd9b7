"""Exception hierarchy shared by every module of the package."""


class PyramidalError(Exception):
    """Base class; carries an exit code used by the command line."""

    exit_code = 1


class ValidationFailed(PyramidalError):
    exit_code = 2

    def __init__(self, message, check=None):
        super().__init__(message)
        self.check = check


class ParseError(ValidationFailed):
    pass


class DegreeMismatch(ValidationFailed):
    pass


class NotNormal(ValidationFailed):
    pass


class ActionNotAutomorphism(ValidationFailed):
    pass


class ActionNotHomomorphism(ValidationFailed):
    pass


class EvenOrderH(ValidationFailed):
    pass


class EvenOrderY(ValidationFailed):
    pass


class NoIndex3NormalSubgroup(ValidationFailed):
    pass


class InvalidAOrder(ValidationFailed):
    pass


class ReferenceDataMissing(ValidationFailed):
    pass


class NotAbelian(ValidationFailed):
    pass


class Not2Group(ValidationFailed):
    pass


class NotSolvable(ValidationFailed):
    pass


class CapExceeded(PyramidalError):
    exit_code = 4


class BudgetExceeded(PyramidalError):
    exit_code = 4
