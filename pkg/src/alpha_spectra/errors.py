"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
1 for invalid input, 2 for numerical failures, 3 when a size cap is hit.
"""


class AlphaSpectraError(Exception):
    exit_code = 1


class ValidationError(AlphaSpectraError, ValueError):
    """Input does not satisfy an operation's preconditions."""


class DuplicateRelation(ValidationError):
    pass


class SelfLoop(ValidationError):
    pass


class LabelOutOfRange(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class Disconnected(ValidationError):
    pass


class ParameterOutOfRange(ValidationError):
    pass


class AlphaOutOfRange(ParameterOutOfRange):
    pass


class NotATree(ValidationError):
    pass


class HasUndirectedEdge(ValidationError):
    pass


class ArcBetweenAB(ValidationError):
    pass


class NegativeEntry(ValidationError):
    pass


class BadPartition(ValidationError):
    pass


class NotEquitable(ValidationError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SymmetryViolation(ValidationError):
    pass


class BoundViolation(ValidationError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonConvergence(AlphaSpectraError, ArithmeticError):
    exit_code = 2


class SizeLimitExceeded(AlphaSpectraError):
    exit_code = 3
