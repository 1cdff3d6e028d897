class AlgebraError(Exception):
    """Base class for every failure raised by the algebra kernel.

    The reason is given as the exception message.
    """

class SpaceMismatch(AlgebraError):
    """Raised when two operands were built over different super spaces."""

class FormError(AlgebraError):
    """Raised when a Gram or symplectic matrix is malformed, degenerate when it must not be,
    or when a space lacks the Witt structure an operation needs.
    """

class OrderError(AlgebraError):
    """Raised when an operand has the wrong order, is not homogeneous, or a slot count is out of range."""

class StarError(AlgebraError):
    """Raised when a star structure is missing or is not compatible with the form."""

class EmbeddingError(AlgebraError):
    """ Raised when a matrix is not in o(V), sp(V) or osp(V), or its linear system has no solution. """

class ParseError(AlgebraError):
    """Raised on a malformed expression. `column` is 1-based."""
    def __init__(self, message: str, column: int | None = None) -> None:
        self.column = column
        if column is not None:
            message = f'{message} at column {column}'
        super().__init__(message)

class EvaluationError(AlgebraError):
    """ Raised when an expression combines scalars and elements, or exterior and symmetric parts, illegally. """

class UsageError(SystemExit):
    """Can be raised to leave the command line with exit code 2."""
    def __init__(self, message: str = '') -> None:
        self.message = message
        super().__init__(2)
