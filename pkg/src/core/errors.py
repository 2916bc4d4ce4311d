"""
Error hierarchy for deskcalc
Each error carries the process exit code the command line reports for it
"""

from typing import Optional


class DeskCalcError(Exception):
    """Base class for every error raised by the library"""

    exit_code: int = 2

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UsageError(DeskCalcError, ValueError):
    """Invalid arguments or a violated precondition"""

    exit_code = 1


class ExpressionSyntaxError(UsageError):
    """Expression text could not be parsed"""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

    def caret(self) -> str:
        """Render the text with a marker under the offending character"""
        return f"{self.text}\n{' ' * self.position}^"


class UnknownIdentifierError(ExpressionSyntaxError):
    """An identifier other than the variable x"""


class UnknownFunctionError(ExpressionSyntaxError):
    """A call to a function name that is not supported"""


class InputDataError(UsageError):
    """Malformed CSV input or an unusable grouping"""


class DomainError(DeskCalcError, ArithmeticError):
    """Evaluation outside the domain of an operation"""

    exit_code = 2

    def __init__(self, message: str, expression: Optional[str] = None, x: Optional[float] = None):
        self.expression = expression
        self.x = x
        detail = message
        if expression is not None:
            detail = f"{message} in '{expression}'"
        if x is not None:
            detail = f"{detail} at x={x!r}"
        super().__init__(detail)


class NumericalError(DeskCalcError, ArithmeticError):
    """An iterative method failed, or the data admit no statistic"""

    exit_code = 2


# process exit codes outside the error hierarchy
EXIT_SUCCESS = 0
EXIT_NOT_CONVERGED = 3
