from typing import Any, Optional


class MvHodgeError(Exception):
    pass


class UserInputError(MvHodgeError, ValueError):
    """
    Raised for invalid parameters supplied by a caller (bad partition strings, out-of-range genus, ...). The CLI maps
    it to exit code 2.
    """
    pass


class DimensionError(UserInputError):
    def __init__(self, g: int, n: int, degree: int):
        self.g = g
        self.n = n
        self.degree = degree
        super().__init__(f"Integrand of degree {degree} on M_{{{g},{n}}} does not match the dimension {3 * g - 3 + n}")


class ConsistencyError(MvHodgeError, ArithmeticError):
    """
    Raised when an exact computation contradicts a structural expectation. Never tolerated silently; the CLI maps it
    to exit code 3.
    """
    pass


class InexactDivisionError(ConsistencyError):
    def __init__(self, quotient: Any, remainder: Any, message: Optional[str] = None):
        self.quotient = quotient
        self.remainder = remainder
        super().__init__(message if message is not None else f"Division is not exact, remainder {remainder}")


class TruncationError(ConsistencyError):
    pass


class ImaginaryResidueError(ConsistencyError):
    pass


class InterpolationError(ConsistencyError):
    pass
