"""Exception hierarchy shared by all modules."""


class SeidelError(Exception):
    """Base class for errors raised by this package."""


class InvalidOrderError(SeidelError, ValueError):
    """A graph family was requested with a non-positive order."""


class InvalidParameterError(SeidelError, ValueError):
    """A parameter is outside the domain of the operation."""


class UnsupportedFieldError(InvalidParameterError):
    """Paley graphs are only built over prime fields."""


class GraphParseError(SeidelError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConvergenceError(SeidelError, ArithmeticError):
    def __init__(self, message, residual):
        self.residual = residual
        super().__init__(f"{message} (residual {residual:.3e})")


class NearPoleError(SeidelError, ArithmeticError):
    def __init__(self, t, value):
        self.t = t
        self.value = value
        super().__init__(f"|Phi(it)| = {abs(value):.3e} too small at t = {t!r}")
