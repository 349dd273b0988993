"""Exception hierarchy shared by the whole package."""


class SpinSqueezeError(Exception):
    """Base class for every error raised by spinsqueeze."""


class ArgumentError(SpinSqueezeError, ValueError):
    """An argument violates a documented precondition."""


class UndefinedSqueezingError(SpinSqueezeError, ArithmeticError):
    """The squeezing denominator vanishes: mean spin is zero or parallel to n1."""


class ParseError(SpinSqueezeError, ValueError):
    """Malformed F(N) expression.

    Attributes
    ----------
    position : int
        Zero-based character offset into the source string.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class EvaluationError(SpinSqueezeError, ArithmeticError):
    """F(n) produced a non-finite value."""

    def __init__(self, source, n, value=None):
        detail = f" (got {value!r})" if value is not None else ""
        super().__init__(f"F(N) = {source!r} is not finite at n={n}{detail}")
        self.source = source
        self.n = n


class ConfigError(SpinSqueezeError, ValueError):
    """Invalid sweep configuration or command-line input."""
